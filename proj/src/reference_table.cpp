#include "hfunc/reference_table.hpp"

#include <cmath>

#include "hfunc/errors.hpp"

namespace hfunc {

namespace {

// Chandrasekhar, Radiative Transfer (Dover, 1960), isotropic-scattering
// H-function table, transcribed together with the closed-form column it
// anchors. Omega-major; mu = 0.00(0.05)1.00 within each block.
const ReferenceCell table[210] = {
    // omega = 0.1
    {0.00, 0.1, 1.00000, 1.00000},
    {0.05, 0.1, 1.00783, 1.00783},
    {0.10, 0.1, 1.01238, 1.01241},
    {0.15, 0.1, 1.01584, 1.01589},
    {0.20, 0.1, 1.01864, 1.01869},
    {0.25, 0.1, 1.02099, 1.02105},
    {0.30, 0.1, 1.02300, 1.02306},
    {0.35, 0.1, 1.02475, 1.02482},
    {0.40, 0.1, 1.02630, 1.02636},
    {0.45, 0.1, 1.02768, 1.02774},
    {0.50, 0.1, 1.02892, 1.02898},
    {0.55, 0.1, 1.03004, 1.03010},
    {0.60, 0.1, 1.03106, 1.03112},
    {0.65, 0.1, 1.03199, 1.03205},
    {0.70, 0.1, 1.03284, 1.03290},
    {0.75, 0.1, 1.03363, 1.03369},
    {0.80, 0.1, 1.03436, 1.03442},
    {0.85, 0.1, 1.03504, 1.03510},
    {0.90, 0.1, 1.03567, 1.03573},
    {0.95, 0.1, 1.03626, 1.03632},
    {1.00, 0.1, 1.03682, 1.03687},
    // omega = 0.2
    {0.00, 0.2, 1.00000, 1.00000},
    {0.05, 0.2, 1.01608, 1.01615},
    {0.10, 0.2, 1.02562, 1.02578},
    {0.15, 0.2, 1.03295, 1.03314},
    {0.20, 0.2, 1.03892, 1.03914},
    {0.25, 0.2, 1.04396, 1.04419},
    {0.30, 0.2, 1.04829, 1.04855},
    {0.35, 0.2, 1.05209, 1.05235},
    {0.40, 0.2, 1.05546, 1.05572},
    {0.45, 0.2, 1.05847, 1.05874},
    {0.50, 0.2, 1.06117, 1.06145},
    {0.55, 0.2, 1.06363, 1.06390},
    {0.60, 0.2, 1.06587, 1.06615},
    {0.65, 0.2, 1.06793, 1.06820},
    {0.70, 0.2, 1.06982, 1.07009},
    {0.75, 0.2, 1.07157, 1.07183},
    {0.80, 0.2, 1.07319, 1.07345},
    {0.85, 0.2, 1.07469, 1.07495},
    {0.90, 0.2, 1.07610, 1.07635},
    {0.95, 0.2, 1.07741, 1.07767},
    {1.00, 0.2, 1.07864, 1.07889},
    // omega = 0.3
    {0.00, 0.3, 1.00000, 1.00000},
    {0.05, 0.3, 1.02484, 1.02505},
    {0.10, 0.3, 1.03989, 1.04027},
    {0.15, 0.3, 1.05155, 1.05204},
    {0.20, 0.3, 1.06115, 1.06171},
    {0.25, 0.3, 1.06930, 1.06991},
    {0.30, 0.3, 1.07637, 1.07701},
    {0.35, 0.3, 1.08259, 1.08325},
    {0.40, 0.3, 1.08811, 1.08880},
    {0.45, 0.3, 1.09308, 1.09377},
    {0.50, 0.3, 1.09756, 1.09827},
    {0.55, 0.3, 1.10164, 1.10235},
    {0.60, 0.3, 1.10538, 1.10608},
    {0.65, 0.3, 1.10881, 1.10951},
    {0.70, 0.3, 1.11198, 1.11268},
    {0.75, 0.3, 1.11491, 1.11560},
    {0.80, 0.3, 1.11763, 1.11832},
    {0.85, 0.3, 1.12017, 1.12085},
    {0.90, 0.3, 1.12254, 1.12322},
    {0.95, 0.3, 1.12476, 1.12543},
    {1.00, 0.3, 1.12685, 1.12751},
    // omega = 0.4
    {0.00, 0.4, 1.00000, 1.00000},
    {0.05, 0.4, 1.03422, 1.03465},
    {0.10, 0.4, 1.05535, 1.05615},
    {0.15, 0.4, 1.07196, 1.07298},
    {0.20, 0.4, 1.08577, 1.08693},
    {0.25, 0.4, 1.09758, 1.09885},
    {0.30, 0.4, 1.10789, 1.10924},
    {0.35, 0.4, 1.11700, 1.11842},
    {0.40, 0.4, 1.12516, 1.12661},
    {0.45, 0.4, 1.13251, 1.13399},
    {0.50, 0.4, 1.13918, 1.14068},
    {0.55, 0.4, 1.14528, 1.14678},
    {0.60, 0.4, 1.15087, 1.15238},
    {0.65, 0.4, 1.15602, 1.15753},
    {0.70, 0.4, 1.16080, 1.16230},
    {0.75, 0.4, 1.16523, 1.16672},
    {0.80, 0.4, 1.16935, 1.17084},
    {0.85, 0.4, 1.17320, 1.17468},
    {0.90, 0.4, 1.17681, 1.17827},
    {0.95, 0.4, 1.18019, 1.18165},
    {1.00, 0.4, 1.18337, 1.18482},
    // omega = 0.5
    {0.00, 0.5, 1.00000, 1.00000},
    {0.05, 0.5, 1.04439, 1.04512},
    {0.10, 0.5, 1.07241, 1.07378},
    {0.15, 0.5, 1.09474, 1.09652},
    {0.20, 0.5, 1.11349, 1.11556},
    {0.25, 0.5, 1.12968, 1.13197},
    {0.30, 0.5, 1.14391, 1.14637},
    {0.35, 0.5, 1.15659, 1.15917},
    {0.40, 0.5, 1.16800, 1.17067},
    {0.45, 0.5, 1.17833, 1.18107},
    {0.50, 0.5, 1.18776, 1.19054},
    {0.55, 0.5, 1.19640, 1.19922},
    {0.60, 0.5, 1.20436, 1.20721},
    {0.65, 0.5, 1.21173, 1.21459},
    {0.70, 0.5, 1.21858, 1.22143},
    {0.75, 0.5, 1.22495, 1.22780},
    {0.80, 0.5, 1.23091, 1.23375},
    {0.85, 0.5, 1.23648, 1.23931},
    {0.90, 0.5, 1.24171, 1.24453},
    {0.95, 0.5, 1.24664, 1.24943},
    {1.00, 0.5, 1.25128, 1.25405},
    // omega = 0.6
    {0.00, 0.6, 1.00000, 1.00000},
    {0.05, 0.6, 1.05544, 1.05673},
    {0.10, 0.6, 1.09137, 1.09371},
    {0.15, 0.6, 1.12045, 1.12351},
    {0.20, 0.6, 1.14517, 1.14877},
    {0.25, 0.6, 1.16674, 1.17075},
    {0.30, 0.6, 1.18587, 1.19020},
    {0.35, 0.6, 1.20304, 1.20762},
    {0.40, 0.6, 1.21861, 1.22337},
    {0.45, 0.6, 1.23280, 1.23771},
    {0.50, 0.6, 1.24581, 1.25084},
    {0.55, 0.6, 1.25781, 1.26292},
    {0.60, 0.6, 1.26893, 1.27409},
    {0.65, 0.6, 1.27925, 1.28446},
    {0.70, 0.6, 1.28888, 1.29411},
    {0.75, 0.6, 1.29788, 1.30312},
    {0.80, 0.6, 1.30631, 1.31156},
    {0.85, 0.6, 1.31424, 1.31948},
    {0.90, 0.6, 1.32171, 1.32694},
    {0.95, 0.6, 1.32875, 1.33396},
    {1.00, 0.6, 1.33541, 1.34059},
    // omega = 0.7
    {0.00, 0.7, 1.00000, 1.00000},
    {0.05, 0.7, 1.06780, 1.06990},
    {0.10, 0.7, 1.11306, 1.11688},
    {0.15, 0.7, 1.15036, 1.15541},
    {0.20, 0.7, 1.18253, 1.18854},
    {0.25, 0.7, 1.21095, 1.21772},
    {0.30, 0.7, 1.23643, 1.24382},
    {0.35, 0.7, 1.25951, 1.26741},
    {0.40, 0.7, 1.28063, 1.28891},
    {0.45, 0.7, 1.30003, 1.30863},
    {0.50, 0.7, 1.31796, 1.32681},
    {0.55, 0.7, 1.33459, 1.34366},
    {0.60, 0.7, 1.35009, 1.35931},
    {0.65, 0.7, 1.36457, 1.37392},
    {0.70, 0.7, 1.37815, 1.38759},
    {0.75, 0.7, 1.39090, 1.40041},
    {0.80, 0.7, 1.40291, 1.41247},
    {0.85, 0.7, 1.41425, 1.42383},
    {0.90, 0.7, 1.42497, 1.43456},
    {0.95, 0.7, 1.43512, 1.44471},
    {1.00, 0.7, 1.44476, 1.45433},
    // omega = 0.8
    {0.00, 0.8, 1.00000, 1.00000},
    {0.05, 0.8, 1.08200, 1.08548},
    {0.10, 0.8, 1.13880, 1.14506},
    {0.15, 0.8, 1.18660, 1.19504},
    {0.20, 0.8, 1.22860, 1.23880},
    {0.25, 0.8, 1.26630, 1.27794},
    {0.30, 0.8, 1.30060, 1.31342},
    {0.35, 0.8, 1.33200, 1.34588},
    {0.40, 0.8, 1.36110, 1.37579},
    {0.45, 0.8, 1.38810, 1.40350},
    {0.50, 0.8, 1.41320, 1.42929},
    {0.55, 0.8, 1.43680, 1.45338},
    {0.60, 0.8, 1.45900, 1.47596},
    {0.65, 0.8, 1.47980, 1.49717},
    {0.70, 0.8, 1.49950, 1.51716},
    {0.75, 0.8, 1.51820, 1.53603},
    {0.80, 0.8, 1.53580, 1.55389},
    {0.85, 0.8, 1.55260, 1.57081},
    {0.90, 0.8, 1.56850, 1.58688},
    {0.95, 0.8, 1.58370, 1.60216},
    {1.00, 0.8, 1.59820, 1.61671},
    // omega = 0.9
    {0.00, 0.9, 1.00000, 1.00000},
    {0.05, 0.9, 1.09990, 1.10558},
    {0.10, 0.9, 1.17220, 1.18285},
    {0.15, 0.9, 1.23490, 1.24970},
    {0.20, 0.9, 1.29140, 1.30973},
    {0.25, 0.9, 1.34330, 1.36463},
    {0.30, 0.9, 1.39140, 1.41539},
    {0.35, 0.9, 1.43640, 1.46269},
    {0.40, 0.9, 1.47850, 1.50699},
    {0.45, 0.9, 1.51830, 1.54868},
    {0.50, 0.9, 1.55600, 1.58803},
    {0.55, 0.9, 1.59180, 1.62528},
    {0.60, 0.9, 1.62590, 1.66063},
    {0.65, 0.9, 1.65830, 1.69424},
    {0.70, 0.9, 1.68930, 1.72627},
    {0.75, 0.9, 1.71900, 1.75683},
    {0.80, 0.9, 1.74740, 1.78603},
    {0.85, 0.9, 1.77460, 1.81398},
    {0.90, 0.9, 1.80080, 1.84076},
    {0.95, 0.9, 1.82590, 1.86644},
    {1.00, 0.9, 1.85010, 1.89110},
    // omega = 1.0
    {0.00, 1.0, 1.00000, 1.00000},
    {0.05, 1.0, 1.13680, 1.15199},
    {0.10, 1.0, 1.24740, 1.27767},
    {0.15, 1.0, 1.35080, 1.39576},
    {0.20, 1.0, 1.45030, 1.50969},
    {0.25, 1.0, 1.54730, 1.62092},
    {0.30, 1.0, 1.64250, 1.73027},
    {0.35, 1.0, 1.73640, 1.83821},
    {0.40, 1.0, 1.82930, 1.94507},
    {0.45, 1.0, 1.92130, 2.05106},
    {0.50, 1.0, 2.01280, 2.15637},
    {0.55, 1.0, 2.10370, 2.26109},
    {0.60, 1.0, 2.19410, 2.36534},
    {0.65, 1.0, 2.28420, 2.46918},
    {0.70, 1.0, 2.37400, 2.57267},
    {0.75, 1.0, 2.46350, 2.67586},
    {0.80, 1.0, 2.55270, 2.77879},
    {0.85, 1.0, 2.64170, 2.88148},
    {0.90, 1.0, 2.73060, 2.98398},
    {0.95, 1.0, 2.81930, 3.08629},
    {1.00, 1.0, 2.90780, 3.18844},
};

} // namespace

const ReferenceCell* reference_table() { return table; }

std::size_t reference_table_size() { return 210; }

const ReferenceCell& reference_cell(double mu, double omega) {
    const long mi = std::lround(mu / 0.05);
    const long oi = std::lround(omega / 0.1);
    if (mi < 0 || mi > 20 || std::abs(mu - 0.05 * mi) > 1e-9 ||
        oi < 1 || oi > 10 || std::abs(omega - 0.1 * oi) > 1e-9)
        throw domain_error("reference_cell: point is not on the table grid");
    return table[(oi - 1) * 21 + mi];
}

} // namespace hfunc
