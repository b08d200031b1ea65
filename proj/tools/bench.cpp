#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hfunc/compare.hpp"
#include "hfunc/integral_solver.hpp"
#include "hfunc/parallel.hpp"
#include "hfunc/quadrature.hpp"

namespace {

double median_ms(int reps, const std::function<void()>& f) {
    std::vector<double> t;
    t.reserve(reps);
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        t.push_back(
            std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel policy degrades to serial\n");
#endif

    const int order = 192;
    const hfunc::QuadratureRule rule = hfunc::gauss_legendre_unit(order);
    const int reps = 5;

    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "parallel",
                "speedup");
    for (double omega : {0.9, 1.0}) {
        double ms[2];
        for (hfunc::exec_policy exec :
             {hfunc::exec_policy::serial, hfunc::exec_policy::parallel}) {
            hfunc::SolveOptions opt;
            opt.exec = exec;
            ms[exec == hfunc::exec_policy::parallel] = median_ms(
                reps, [&] { hfunc::solve_grid(omega, rule, opt); });
        }
        char label[64];
        std::snprintf(label, sizeof label, "solve_grid(omega=%.1f, n=%d)",
                      omega, order);
        std::printf("%-34s %10.2f %10.2f %8.2f\n", label, ms[0], ms[1],
                    ms[0] / ms[1]);
    }

    {
        std::vector<double> mus, omegas;
        for (int i = 0; i <= 20; ++i) mus.push_back(0.05 * i);
        for (int k = 1; k <= 10; ++k) omegas.push_back(0.1 * k);
        double ms[2];
        for (hfunc::exec_policy exec :
             {hfunc::exec_policy::serial, hfunc::exec_policy::parallel}) {
            hfunc::RunConfig cfg;
            cfg.exec = exec;
            ms[exec == hfunc::exec_policy::parallel] = median_ms(reps, [&] {
                hfunc::comparison_table(mus, omegas, {true, true, true}, cfg,
                                        true);
            });
        }
        std::printf("%-34s %10.2f %10.2f %8.2f\n",
                    "comparison_table(210 cells)", ms[0], ms[1],
                    ms[0] / ms[1]);
    }
    return 0;
}
