// Timing comparison of the OpenMP point-counting kernel against the serial
// character-sum reference, and of the parallel trace-table construction
// against a one-thread run.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "f2rp/count.hpp"

using namespace f2rp;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_count(long q, int f) {
    FqField F(q, f);
    IntPoly poly({-250 * 7, 125 * 9, 0, -25 * 3, 0, 1});  // a=7, b=3 Frey model
    long n_par = 0, n_ser = 0;
    double par = time_ms([&] { n_par = count_points_field(poly, F); });
    double ser = time_ms([&] { n_ser = count_points_field_serial_ref(poly, F); });
    std::printf("count_points  N=%-9ld  omp %8.2f ms   serial-ref %8.2f ms   speedup %5.2fx  %s\n",
                F.size(), par, ser, ser / par, n_par == n_ser ? "agree" : "DISAGREE");
}

void bench_table(long q) {
    double par = time_ms([&] { frey_trace_table(q); });
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    double ser = time_ms([&] { frey_trace_table(q); });
    omp_set_num_threads(saved);
    std::printf("trace_table   q=%-9ld  omp %8.2f ms   one-thread %8.2f ms   speedup %5.2fx\n", q,
                par, ser, ser / par);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    bench_count(9973, 1);
    bench_count(99991, 1);
    bench_count(499, 2);
    bench_table(31);
    bench_table(41);
    return 0;
}
