// Benchmark: OpenMP kernels against their serial reference implementations.
// Verifies bit-identical results while timing, so a speedup never comes at
// the cost of a different rounding profile.
#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "rcx/kernels.hpp"

using namespace rcx::kernels;
using clk = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
    f();  // warm up
    auto t0 = clk::now();
    for (int r = 0; r < reps; ++r) f();
    auto t1 = clk::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

MatI64 random_int_matrix(std::uint32_t n, std::mt19937_64& rng) {
    MatI64 A(n);
    for (auto& x : A.a) x = std::int64_t(rng() % 7) - 3;
    return A;
}

MatC random_complex_matrix(std::uint32_t n, std::mt19937_64& rng) {
    MatC A(n);
    auto u = [&] { return double(rng() >> 11) * 0x1.0p-53 - 0.5; };
    for (auto& x : A.a) x = cd(u(), u());
    return A;
}

}  // namespace

int main() {
    std::mt19937_64 rng(9001);
    std::printf("threads: %d\n\n", max_threads());
    std::printf("%-22s %6s %12s %12s %9s %6s\n", "kernel", "n", "serial(ms)", "parallel(ms)",
                "speedup", "equal");

    for (std::uint32_t n : {64u, 128u, 256u, 384u}) {
        MatI64 A = random_int_matrix(n, rng), B = random_int_matrix(n, rng);
        MatI64 r_serial, r_par;
        double ts = time_ms([&] { r_serial = mul_serial(A, B); }, 3);
        double tp = time_ms([&] { r_par = mul(A, B); }, 3);
        std::printf("%-22s %6u %12.3f %12.3f %8.2fx %6s\n", "int64 gemm", n, ts, tp, ts / tp,
                    equal(r_serial, r_par) ? "yes" : "NO");
    }
    std::printf("\n");
    for (std::uint32_t n : {64u, 128u, 256u, 384u}) {
        MatC A = random_complex_matrix(n, rng), B = random_complex_matrix(n, rng);
        MatC r_serial, r_par;
        double ts = time_ms([&] { r_serial = mul_serial(A, B); }, 3);
        double tp = time_ms([&] { r_par = mul(A, B); }, 3);
        std::printf("%-22s %6u %12.3f %12.3f %8.2fx %6s\n", "complex gemm", n, ts, tp, ts / tp,
                    equal(r_serial, r_par) ? "yes" : "NO");
    }
    std::printf("\n");
    for (std::uint32_t n : {128u, 256u, 512u}) {
        MatC V = random_complex_matrix(n, rng), W = random_complex_matrix(n, rng);
        std::vector<cd> lambda(n);
        for (auto& l : lambda) l = cd(double(rng() % 5) - 2.0, double(rng() % 3) - 1.0);
        std::vector<double> rs, rp;
        double ts = time_ms([&] { rs = column_residuals_serial(W, V, lambda); }, 5);
        double tp = time_ms([&] { rp = column_residuals(W, V, lambda); }, 5);
        std::printf("%-22s %6u %12.3f %12.3f %8.2fx %6s\n", "column residuals", n, ts, tp,
                    ts / tp, rs == rp ? "yes" : "NO");
    }
    return 0;
}
