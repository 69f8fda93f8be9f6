#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace rcx::kernels {

using cd = std::complex<double>;

/// Worker count for the parallel kernels: OpenMP's default, capped by the
/// RCX_THREADS environment variable when set to a positive integer.
int max_threads();

struct MatI64 {
    std::uint32_t n = 0;
    std::vector<std::int64_t> a;

    MatI64() = default;
    explicit MatI64(std::uint32_t dim) : n(dim), a(std::size_t(dim) * dim, 0) {}
    std::int64_t& at(std::uint32_t i, std::uint32_t j) { return a[std::size_t(i) * n + j]; }
    std::int64_t at(std::uint32_t i, std::uint32_t j) const { return a[std::size_t(i) * n + j]; }
};

struct MatC {
    std::uint32_t n = 0;
    std::vector<cd> a;

    MatC() = default;
    explicit MatC(std::uint32_t dim) : n(dim), a(std::size_t(dim) * dim, cd(0)) {}
    cd& at(std::uint32_t i, std::uint32_t j) { return a[std::size_t(i) * n + j]; }
    cd at(std::uint32_t i, std::uint32_t j) const { return a[std::size_t(i) * n + j]; }
};

// Serial reference implementations (ground truth for the parallel kernels).
MatI64 mul_serial(const MatI64& A, const MatI64& B);
MatC mul_serial(const MatC& A, const MatC& B);

// OpenMP-parallel variants; bit-identical to the serial ones (same per-entry
// summation order, rows distributed across threads).
MatI64 mul(const MatI64& A, const MatI64& B);
MatC mul(const MatC& A, const MatC& B);

MatI64 transpose(const MatI64& A);
bool equal(const MatI64& A, const MatI64& B);
bool equal(const MatC& A, const MatC& B);
MatC to_complex(const MatI64& A);

/// max_i ||column i of (W - V * diag(lambda))||_2, one entry per column:
/// the residual of eigen-pair candidates (V holds vectors, W = A*V).
std::vector<double> column_residuals_serial(const MatC& W, const MatC& V,
                                            const std::vector<cd>& lambda);
std::vector<double> column_residuals(const MatC& W, const MatC& V, const std::vector<cd>& lambda);

}  // namespace rcx::kernels
