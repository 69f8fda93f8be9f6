#include "rcx/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rcx::kernels {

int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("RCX_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0 && cap < n) n = cap;
    }
    return n;
}

namespace {
void check_dims(std::uint32_t a, std::uint32_t b) {
    if (a != b) throw std::invalid_argument("kernel: dimension mismatch");
}
}  // namespace

MatI64 mul_serial(const MatI64& A, const MatI64& B) {
    check_dims(A.n, B.n);
    const std::uint32_t n = A.n;
    MatI64 C(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t k = 0; k < n; ++k) {
            std::int64_t aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

MatI64 mul(const MatI64& A, const MatI64& B) {
    check_dims(A.n, B.n);
    const std::uint32_t n = A.n;
    MatI64 C(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
    for (std::int64_t i = 0; i < std::int64_t(n); ++i)
        for (std::uint32_t k = 0; k < n; ++k) {
            std::int64_t aik = A.at(std::uint32_t(i), k);
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                C.at(std::uint32_t(i), j) += aik * B.at(k, j);
        }
    return C;
}

MatC mul_serial(const MatC& A, const MatC& B) {
    check_dims(A.n, B.n);
    const std::uint32_t n = A.n;
    MatC C(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t k = 0; k < n; ++k) {
            cd aik = A.at(i, k);
            if (aik == cd(0)) continue;
            for (std::uint32_t j = 0; j < n; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

MatC mul(const MatC& A, const MatC& B) {
    check_dims(A.n, B.n);
    const std::uint32_t n = A.n;
    MatC C(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
    for (std::int64_t i = 0; i < std::int64_t(n); ++i)
        for (std::uint32_t k = 0; k < n; ++k) {
            cd aik = A.at(std::uint32_t(i), k);
            if (aik == cd(0)) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                C.at(std::uint32_t(i), j) += aik * B.at(k, j);
        }
    return C;
}

MatI64 transpose(const MatI64& A) {
    MatI64 T(A.n);
    for (std::uint32_t i = 0; i < A.n; ++i)
        for (std::uint32_t j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

bool equal(const MatI64& A, const MatI64& B) { return A.n == B.n && A.a == B.a; }
bool equal(const MatC& A, const MatC& B) { return A.n == B.n && A.a == B.a; }

MatC to_complex(const MatI64& A) {
    MatC C(A.n);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = cd(double(A.a[i]), 0.0);
    return C;
}

std::vector<double> column_residuals_serial(const MatC& W, const MatC& V,
                                            const std::vector<cd>& lambda) {
    check_dims(W.n, V.n);
    if (lambda.size() != W.n) throw std::invalid_argument("kernel: lambda size mismatch");
    const std::uint32_t n = W.n;
    std::vector<double> res(n, 0.0);
    for (std::uint32_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) s += std::norm(W.at(i, j) - lambda[j] * V.at(i, j));
        res[j] = std::sqrt(s);
    }
    return res;
}

std::vector<double> column_residuals(const MatC& W, const MatC& V, const std::vector<cd>& lambda) {
    check_dims(W.n, V.n);
    if (lambda.size() != W.n) throw std::invalid_argument("kernel: lambda size mismatch");
    const std::uint32_t n = W.n;
    std::vector<double> res(n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
    for (std::int64_t j = 0; j < std::int64_t(n); ++j) {
        double s = 0.0;
        for (std::uint32_t i = 0; i < n; ++i)
            s += std::norm(W.at(i, std::uint32_t(j)) - lambda[j] * V.at(i, std::uint32_t(j)));
        res[j] = std::sqrt(s);
    }
    return res;
}

}  // namespace rcx::kernels
