#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace rcx {

using cd = std::complex<double>;

/// Number of k-dimensional subspaces of F_q^d, exact.
/// Throws std::overflow_error if the value does not fit in int64.
std::int64_t gaussian_binomial(int d, int k, std::int64_t q);

/// lambda_k = q^{k(d-k)/2} * sigma_k(z_1..z_d) for k = 1..d-1.
std::vector<cd> lambda_from_satake(int d, double q, const std::vector<cd>& z);

struct SpectrumVerdict {
    bool member = false;
    std::vector<cd> roots;               // the d recovered z_i
    double max_modulus_deviation = 0.0;  // max_i | |z_i| - 1 |
    bool conjugate_symmetric = false;    // lambda_{d-k} == conj(lambda_k) within tol
};

/// Membership of an eigenvalue tuple in the simultaneous spectrum S_d: the
/// tuple arises from Satake parameters on the unit torus with product one
/// iff all d roots of z^d - e_1 z^{d-1} + e_2 z^{d-2} - ... + (-1)^d,
/// e_k = q^{-k(d-k)/2} lambda_k, lie on the unit circle. The conjugacy
/// relation lambda_{d-k} = conj(lambda_k) is a necessary condition and is
/// checked first.
SpectrumVerdict in_sd(int d, double q, const std::vector<cd>& lambda, double tol = 1e-6);

struct TrivialTuple {
    cd zeta;
    std::vector<cd> lambda;  // lambda_k = zeta^k * [d choose k]_q
};

/// The trivial eigenvalue tuples: lambda_k(zeta) =
/// zeta^k q^{k(d-k)/2} sigma_k(q^{-(d-1)/2},...,q^{(d-1)/2}), one per
/// (d/t_index)-th root of unity zeta. The sigma factor collapses to the
/// Gaussian binomial [d choose k]_q exactly, so for zeta = 1 the tuple is
/// the per-color degree tuple as an exact integer vector.
/// t_index is the index [Gamma : Gamma intersect PSL_d] when known; the
/// default 1 admits every zeta with zeta^d = 1.
std::vector<TrivialTuple> trivial_tuples(int d, double q, int t_index = 1);

struct CurveSample {
    double theta;
    cd value;
};

/// M samples of the boundary curve of S_{d,k}:
/// theta -> q^{k(d-k)/2} * sigma_k(e^{i theta},...,e^{i theta}, e^{-(d-1) i theta})
///        = q^{k(d-k)/2} (C(d-1,k) e^{ik theta} + C(d-1,k-1) e^{i(k-d) theta}).
std::vector<CurveSample> boundary_curve(int d, double q, int k, int samples);

/// Membership of a single component lambda_k in the projection S_{d,k}.
/// For 2k == d the region degenerates to the real interval
/// [-L, L], L = q^{k(d-k)/2} C(d,k) (for d = 2 this is [-2 sqrt(q), 2 sqrt(q)]);
/// otherwise a winding-number test against the sampled boundary polygon,
/// whose simplicity is verified once per (d,q,k,samples) and cached.
/// Points within tol of the polygon count as members.
bool in_sdk(int d, double q, int k, cd lambda, int samples = 4096, double tol = 1e-6);

/// Upper bound q^{k(d-k)/2} sigma_k(q^{(d-2)/2}, q^{(d-4)/2}, ..., q^{(2-d)/2}, 1)
/// on |lambda_k| over the nontrivial unitary spectrum; strictly below the
/// degree [d choose k]_q. Throws std::domain_error for d = 2 (no uniform gap
/// for d=2: eigenvalues approach the degree q+1).
double nontrivial_bound(int d, double q, int k);

/// Roots of the monic polynomial z^n + c_{n-1} z^{n-1} + ... + c_0 given by
/// coeffs = (c_0, ..., c_{n-1}), via companion-matrix eigenvalues with Newton
/// polishing. Throws std::runtime_error (carrying the coefficients) if the
/// eigensolver fails to converge.
std::vector<cd> poly_roots(const std::vector<cd>& coeffs);

}  // namespace rcx
