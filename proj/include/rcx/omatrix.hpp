#pragma once

#include <string>
#include <vector>

#include "rcx/local_poly.hpp"

namespace rcx {

/// Square matrix over O = F_q[[t]] with polynomial entries, row major.
/// Columns are read as generators of a lattice in F^d, F = F_q((t)).
struct OMatrix {
    int d = 0;
    std::vector<LocalPoly> a;

    OMatrix() = default;
    explicit OMatrix(int dim) : d(dim), a(std::size_t(dim) * dim) {}

    LocalPoly& at(int i, int j) { return a[std::size_t(i) * d + j]; }
    const LocalPoly& at(int i, int j) const { return a[std::size_t(i) * d + j]; }

    static OMatrix identity(int dim);

    bool operator==(const OMatrix& o) const { return d == o.d && a == o.a; }
};

OMatrix omat_mul(const Field& F, const OMatrix& A, const OMatrix& B);

/// Exact determinant (fraction-free Gaussian elimination).
LocalPoly det_poly(const Field& F, const OMatrix& M);

bool is_upper_triangular(const OMatrix& M);

/// Smallest valuation among all entries; LocalPoly::kValInf for the zero matrix.
int min_entry_valuation(const OMatrix& M);

/// M / t^k entrywise; requires every entry to have valuation >= k.
OMatrix divide_by_t_power(const OMatrix& M, int k);

/// The column Hermite form of a nonsingular M over O: the unique upper
/// triangular U in M*GL_d(O) with diagonal t^{e_i} and each off-diagonal
/// entry U(i,j), j > i, of degree < e_i. Throws std::domain_error when M is
/// singular. Exact: internally everything is reduced mod t^(val det + 1),
/// which the canonical entries never reach.
OMatrix hermite_canonical(const Field& F, const OMatrix& M);

/// Exponents (l_1 >= ... >= l_d) with M in GL_d(O) * diag(t^{l_i}) * GL_d(O).
/// Throws std::domain_error when M is singular.
std::vector<int> elementary_divisors(const Field& F, const OMatrix& M);

/// Diagonal t-exponents of an upper triangular matrix whose diagonal entries
/// are exact powers of t (as produced by hermite_canonical).
std::vector<int> diag_t_exponents(const OMatrix& M);

/// Compact stable key for hashing canonical representatives.
std::string omat_key(const OMatrix& M);

std::string to_string(const OMatrix& M);

}  // namespace rcx
