#include "rcx/omatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rcx {

OMatrix OMatrix::identity(int dim) {
    OMatrix I(dim);
    for (int i = 0; i < dim; ++i) I.at(i, i) = LocalPoly::constant(1);
    return I;
}

OMatrix omat_mul(const Field& F, const OMatrix& A, const OMatrix& B) {
    if (A.d != B.d) throw std::invalid_argument("omat_mul: dimension mismatch");
    OMatrix C(A.d);
    for (int i = 0; i < A.d; ++i)
        for (int k = 0; k < A.d; ++k) {
            const LocalPoly& aik = A.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < A.d; ++j) {
                if (B.at(k, j).is_zero()) continue;
                C.at(i, j) = padd(F, C.at(i, j), pmul(F, aik, B.at(k, j)));
            }
        }
    return C;
}

LocalPoly det_poly(const Field& F, const OMatrix& M) {
    const int d = M.d;
    if (d == 0) return LocalPoly::constant(1);
    OMatrix B = M;
    bool negate = false;
    LocalPoly prev = LocalPoly::constant(1);
    for (int k = 0; k + 1 < d; ++k) {
        if (B.at(k, k).is_zero()) {
            int r = -1;
            for (int i = k + 1; i < d; ++i)
                if (!B.at(i, k).is_zero()) { r = i; break; }
            if (r < 0) return {};  // column of zeros below the pivot: singular
            for (int j = 0; j < d; ++j) std::swap(B.at(k, j), B.at(r, j));
            negate = !negate;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                LocalPoly num = psub(F, pmul(F, B.at(k, k), B.at(i, j)),
                                     pmul(F, B.at(i, k), B.at(k, j)));
                B.at(i, j) = pdiv_exact(F, num, prev);
            }
            B.at(i, k) = {};
        }
        prev = B.at(k, k);
    }
    LocalPoly det = B.at(d - 1, d - 1);
    return negate ? pneg(F, det) : det;
}

bool is_upper_triangular(const OMatrix& M) {
    for (int i = 0; i < M.d; ++i)
        for (int j = 0; j < i; ++j)
            if (!M.at(i, j).is_zero()) return false;
    return true;
}

int min_entry_valuation(const OMatrix& M) {
    int v = LocalPoly::kValInf;
    for (const LocalPoly& e : M.a) v = std::min(v, e.valuation());
    return v;
}

OMatrix divide_by_t_power(const OMatrix& M, int k) {
    OMatrix R(M.d);
    for (std::size_t i = 0; i < M.a.size(); ++i) R.a[i] = pdiv_t(M.a[i], k);
    return R;
}

namespace {

// Valuation of the determinant, or kValInf when singular.
int det_valuation(const Field& F, const OMatrix& M) {
    return det_poly(F, M).valuation();
}

void scale_column(const Field& F, OMatrix& B, int j, const LocalPoly& s, int P) {
    for (int i = 0; i < B.d; ++i) B.at(i, j) = ptrunc(pmul(F, B.at(i, j), s), P);
}

// col_j -= c * col_i, everything mod t^P.
void axpy_column(const Field& F, OMatrix& B, int j, const LocalPoly& c, int i, int P) {
    if (c.is_zero()) return;
    for (int r = 0; r < B.d; ++r)
        B.at(r, j) = ptrunc(psub(F, B.at(r, j), pmul(F, c, B.at(r, i))), P);
}

void axpy_row(const Field& F, OMatrix& B, int i, const LocalPoly& c, int s, int P) {
    if (c.is_zero()) return;
    for (int j = 0; j < B.d; ++j)
        B.at(i, j) = ptrunc(psub(F, B.at(i, j), pmul(F, c, B.at(s, j))), P);
}

}  // namespace

OMatrix hermite_canonical(const Field& F, const OMatrix& M) {
    const int d = M.d;
    if (d == 0) return M;
    const int N = det_valuation(F, M);
    if (N == LocalPoly::kValInf) throw std::domain_error("hermite_canonical: singular matrix");
    const int P = N + 1;

    // Everything below works mod t^P. Right multiplication by GL_d(O) cannot
    // tell the difference: a perturbation t^P * E of M factors as
    // M * (I + t^P * M^{-1} * E) and val(M^{-1}) >= -N, so the second factor
    // is unimodular. The canonical entries all have degree <= N, hence the
    // truncated computation returns them exactly.
    OMatrix B(d);
    for (std::size_t i = 0; i < M.a.size(); ++i) B.a[i] = ptrunc(M.a[i], P);

    for (int i = d - 1; i >= 0; --i) {
        // pivot: minimal valuation in row i among columns 0..i
        int best = -1, bestval = LocalPoly::kValInf;
        for (int j = 0; j <= i; ++j) {
            int v = B.at(i, j).valuation();
            if (v < bestval) { bestval = v; best = j; }
        }
        if (best < 0 || bestval >= P)
            throw std::domain_error("hermite_canonical: singular matrix");
        if (best != i)
            for (int r = 0; r < d; ++r) std::swap(B.at(r, best), B.at(r, i));

        const int e = bestval;
        // make the pivot exactly t^e
        LocalPoly u = pdiv_t(B.at(i, i), e);
        scale_column(F, B, i, unit_inverse(F, u, P - e), P);
        B.at(i, i) = LocalPoly::t_power(e);

        for (int j = 0; j < i; ++j)
            axpy_column(F, B, j, pdiv_t(B.at(i, j), e), i, P);
        for (int j = i + 1; j < d; ++j) {
            LocalPoly r = ptrunc(B.at(i, j), e);
            axpy_column(F, B, j, pdiv_t(psub(F, B.at(i, j), r), e), i, P);
        }
    }
    return B;
}

std::vector<int> elementary_divisors(const Field& F, const OMatrix& M) {
    const int d = M.d;
    const int N = det_valuation(F, M);
    if (N == LocalPoly::kValInf) throw std::domain_error("elementary_divisors: singular matrix");
    const int P = N + 1;

    // Same truncation argument as hermite_canonical, now with unimodular
    // factors on both sides.
    OMatrix B(d);
    for (std::size_t i = 0; i < M.a.size(); ++i) B.a[i] = ptrunc(M.a[i], P);

    std::vector<int> exps;
    exps.reserve(d);
    for (int s = 0; s < d; ++s) {
        int bi = -1, bj = -1, bestval = LocalPoly::kValInf;
        for (int i = s; i < d; ++i)
            for (int j = s; j < d; ++j) {
                int v = B.at(i, j).valuation();
                if (v < bestval) { bestval = v; bi = i; bj = j; }
            }
        if (bi < 0 || bestval >= P)
            throw std::domain_error("elementary_divisors: singular matrix");
        if (bi != s)
            for (int j = 0; j < d; ++j) std::swap(B.at(bi, j), B.at(s, j));
        if (bj != s)
            for (int i = 0; i < d; ++i) std::swap(B.at(i, bj), B.at(i, s));

        const int e = bestval;
        LocalPoly u = pdiv_t(B.at(s, s), e);
        scale_column(F, B, s, unit_inverse(F, u, P - e), P);
        B.at(s, s) = LocalPoly::t_power(e);

        // The pivot has the minimal valuation in the block, so the quotients
        // below are exact and the cleared entries vanish identically.
        for (int i = s + 1; i < d; ++i)
            axpy_row(F, B, i, pdiv_t(B.at(i, s), e), s, P);
        for (int j = s + 1; j < d; ++j)
            axpy_column(F, B, j, pdiv_t(B.at(s, j), e), s, P);
        exps.push_back(e);
    }

    std::sort(exps.rbegin(), exps.rend());
    return exps;
}

std::vector<int> diag_t_exponents(const OMatrix& M) {
    std::vector<int> e(M.d);
    for (int i = 0; i < M.d; ++i) {
        const LocalPoly& p = M.at(i, i);
        int v = p.valuation();
        if (v == LocalPoly::kValInf || p != LocalPoly::t_power(v))
            throw std::invalid_argument("diag_t_exponents: diagonal entry is not a power of t");
        e[i] = v;
    }
    return e;
}

std::string omat_key(const OMatrix& M) {
    std::string key = std::to_string(M.d);
    for (const LocalPoly& p : M.a) {
        key += '|';
        for (felem c : p.coeffs()) {
            key += char('a' + (c & 0xF));
            key += char('a' + (c >> 4));
        }
    }
    return key;
}

std::string to_string(const OMatrix& M) {
    std::string out;
    for (int i = 0; i < M.d; ++i) {
        out += (i == 0) ? "[[" : " [";
        for (int j = 0; j < M.d; ++j) {
            if (j) out += ", ";
            out += to_string(M.at(i, j));
        }
        out += (i + 1 == M.d) ? "]]" : "]\n";
    }
    return out;
}

}  // namespace rcx
