#include "rcx/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rcx {
namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// (p, n) with q == p^n and p prime, or throws.
std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) throw std::invalid_argument("field size must be >= 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int n = 0, m = q;
        while (m % p == 0) m /= p, ++n;
        if (m != 1) throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
        return {p, n};
    }
    throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
}

// Polynomials over F_p as int vectors, low degree first, no trailing zeros.
using PP = std::vector<int>;

void pp_strip(PP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p (b monic after scaling its leading coefficient).
PP pp_mod(PP a, PP b, int p) {
    pp_strip(a);
    pp_strip(b);
    // make b monic
    int lead = b.back();
    if (lead != 1) {
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if (x * lead % p == 1) { inv = x; break; }
        for (int& c : b) c = c * inv % p;
    }
    while (a.size() >= b.size()) {
        int c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        pp_strip(a);
        if (a.empty()) break;
    }
    return a;
}

bool pp_is_irreducible(const PP& m, int p) {
    int deg = int(m.size()) - 1;
    if (deg < 1 || m[deg] == 0) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int dd = 1; 2 * dd <= deg; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            PP g(dd + 1, 0);
            long long c = code;
            for (int i = 0; i < dd; ++i) { g[i] = int(c % p); c /= p; }
            g[dd] = 1;
            if (pp_mod(m, g, p).empty()) return false;
        }
    }
    return true;
}

PP builtin_modulus(int p, int n) {
    if (p == 2 && n == 2) return {1, 1, 1};         // x^2 + x + 1
    if (p == 2 && n == 3) return {1, 1, 0, 1};      // x^3 + x + 1
    if (p == 3 && n == 2) return {1, 0, 1};         // x^2 + 1
    throw std::invalid_argument("no built-in modulus for q = p^n with p = " + std::to_string(p) +
                                ", n = " + std::to_string(n) + "; pass one explicitly");
}

}  // namespace

Field::Field(FieldParams params) : params_(std::move(params)) {
    auto& P = params_;
    if (!is_prime(P.p)) throw std::invalid_argument("characteristic must be prime");
    if (P.n < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < P.n; ++i) {
        q *= P.p;
        if (q > 256) throw std::invalid_argument("field size > 256 not supported");
    }
    if (P.q != q) throw std::invalid_argument("q does not equal p^n");

    if (P.n == 1) {
        if (!P.modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
    } else {
        if (int(P.modulus.size()) != P.n + 1)
            throw std::invalid_argument("modulus must have degree n");
        PP m = P.modulus;
        for (int& c : m) {
            if (c < 0 || c >= P.p) throw std::invalid_argument("modulus coefficient out of range");
        }
        if (m[P.n] != 1) throw std::invalid_argument("modulus must be monic");
        if (!pp_is_irreducible(m, P.p)) throw std::invalid_argument("modulus is reducible");
    }

    const int Q = P.q, p = P.p, n = P.n;
    add_.resize(std::size_t(Q) * Q);
    mul_.resize(std::size_t(Q) * Q);
    neg_.resize(Q);
    inv_.assign(Q, 0);

    auto digits = [&](int code) {
        std::vector<int> d(n);
        for (int i = 0; i < n; ++i) { d[i] = code % p; code /= p; }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int code = 0;
        for (int i = n - 1; i >= 0; --i) code = code * p + d[i];
        return felem(code);
    };

    for (int a = 0; a < Q; ++a) {
        auto da = digits(a);
        std::vector<int> dn(n);
        for (int i = 0; i < n; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = encode(dn);
        for (int b = 0; b < Q; ++b) {
            auto db = digits(b);
            std::vector<int> ds(n);
            for (int i = 0; i < n; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[idx(felem(a), felem(b))] = encode(ds);

            // multiply as polynomials, reduce by the modulus
            std::vector<int> prod(2 * n - 1, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            if (n > 1) {
                for (int k = 2 * n - 2; k >= n; --k) {
                    int c = prod[k];
                    if (c == 0) continue;
                    prod[k] = 0;
                    for (int i = 0; i < n; ++i)
                        prod[k - n + i] = ((prod[k - n + i] - c * P.modulus[i]) % p + p) % p;
                }
            }
            prod.resize(n);
            mul_[idx(felem(a), felem(b))] = encode(prod);
        }
    }
    for (int a = 1; a < Q; ++a)
        for (int b = 1; b < Q; ++b)
            if (mul_[idx(felem(a), felem(b))] == 1) { inv_[a] = felem(b); break; }
}

felem Field::inv(felem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    return inv_[a];
}

std::vector<int> Field::coeffs(felem a) const {
    std::vector<int> d(params_.n);
    int code = a;
    for (int i = 0; i < params_.n; ++i) { d[i] = code % params_.p; code /= params_.p; }
    return d;
}

felem Field::from_coeffs(const std::vector<int>& c) const {
    if (int(c.size()) != params_.n) throw std::invalid_argument("coefficient vector has wrong length");
    int code = 0;
    for (int i = params_.n - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= params_.p) throw std::invalid_argument("coefficient out of range");
        code = code * params_.p + c[i];
    }
    return felem(code);
}

Field Field::with_q(int q) {
    auto [p, n] = factor_prime_power(q);
    FieldParams P;
    P.p = p;
    P.n = n;
    P.q = q;
    if (n > 1) P.modulus = builtin_modulus(p, n);
    return Field(std::move(P));
}

Field Field::with_q(int q, const std::vector<int>& modulus) {
    auto [p, n] = factor_prime_power(q);
    FieldParams P;
    P.p = p;
    P.n = n;
    P.q = q;
    P.modulus = modulus;
    return Field(std::move(P));
}

}  // namespace rcx
