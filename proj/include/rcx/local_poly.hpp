#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rcx/field.hpp"

namespace rcx {

/// Polynomial in the uniformizer t with coefficients in F_q, stored low
/// degree first with high-order zeros stripped. These are the exact ring
/// elements everything over O = F_q[[t]] is built from: an element of O is
/// only ever needed modulo a finite power of t, so a polynomial suffices.
class LocalPoly {
  public:
    static constexpr int kValInf = std::numeric_limits<int>::max();

    LocalPoly() = default;
    explicit LocalPoly(std::vector<felem> coeffs) : c_(std::move(coeffs)) { strip(); }

    static LocalPoly constant(felem c) {
        return c == 0 ? LocalPoly{} : LocalPoly(std::vector<felem>{c});
    }
    static LocalPoly t_power(int k);  // t^k, k >= 0

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    felem coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : felem(0); }
    felem constant_term() const { return coeff(0); }
    int valuation() const;  // kValInf for the zero polynomial
    const std::vector<felem>& coeffs() const { return c_; }

    bool operator==(const LocalPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LocalPoly& o) const { return c_ != o.c_; }

  private:
    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<felem> c_;
};

LocalPoly padd(const Field& F, const LocalPoly& a, const LocalPoly& b);
LocalPoly psub(const Field& F, const LocalPoly& a, const LocalPoly& b);
LocalPoly pmul(const Field& F, const LocalPoly& a, const LocalPoly& b);
LocalPoly pneg(const Field& F, const LocalPoly& a);
LocalPoly pscale(const Field& F, const LocalPoly& a, felem c);

/// a * t^k.
LocalPoly pshift(const LocalPoly& a, int k);
/// a mod t^N (N <= 0 gives zero).
LocalPoly ptrunc(const LocalPoly& a, int N);
/// a / t^k; requires valuation(a) >= k.
LocalPoly pdiv_t(const LocalPoly& a, int k);

/// Polynomial division: a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<LocalPoly, LocalPoly> pdivmod(const Field& F, const LocalPoly& a, const LocalPoly& b);
/// Exact quotient a / b; throws if the division leaves a remainder.
LocalPoly pdiv_exact(const Field& F, const LocalPoly& a, const LocalPoly& b);

/// Inverse of a unit u of O (constant term nonzero) to precision N:
/// returns v with u*v = 1 (mod t^N).
LocalPoly unit_inverse(const Field& F, const LocalPoly& u, int N);

/// Human-readable form, high degree first, e.g. "t^3 + 2*t + 1"; "0" for zero.
std::string to_string(const LocalPoly& a);

}  // namespace rcx
