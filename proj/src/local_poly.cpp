#include "rcx/local_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcx {

LocalPoly LocalPoly::t_power(int k) {
    if (k < 0) throw std::invalid_argument("t_power: negative exponent");
    std::vector<felem> c(k + 1, 0);
    c[k] = 1;
    return LocalPoly(std::move(c));
}

int LocalPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return int(i);
    return kValInf;
}

LocalPoly padd(const Field& F, const LocalPoly& a, const LocalPoly& b) {
    std::vector<felem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(int(i)), b.coeff(int(i)));
    return LocalPoly(std::move(c));
}

LocalPoly psub(const Field& F, const LocalPoly& a, const LocalPoly& b) {
    std::vector<felem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(int(i)), b.coeff(int(i)));
    return LocalPoly(std::move(c));
}

LocalPoly pneg(const Field& F, const LocalPoly& a) {
    std::vector<felem> c = a.coeffs();
    for (felem& x : c) x = F.neg(x);
    return LocalPoly(std::move(c));
}

LocalPoly pscale(const Field& F, const LocalPoly& a, felem s) {
    if (s == 0) return {};
    std::vector<felem> c = a.coeffs();
    for (felem& x : c) x = F.mul(x, s);
    return LocalPoly(std::move(c));
}

LocalPoly pmul(const Field& F, const LocalPoly& a, const LocalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<felem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        felem ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeffs()[j]));
    }
    return LocalPoly(std::move(c));
}

LocalPoly pshift(const LocalPoly& a, int k) {
    if (a.is_zero()) return {};
    if (k < 0) throw std::invalid_argument("pshift: negative shift");
    std::vector<felem> c(a.coeffs().size() + k, 0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + k);
    return LocalPoly(std::move(c));
}

LocalPoly ptrunc(const LocalPoly& a, int N) {
    if (N <= 0 || a.is_zero()) return {};
    std::vector<felem> c(a.coeffs().begin(),
                         a.coeffs().begin() + std::min<std::size_t>(a.coeffs().size(), N));
    return LocalPoly(std::move(c));
}

LocalPoly pdiv_t(const LocalPoly& a, int k) {
    if (a.is_zero()) return {};
    if (a.valuation() < k) throw std::invalid_argument("pdiv_t: valuation too small");
    std::vector<felem> c(a.coeffs().begin() + k, a.coeffs().end());
    return LocalPoly(std::move(c));
}

std::pair<LocalPoly, LocalPoly> pdivmod(const Field& F, const LocalPoly& a, const LocalPoly& b) {
    if (b.is_zero()) throw std::domain_error("pdivmod: division by zero");
    if (a.degree() < b.degree()) return {LocalPoly{}, a};
    std::vector<felem> rem = a.coeffs();
    std::vector<felem> quot(a.degree() - b.degree() + 1, 0);
    felem lead_inv = F.inv(b.coeffs().back());
    for (int k = int(quot.size()) - 1; k >= 0; --k) {
        felem c = F.mul(rem[k + b.degree()], lead_inv);
        quot[k] = c;
        if (c == 0) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[k + i] = F.sub(rem[k + i], F.mul(c, b.coeffs()[i]));
    }
    return {LocalPoly(std::move(quot)), LocalPoly(std::move(rem))};
}

LocalPoly pdiv_exact(const Field& F, const LocalPoly& a, const LocalPoly& b) {
    auto [q, r] = pdivmod(F, a, b);
    if (!r.is_zero()) throw std::logic_error("pdiv_exact: division not exact");
    return q;
}

LocalPoly unit_inverse(const Field& F, const LocalPoly& u, int N) {
    if (u.constant_term() == 0) throw std::domain_error("unit_inverse: not a unit");
    if (N <= 0) return {};
    // b_0 = u_0^{-1};  b_k = -u_0^{-1} * sum_{j=1..k} u_j b_{k-j}
    std::vector<felem> b(N, 0);
    felem u0inv = F.inv(u.constant_term());
    b[0] = u0inv;
    for (int k = 1; k < N; ++k) {
        felem s = 0;
        for (int j = 1; j <= k; ++j) s = F.add(s, F.mul(u.coeff(j), b[k - j]));
        b[k] = F.neg(F.mul(u0inv, s));
    }
    return LocalPoly(std::move(b));
}

std::string to_string(const LocalPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        felem c = a.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(int(c));
        } else {
            if (c != 1) out += std::to_string(int(c)) + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace rcx
