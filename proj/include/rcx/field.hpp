#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rcx {

/// Field element code in [0, q). The code's base-p digits are the
/// coefficients of the element in the modulus basis (low degree first).
using felem = std::uint8_t;

struct FieldParams {
    int p = 2;                 // prime characteristic
    int n = 1;                 // extension degree
    std::vector<int> modulus;  // monic irreducible over F_p, low degree first, size n+1; empty iff n == 1
    int q = 2;                 // p^n
};

/// Arithmetic in F_q backed by q x q lookup tables (q <= 256 supported).
///
/// For n > 1 the modulus is verified irreducible at construction by an
/// exhaustive divisor search; a composite q must factor as a single prime
/// power p^n.
class Field {
  public:
    explicit Field(FieldParams params);

    /// Field with a built-in modulus (q in {2,3,4,5,7,8,9} or any prime q <= 251).
    static Field with_q(int q);
    /// Field with an explicit modulus, coefficients low degree first.
    static Field with_q(int q, const std::vector<int>& modulus);

    const FieldParams& params() const { return params_; }
    int q() const { return params_.q; }
    int p() const { return params_.p; }
    int n() const { return params_.n; }

    felem zero() const { return 0; }
    felem one() const { return 1; }
    felem add(felem a, felem b) const { return add_[idx(a, b)]; }
    felem sub(felem a, felem b) const { return add_[idx(a, neg_[b])]; }
    felem mul(felem a, felem b) const { return mul_[idx(a, b)]; }
    felem neg(felem a) const { return neg_[a]; }
    felem inv(felem a) const;  // throws std::domain_error on a == 0

    /// Coefficient vector of the element in the modulus basis, size n.
    std::vector<int> coeffs(felem a) const;
    felem from_coeffs(const std::vector<int>& c) const;

  private:
    std::size_t idx(felem a, felem b) const {
        return std::size_t(a) * std::size_t(params_.q) + b;
    }

    FieldParams params_;
    std::vector<felem> add_, mul_, neg_, inv_;
};

}  // namespace rcx
