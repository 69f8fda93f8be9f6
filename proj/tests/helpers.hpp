#pragma once

#include <random>

#include "rcx/omatrix.hpp"

namespace rcx::testing {

inline felem random_elem(const Field& F, std::mt19937& rng) {
    return felem(rng() % F.q());
}

inline LocalPoly random_poly(const Field& F, std::mt19937& rng, int max_deg) {
    std::vector<felem> c(rng() % (max_deg + 2));
    for (felem& x : c) x = random_elem(F, rng);
    return LocalPoly(std::move(c));
}

inline OMatrix random_matrix(const Field& F, std::mt19937& rng, int d, int max_deg) {
    OMatrix M(d);
    for (auto& e : M.a) e = random_poly(F, rng, max_deg);
    return M;
}

inline OMatrix random_nonsingular(const Field& F, std::mt19937& rng, int d, int max_deg) {
    for (;;) {
        OMatrix M = random_matrix(F, rng, d, max_deg);
        if (!det_poly(F, M).is_zero()) return M;
    }
}

/// Random element of GL_d(O) as a product of elementary column operations
/// and unit diagonal scalings.
inline OMatrix random_unimodular(const Field& F, std::mt19937& rng, int d, int steps = 12) {
    OMatrix U = OMatrix::identity(d);
    for (int s = 0; s < steps; ++s) {
        if (rng() % 3 == 0) {
            int j = int(rng() % d);
            std::vector<felem> c = random_poly(F, rng, 3).coeffs();
            c.resize(4, 0);
            c[0] = felem(1 + rng() % (F.q() - 1 ? F.q() - 1 : 1));  // unit constant term
            LocalPoly unit{std::vector<felem>(c)};
            for (int i = 0; i < d; ++i) U.at(i, j) = pmul(F, U.at(i, j), unit);
        } else {
            int j = int(rng() % d), j2 = int(rng() % d);
            if (j == j2) continue;
            LocalPoly c = random_poly(F, rng, 2);
            for (int i = 0; i < d; ++i)
                U.at(i, j) = padd(F, U.at(i, j), pmul(F, c, U.at(i, j2)));
        }
    }
    return U;
}

}  // namespace rcx::testing
