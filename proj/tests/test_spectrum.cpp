#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "rcx/spectrum.hpp"

using namespace rcx;
using std::numbers::pi;

namespace {

// independent elementary symmetric polynomial over doubles, direct recursion
double sigma_brute(const std::vector<double>& x, int k) {
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (int j = std::min<int>(k, int(i) + 1); j >= 1; --j) e[j] += x[i] * e[j - 1];
    return e[k];
}

}  // namespace

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(3, 2, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(5, 2, 4) == 5797);  // 1+q+2q^2+2q^3+2q^4+q^5+q^6 at q=4

    // symmetry and the subspace recurrence
    for (int d = 2; d <= 6; ++d)
        for (int k = 1; k < d; ++k)
            for (std::int64_t q : {2, 3, 5}) {
                CHECK(gaussian_binomial(d, k, q) == gaussian_binomial(d, d - k, q));
                if (k < d - 1)
                    CHECK(gaussian_binomial(d, k, q) ==
                          gaussian_binomial(d - 1, k - 1, q) +
                              gaussian_binomial(d - 1, k, q) * [&] {
                                  std::int64_t p = 1;
                                  for (int i = 0; i < k; ++i) p *= q;
                                  return p;
                              }());
            }

    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(5, 5, 7) == 1);
    CHECK_THROWS_AS(gaussian_binomial(63, 31, 9), std::overflow_error);
}

TEST_CASE("satake to eigenvalue map") {
    {
        auto lam = lambda_from_satake(2, 4.0, {cd(1), cd(1)});
        REQUIRE(lam.size() == 1);
        CHECK(lam[0].real() == doctest::Approx(4.0).epsilon(1e-12));  // 2 sqrt(q)
        CHECK(lam[0].imag() == doctest::Approx(0.0));
    }
    {
        auto lam = lambda_from_satake(3, 2.0, {cd(1), cd(1), cd(1)});
        REQUIRE(lam.size() == 2);
        CHECK(lam[0].real() == doctest::Approx(6.0).epsilon(1e-12));
        CHECK(lam[1].real() == doctest::Approx(6.0).epsilon(1e-12));
    }
    {
        // the parameters of the constant character reproduce the degrees
        auto lam = lambda_from_satake(3, 2.0, {cd(2), cd(1), cd(0.5)});
        CHECK(lam[0].real() == doctest::Approx(7.0).epsilon(1e-12));
        CHECK(lam[1].real() == doctest::Approx(7.0).epsilon(1e-12));
        for (int d = 2; d <= 5; ++d)
            for (double q : {2.0, 3.0}) {
                std::vector<cd> z(d);
                for (int j = 0; j < d; ++j) z[j] = std::pow(q, (d + 1 - 2 * (j + 1)) / 2.0);
                auto l = lambda_from_satake(d, q, z);
                for (int k = 1; k < d; ++k) {
                    CHECK(l[k - 1].real() ==
                          doctest::Approx(double(gaussian_binomial(d, k, std::int64_t(q))))
                              .epsilon(1e-10));
                    CHECK(std::abs(l[k - 1].imag()) < 1e-9);
                }
            }
    }
    CHECK_THROWS_AS(lambda_from_satake(3, 2.0, {cd(1), cd(1)}), std::invalid_argument);
}

TEST_CASE("polynomial roots") {
    {
        // (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
        auto r = poly_roots({cd(-6), cd(11), cd(-6)});
        REQUIRE(r.size() == 3);
        std::sort(r.begin(), r.end(), [](cd a, cd b) { return a.real() < b.real(); });
        CHECK(std::abs(r[0] - cd(1)) < 1e-9);
        CHECK(std::abs(r[1] - cd(2)) < 1e-9);
        CHECK(std::abs(r[2] - cd(3)) < 1e-9);
    }
    {
        // z^2 + 1
        auto r = poly_roots({cd(1), cd(0)});
        REQUIRE(r.size() == 2);
        std::sort(r.begin(), r.end(), [](cd a, cd b) { return a.imag() < b.imag(); });
        CHECK(std::abs(r[0] - cd(0, -1)) < 1e-9);
        CHECK(std::abs(r[1] - cd(0, 1)) < 1e-9);
    }
    {
        // random roots round trip through expanded coefficients
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> U(-2.0, 2.0);
        for (int it = 0; it < 25; ++it) {
            int n = 2 + int(rng() % 5);
            std::vector<cd> roots(n);
            for (auto& z : roots) z = cd(U(rng), U(rng));
            std::vector<cd> c{cd(1)};
            for (cd r : roots) {
                std::vector<cd> nc(c.size() + 1, cd(0));
                for (std::size_t i = 0; i < c.size(); ++i) {
                    nc[i] += c[i] * (-r);
                    nc[i + 1] += c[i];
                }
                c = std::move(nc);
            }
            // c holds c_0..c_n with c_n = 1
            auto found = poly_roots(std::vector<cd>(c.begin(), c.end() - 1));
            REQUIRE(found.size() == std::size_t(n));
            for (cd r : roots) {
                double best = 1e30;
                for (cd f : found) best = std::min(best, std::abs(f - r));
                CHECK(best < 1e-7);
            }
        }
    }
}

TEST_CASE("simultaneous spectrum membership") {
    {
        // lambda = 0 for d=2: parameters +-i, on the circle
        auto v = in_sd(2, 2.0, {cd(0)});
        CHECK(v.member);
        CHECK(v.conjugate_symmetric);
        REQUIRE(v.roots.size() == 2);
        for (cd z : v.roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
    }
    {
        // the degree tuple itself lies outside: parameters sqrt(q), 1/sqrt(q)
        auto v = in_sd(2, 2.0, {cd(3)});
        CHECK(!v.member);
        CHECK(v.max_modulus_deviation == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-6));
    }
    {
        // d=3 degree tuple (7,7): recovered parameters {2, 1, 1/2}
        auto v = in_sd(3, 2.0, {cd(7), cd(7)});
        CHECK(!v.member);
        std::vector<double> mods;
        for (cd z : v.roots) mods.push_back(std::abs(z));
        std::sort(mods.begin(), mods.end());
        CHECK(mods[0] == doctest::Approx(0.5).epsilon(1e-6));
        CHECK(mods[1] == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(mods[2] == doctest::Approx(2.0).epsilon(1e-6));
    }
    {
        // conjugacy violation is rejected before any root finding
        auto v = in_sd(3, 2.0, {cd(1, 1), cd(5, 5)});
        CHECK(!v.member);
        CHECK(!v.conjugate_symmetric);
    }
    {
        // round trip: tuples built from unit-torus parameters are members
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> U(0.0, 2 * pi);
        for (int d = 2; d <= 5; ++d)
            for (int it = 0; it < 40; ++it) {
                std::vector<cd> z(d);
                double s = 0;
                for (int j = 0; j + 1 < d; ++j) {
                    double th = U(rng);
                    z[j] = std::polar(1.0, th);
                    s += th;
                }
                z[d - 1] = std::polar(1.0, -s);  // det 1
                auto v = in_sd(d, 2.0, lambda_from_satake(d, 2.0, z), 1e-6);
                CHECK(v.member);
            }
    }
}

TEST_CASE("trivial tuples") {
    {
        auto ts = trivial_tuples(2, 2.0);
        REQUIRE(ts.size() == 2);
        CHECK(ts[0].zeta == cd(1.0));
        CHECK(ts[0].lambda[0] == cd(3.0));  // exact
        CHECK(ts[1].zeta == cd(-1.0));
        CHECK(ts[1].lambda[0] == cd(-3.0));
    }
    {
        auto ts = trivial_tuples(3, 2.0);
        REQUIRE(ts.size() == 3);
        CHECK(ts[0].lambda[0] == cd(7.0));
        CHECK(ts[0].lambda[1] == cd(7.0));
        for (const auto& t : ts) {
            CHECK(std::abs(t.lambda[0] - t.zeta * 7.0) < 1e-12);
            CHECK(std::abs(t.lambda[1] - t.zeta * t.zeta * 7.0) < 1e-12);
        }
    }
    {
        auto ts = trivial_tuples(6, 3.0, 3);  // only zeta with zeta^2 = 1
        REQUIRE(ts.size() == 2);
        CHECK(ts[0].zeta == cd(1.0));
        CHECK(ts[1].zeta == cd(-1.0));
    }
    {
        auto ts = trivial_tuples(4, 2.0, 4);
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].zeta == cd(1.0));
        for (int k = 1; k <= 3; ++k)
            CHECK(ts[0].lambda[k - 1] == cd(double(gaussian_binomial(4, k, 2))));
    }
    CHECK_THROWS_AS(trivial_tuples(4, 2.0, 3), std::invalid_argument);
    // trivial tuples sit strictly outside the one-color regions (modulus 7
    // against a boundary peaking at 6), which is why they are screened off
    // separately before any membership test
    for (const auto& t : trivial_tuples(3, 2.0))
        for (int k = 1; k <= 2; ++k) CHECK(!in_sdk(3, 2.0, k, t.lambda[k - 1]));
}

TEST_CASE("boundary curve") {
    {
        auto c = boundary_curve(2, 4.0, 1, 64);
        REQUIRE(c.size() == 64);
        for (const auto& s : c) {
            CHECK(s.value.real() == doctest::Approx(4.0 * std::cos(s.theta)).epsilon(1e-9));
            CHECK(std::abs(s.value.imag()) < 1e-9);
        }
    }
    {
        auto c = boundary_curve(3, 2.0, 1, 360);
        CHECK(c[0].value.real() == doctest::Approx(6.0).epsilon(1e-12));  // 3q at theta = 0
        CHECK(std::abs(c[0].value.imag()) < 1e-12);
        // the color-reversed curve is the pointwise conjugate
        auto c2 = boundary_curve(3, 2.0, 2, 360);
        for (std::size_t i = 0; i < c.size(); ++i)
            CHECK(std::abs(c2[i].value - std::conj(c[i].value)) < 1e-9);
    }
    CHECK_THROWS_AS(boundary_curve(3, 2.0, 1, 4), std::invalid_argument);
}

TEST_CASE("single color region membership") {
    // d=3, q=2, k=1: region bounded by a three-cusped closed curve through 3q=6
    CHECK(in_sdk(3, 2.0, 1, cd(0)));
    CHECK(in_sdk(3, 2.0, 1, cd(5.99)));
    CHECK(!in_sdk(3, 2.0, 1, cd(6.01)));
    CHECK(!in_sdk(3, 2.0, 1, cd(7)));
    CHECK(in_sdk(3, 2.0, 1, cd(0, 2)));    // boundary crosses the imaginary axis near 2.36i
    CHECK(!in_sdk(3, 2.0, 1, cd(0, 3)));
    CHECK(!in_sdk(3, 2.0, 1, cd(-2.1)));   // the real section is [-2, 6], not symmetric
    // a point on the curve itself is accepted through the tolerance band
    auto c = boundary_curve(3, 2.0, 1, 4096);
    CHECK(in_sdk(3, 2.0, 1, c[1000].value));

    // d=2: the degenerate interval [-2 sqrt 2, 2 sqrt 2]
    CHECK(in_sdk(2, 2.0, 1, cd(2.82)));
    CHECK(!in_sdk(2, 2.0, 1, cd(2.84)));
    CHECK(!in_sdk(2, 2.0, 1, cd(1.0, 0.5)));
    CHECK(in_sdk(2, 2.0, 1, cd(-2.82)));

    // d=4, k=2: also degenerate, [-24, 24] at q=2
    CHECK(in_sdk(4, 2.0, 2, cd(23.9)));
    CHECK(!in_sdk(4, 2.0, 2, cd(24.1)));
    CHECK(!in_sdk(4, 2.0, 2, cd(3, 2)));
    // but k=1 and k=3 at d=4 are genuine planar regions
    CHECK(in_sdk(4, 2.0, 1, cd(0, 1)));

    // d=5, k=2: the sampled boundary winds twice and self-intersects
    CHECK_THROWS_AS(in_sdk(5, 2.0, 2, cd(0)), std::runtime_error);
}

TEST_CASE("nontrivial spectral bound") {
    double b = nontrivial_bound(3, 2.0, 1);
    CHECK(b == doctest::Approx(2.0 * (std::sqrt(2.0) + 1.0 / std::sqrt(2.0) + 1.0))
                   .epsilon(1e-12));
    CHECK(b == doctest::Approx(6.2426406871).epsilon(1e-9));
    CHECK(nontrivial_bound(4, 2.0, 2) == doctest::Approx(28.0).epsilon(1e-12));

    // matches a brute-force elementary symmetric evaluation
    for (int d = 3; d <= 6; ++d)
        for (int k = 1; k < d; ++k)
            for (double q : {2.0, 3.0, 4.0}) {
                std::vector<double> x;
                for (int j = 0; j < d - 1; ++j) x.push_back(std::pow(q, (d - 2 - 2 * j) / 2.0));
                x.push_back(1.0);
                double expect = std::pow(q, k * (d - k) / 2.0) * sigma_brute(x, k);
                CHECK(nontrivial_bound(d, q, k) == doctest::Approx(expect).epsilon(1e-10));
                CHECK(nontrivial_bound(d, q, k) ==
                      doctest::Approx(nontrivial_bound(d, q, d - k)).epsilon(1e-10));
                // strictly below the degree
                CHECK(nontrivial_bound(d, q, k) <
                      double(gaussian_binomial(d, k, std::int64_t(q))));
            }

    CHECK_THROWS_AS(nontrivial_bound(2, 2.0, 1), std::domain_error);
}
