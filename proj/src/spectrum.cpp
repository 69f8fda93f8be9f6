#include "rcx/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rcx {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

// sigma_1..sigma_m of the given values, by expanding prod (1 + x v_i).
std::vector<cd> elementary_symmetric(const std::vector<cd>& v, int m) {
    std::vector<cd> e(m + 1, cd(0));
    e[0] = cd(1);
    int top = 0;
    for (const cd& x : v) {
        top = std::min(top + 1, m);
        for (int j = top; j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e;
}
}  // namespace

std::int64_t gaussian_binomial(int d, int k, std::int64_t q) {
    if (k < 0 || k > d) throw std::invalid_argument("gaussian_binomial: k out of range");
    if (q < 1) throw std::invalid_argument("gaussian_binomial: q must be >= 1");
    // G[n][k] = G[n-1][k-1] + q^k G[n-1][k]
    std::vector<std::vector<std::int64_t>> G(d + 1, std::vector<std::int64_t>(k + 1, 0));
    for (int n = 0; n <= d; ++n) G[n][0] = 1;
    for (int n = 1; n <= d; ++n) {
        __int128 qk = 1;
        for (int j = 1; j <= std::min(n, k); ++j) {
            qk *= q;
            __int128 val = __int128(G[n - 1][j - 1]) + qk * G[n - 1][j];
            if (val > __int128(std::numeric_limits<std::int64_t>::max()))
                throw std::overflow_error("gaussian_binomial: value exceeds int64");
            G[n][j] = std::int64_t(val);
        }
    }
    return G[d][k];
}

std::vector<cd> lambda_from_satake(int d, double q, const std::vector<cd>& z) {
    if (int(z.size()) != d) throw std::invalid_argument("lambda_from_satake: need d parameters");
    std::vector<cd> e = elementary_symmetric(z, d);
    std::vector<cd> lambda(d - 1);
    for (int k = 1; k < d; ++k) lambda[k - 1] = std::pow(q, 0.5 * k * (d - k)) * e[k];
    return lambda;
}

std::vector<cd> poly_roots(const std::vector<cd>& coeffs) {
    const int n = int(coeffs.size());
    if (n == 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) C(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "poly_roots: eigensolver failed on polynomial with coefficients";
        for (const cd& c : coeffs) msg << " (" << c.real() << "," << c.imag() << ")";
        throw std::runtime_error(msg.str());
    }

    auto eval = [&](cd z, cd& deriv) {
        cd p(1.0), dp(0.0);
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + coeffs[i];
        }
        deriv = dp;
        return p;
    };

    std::vector<cd> roots(n);
    for (int i = 0; i < n; ++i) {
        cd z = es.eigenvalues()[i];
        cd dp;
        cd p = eval(z, dp);
        for (int it = 0; it < 20; ++it) {
            if (std::abs(dp) < 1e-300) break;
            cd step = p / dp;
            cd z2 = z - step;
            cd dp2;
            cd p2 = eval(z2, dp2);
            if (std::abs(p2) >= std::abs(p)) break;  // polishing stopped helping
            z = z2, p = p2, dp = dp2;
            if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
        }
        roots[i] = z;
    }
    return roots;
}

SpectrumVerdict in_sd(int d, double q, const std::vector<cd>& lambda, double tol) {
    if (int(lambda.size()) != d - 1) throw std::invalid_argument("in_sd: need d-1 eigenvalues");
    SpectrumVerdict v;

    v.conjugate_symmetric = true;
    for (int k = 1; k < d; ++k) {
        cd diff = lambda[d - k - 1] - std::conj(lambda[k - 1]);
        if (std::abs(diff) > tol * (1.0 + std::abs(lambda[k - 1]))) {
            v.conjugate_symmetric = false;
            break;
        }
    }

    // z^d - e_1 z^{d-1} + ... + (-1)^d e_d, with e_0 = e_d = 1;
    // coeffs[m] is the coefficient of z^m.
    std::vector<cd> coeffs(d);
    coeffs[0] = (d % 2 == 0) ? cd(1) : cd(-1);
    for (int k = 1; k < d; ++k) {
        cd ek = std::pow(q, -0.5 * k * (d - k)) * lambda[k - 1];
        coeffs[d - k] = (k % 2 == 0) ? ek : -ek;
    }
    v.roots = poly_roots(coeffs);

    v.max_modulus_deviation = 0.0;
    for (const cd& z : v.roots)
        v.max_modulus_deviation = std::max(v.max_modulus_deviation, std::abs(std::abs(z) - 1.0));
    v.member = v.conjugate_symmetric && v.max_modulus_deviation <= tol;
    return v;
}

std::vector<TrivialTuple> trivial_tuples(int d, double q, int t_index) {
    if (t_index < 1 || d % t_index != 0)
        throw std::invalid_argument("trivial_tuples: t_index must divide d");
    const int count = d / t_index;  // zeta ranges over the (d/t)-th roots of unity
    std::vector<std::int64_t> deg(d + 1);
    for (int k = 0; k <= d; ++k) deg[k] = gaussian_binomial(d, k, std::llround(q));

    std::vector<TrivialTuple> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        TrivialTuple t;
        if (j == 0)
            t.zeta = cd(1.0);
        else if (2 * j == count)
            t.zeta = cd(-1.0);
        else
            t.zeta = std::polar(1.0, 2.0 * kPi * j / count);
        t.lambda.resize(d - 1);
        cd zpow(1.0);
        for (int k = 1; k < d; ++k) {
            zpow *= t.zeta;  // keeps zeta = +-1 powers exact
            t.lambda[k - 1] = zpow * double(deg[k]);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<CurveSample> boundary_curve(int d, double q, int k, int samples) {
    if (k < 1 || k >= d) throw std::invalid_argument("boundary_curve: k must be in 1..d-1");
    if (samples < 16) throw std::invalid_argument("boundary_curve: need at least 16 samples");
    const double scale = std::pow(q, 0.5 * k * (d - k));
    const double A = binom(d - 1, k), B = binom(d - 1, k - 1);
    std::vector<CurveSample> out(samples);
    for (int j = 0; j < samples; ++j) {
        double theta = 2.0 * kPi * j / samples;
        out[j] = {theta, scale * (A * std::polar(1.0, k * theta) +
                                  B * std::polar(1.0, (k - d) * theta))};
    }
    return out;
}

namespace {

struct SdkRegion {
    std::vector<cd> poly;  // closed polygon (poly[M] follows poly[M-1] back to poly[0])
    bool simple = false;
};

bool segments_cross(cd a, cd b, cd c, cd d) {
    auto cross = [](cd u, cd v) { return u.real() * v.imag() - u.imag() * v.real(); };
    double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

double point_segment_dist(cd p, cd a, cd b) {
    cd ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

const SdkRegion& sdk_region(int d, double q, int k, int samples) {
    static std::map<std::tuple<int, long long, int, int>, SdkRegion> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(d, std::llround(q * 1e9), k, samples);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SdkRegion region;
    for (const CurveSample& s : boundary_curve(d, q, k, samples)) region.poly.push_back(s.value);

    // Numeric simplicity check: no two non-adjacent polygon segments may
    // cross. The curve has cusps, so adjacent segments sharing an endpoint
    // are exempt.
    const int M = samples;
    region.simple = true;
    for (int i = 0; i < M && region.simple; ++i) {
        cd a = region.poly[i], b = region.poly[(i + 1) % M];
        for (int j = i + 2; j < M; ++j) {
            if (i == 0 && j == M - 1) continue;  // adjacent around the wrap
            cd c = region.poly[j], e = region.poly[(j + 1) % M];
            if (segments_cross(a, b, c, e)) { region.simple = false; break; }
        }
    }
    return cache.emplace(key, std::move(region)).first->second;
}

}  // namespace

bool in_sdk(int d, double q, int k, cd lambda, int samples, double tol) {
    if (k < 1 || k >= d) throw std::invalid_argument("in_sdk: k must be in 1..d-1");
    if (2 * k == d) {
        // The two exponentials coincide in frequency and the binomial weights
        // match, so the curve collapses to the real segment [-L, L].
        double L = std::pow(q, 0.5 * k * (d - k)) * binom(d, k);
        return std::abs(lambda.imag()) <= tol && std::abs(lambda.real()) <= L + tol;
    }
    if (samples < 1024) throw std::invalid_argument("in_sdk: need at least 1024 samples");

    const SdkRegion& region = sdk_region(d, q, k, samples);
    if (!region.simple)
        throw std::runtime_error("in_sdk: sampled boundary curve self-intersects for d=" +
                                 std::to_string(d) + ", k=" + std::to_string(k) +
                                 "; the winding test would be unreliable");

    const int M = int(region.poly.size());
    double band = tol * (1.0 + std::abs(lambda));
    double winding = 0.0;
    for (int i = 0; i < M; ++i) {
        cd a = region.poly[i], b = region.poly[(i + 1) % M];
        if (point_segment_dist(lambda, a, b) <= band) return true;  // on the boundary
        winding += std::arg((b - lambda) / (a - lambda));
    }
    return std::abs(winding) > kPi;  // |winding number| >= 1
}

double nontrivial_bound(int d, double q, int k) {
    if (d == 2) throw std::domain_error("nontrivial_bound: no uniform gap for d=2");
    if (d < 2) throw std::invalid_argument("nontrivial_bound: d must be >= 2");
    if (k < 1 || k >= d) throw std::invalid_argument("nontrivial_bound: k must be in 1..d-1");
    std::vector<cd> args;
    for (int i = 0; i < d - 1; ++i) args.push_back(std::pow(q, 0.5 * (d - 2 - 2 * i)));
    args.push_back(cd(1.0));
    std::vector<cd> e = elementary_symmetric(args, k);
    return std::pow(q, 0.5 * k * (d - k)) * e[k].real();
}

}  // namespace rcx
