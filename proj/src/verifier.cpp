#include "rcx/verifier.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace rcx {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;  // deterministic across platforms
}

// A cheap lower bound for ||A||_2: the largest column (or row) 2-norm.
double norm2_lower_bound(const kernels::MatI64& A) {
    const std::uint32_t n = A.n;
    double best = 0.0;
    for (std::uint32_t j = 0; j < n; ++j) {
        double col = 0.0, row = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            col += double(A.at(i, j)) * double(A.at(i, j));
            row += double(A.at(j, i)) * double(A.at(j, i));
        }
        best = std::max({best, col, row});
    }
    return std::sqrt(best);
}
}  // namespace

OperatorFamily build_operators(const ColoredComplex& X) {
    OperatorFamily fam;
    fam.n = X.n;
    fam.d = X.d;
    fam.ops.reserve(X.d - 1);
    for (int k = 1; k < X.d; ++k) {
        kernels::MatI64 A(X.n);
        for (const ColoredEdge& e : X.color(k)) A.at(e.u, e.v) += e.mult;
        fam.ops.push_back(std::move(A));
    }

    std::vector<kernels::MatI64> transposed;
    transposed.reserve(fam.ops.size());
    for (const auto& A : fam.ops) transposed.push_back(kernels::transpose(A));

    fam.adjoint_paired = true;
    for (int k = 1; k < X.d && fam.adjoint_paired; ++k)
        fam.adjoint_paired = kernels::equal(fam.ops[X.d - k - 1], transposed[k - 1]);

    fam.normal = true;
    for (std::size_t k = 0; k < fam.ops.size() && fam.normal; ++k)
        fam.normal = kernels::equal(kernels::mul(fam.ops[k], transposed[k]),
                                    kernels::mul(transposed[k], fam.ops[k]));

    fam.pairwise_commuting = true;
    for (std::size_t j = 0; j < fam.ops.size() && fam.pairwise_commuting; ++j)
        for (std::size_t k = j + 1; k < fam.ops.size() && fam.pairwise_commuting; ++k)
            fam.pairwise_commuting = kernels::equal(kernels::mul(fam.ops[j], fam.ops[k]),
                                                    kernels::mul(fam.ops[k], fam.ops[j]));
    return fam;
}

std::vector<EigenTupleRec> joint_spectrum(const OperatorFamily& fam, const VerifierOptions& opt) {
    const std::uint32_t n = fam.n;
    const int d = fam.d;
    if (!fam.normal || !fam.pairwise_commuting)
        throw std::runtime_error("joint_spectrum: operators are not a commuting normal family");
    if (n == 0) return {};

    std::vector<double> norm_lb(fam.ops.size());
    std::vector<kernels::MatC> ops_c(fam.ops.size());
    for (std::size_t k = 0; k < fam.ops.size(); ++k) {
        norm_lb[k] = norm2_lower_bound(fam.ops[k]);
        ops_c[k] = kernels::to_complex(fam.ops[k]);
    }

    std::mt19937_64 rng(opt.seed);
    double worst_overall = 0.0;

    for (int attempt = 0; attempt < 5; ++attempt) {
        // Random unit-size coefficients; with an adjoint-paired family pick
        // c_{d-k} = conj(c_k) so the combination is Hermitian and the
        // orthonormal eigenbasis of a self-adjoint solve can be used.
        std::vector<cd> c(d - 1);
        if (fam.adjoint_paired) {
            for (int k = 1; 2 * k <= d; ++k) {
                if (k == d - k) {
                    c[k - 1] = cd(0.25 + uniform01(rng), 0.0);  // real weight on A_{d/2}
                } else {
                    c[k - 1] = std::polar(1.0, 2.0 * kPi * uniform01(rng));
                    c[d - k - 1] = std::conj(c[k - 1]);
                }
            }
        } else {
            for (int k = 1; k < d; ++k) c[k - 1] = std::polar(1.0, 2.0 * kPi * uniform01(rng));
        }

        Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, n);
        for (std::size_t k = 0; k < fam.ops.size(); ++k)
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j)
                    B(i, j) += c[k] * double(fam.ops[k].at(i, j));

        kernels::MatC V(n);
        bool solved = false;
        if (fam.adjoint_paired) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(B);
            if (es.info() == Eigen::Success) {
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = 0; j < n; ++j) V.at(i, j) = es.eigenvectors()(i, j);
                solved = true;
            }
        } else {
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(B, /*computeEigenvectors=*/true);
            if (es.info() == Eigen::Success) {
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = 0; j < n; ++j) V.at(i, j) = es.eigenvectors()(i, j);
                solved = true;
            }
        }
        if (!solved) continue;

        std::vector<EigenTupleRec> out(n);
        for (std::uint32_t j = 0; j < n; ++j) out[j].lambda.resize(d - 1);

        bool ok = true;
        double worst = 0.0;
        for (std::size_t k = 0; k < fam.ops.size() && ok; ++k) {
            kernels::MatC W = kernels::mul(ops_c[k], V);
            std::vector<cd> lam(n);
            for (std::uint32_t j = 0; j < n; ++j) {
                cd dot(0), nrm(0);
                for (std::uint32_t i = 0; i < n; ++i) {
                    dot += std::conj(V.at(i, j)) * W.at(i, j);
                    nrm += std::conj(V.at(i, j)) * V.at(i, j);
                }
                lam[j] = dot / nrm.real();
                out[j].lambda[k] = lam[j];
            }
            std::vector<double> res = kernels::column_residuals(W, V, lam);
            for (std::uint32_t j = 0; j < n; ++j) {
                out[j].residual = std::max(out[j].residual, res[j]);
                worst = std::max(worst, res[j]);
                if (res[j] > opt.residual_tol * (1.0 + norm_lb[k])) ok = false;
            }
        }
        worst_overall = std::max(worst_overall, worst);
        if (ok) return out;
    }

    std::ostringstream msg;
    msg << "simultaneous diagonalization failed after 5 attempts; worst residual " << worst_overall;
    throw std::runtime_error(msg.str());
}

std::string to_string(TupleClass c) {
    switch (c) {
        case TupleClass::Trivial: return "trivial";
        case TupleClass::InSd: return "in_sd";
        case TupleClass::PseudoOnly: return "pseudo_only";
        case TupleClass::Outside: return "outside";
    }
    return "?";
}

int count_components(const ColoredComplex& X) {
    std::vector<std::uint32_t> parent(X.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int k = 1; k < X.d; ++k)
        for (const ColoredEdge& e : X.color(k)) parent[find(e.u)] = find(e.v);
    int c = 0;
    for (std::uint32_t v = 0; v < X.n; ++v)
        if (find(v) == v) ++c;
    return c;
}

namespace {

VerifierReport classify_impl(const ColoredComplex& X, const OperatorFamily& fam,
                             const std::vector<EigenTupleRec>& tuples,
                             const VerifierOptions& opt) {
    VerifierReport rep;
    rep.d = X.d;
    rep.q = X.q;
    rep.n = X.n;
    rep.normal = fam.normal;
    rep.pairwise_commuting = fam.pairwise_commuting;
    rep.adjoint_paired = fam.adjoint_paired;
    rep.structural_ok = fam.structural_ok();
    rep.components = count_components(X);
    if (rep.components > 1)
        rep.notes.push_back("disconnected: " + std::to_string(rep.components) + " components");

    if (!rep.structural_ok) {
        std::string which;
        if (!fam.normal) which += " normal";
        if (!fam.pairwise_commuting) which += " pairwise_commuting";
        if (!fam.adjoint_paired) which += " adjoint_paired";
        rep.notes.push_back("not a building-quotient-like complex; failed flags:" + which);
        rep.exit_code = 3;
        return rep;
    }

    // group numerically equal tuples
    auto same = [&](const std::vector<cd>& a, const std::vector<cd>& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (std::abs(a[k] - b[k]) > opt.tol * (1.0 + std::abs(a[k]))) return false;
        return true;
    };
    for (const EigenTupleRec& t : tuples) {
        bool placed = false;
        for (ClassifiedTuple& g : rep.tuples) {
            if (same(g.lambda, t.lambda)) {
                ++g.multiplicity;
                g.residual = std::max(g.residual, t.residual);
                placed = true;
                break;
            }
        }
        if (!placed) {
            ClassifiedTuple g;
            g.lambda = t.lambda;
            g.multiplicity = 1;
            g.residual = t.residual;
            rep.tuples.push_back(std::move(g));
        }
    }

    const auto trivials = trivial_tuples(X.d, double(X.q), opt.t_index);
    int forensic_matches = 0;
    for (ClassifiedTuple& g : rep.tuples) {
        for (const TrivialTuple& tt : trivials) {
            bool match = true;
            for (int k = 0; k < X.d - 1 && match; ++k)
                match = std::abs(g.lambda[k] - tt.lambda[k]) <=
                        opt.tol * (1.0 + std::abs(tt.lambda[k]));
            if (match) {
                g.trivial_match = true;
                g.zeta = tt.zeta;
                break;
            }
        }

        if (g.trivial_match && !opt.treat_trivial_as_nontrivial) {
            g.cls = TupleClass::Trivial;
            continue;
        }
        if (g.trivial_match) ++forensic_matches;

        SpectrumVerdict v = in_sd(X.d, double(X.q), g.lambda, opt.tol);
        g.in_sd = v.member;
        g.sd_deviation = v.max_modulus_deviation;
        g.in_sdk.resize(X.d - 1);
        bool all_k = true;
        for (int k = 1; k < X.d; ++k) {
            bool m = in_sdk(X.d, double(X.q), k, g.lambda[k - 1], opt.curve_samples, opt.tol);
            g.in_sdk[k - 1] = m;
            all_k = all_k && m;
        }
        g.cls = v.member ? TupleClass::InSd
                         : (all_k ? TupleClass::PseudoOnly : TupleClass::Outside);
    }
    if (forensic_matches > 0)
        rep.notes.push_back("forensic: " + std::to_string(forensic_matches) +
                            " tuple(s) match trivial tuples but were classified as nontrivial");

    auto maxmod = [](const ClassifiedTuple& g) {
        double m = 0.0;
        for (const cd& x : g.lambda) m = std::max(m, std::abs(x));
        return m;
    };
    std::stable_sort(rep.tuples.begin(), rep.tuples.end(),
                     [&](const ClassifiedTuple& a, const ClassifiedTuple& b) {
                         return maxmod(a) > maxmod(b);
                     });

    bool any_nontrivial = false;
    rep.ramanujan = true;
    rep.pseudo_ramanujan = true;
    double worst_mod = -1.0;
    for (std::size_t i = 0; i < rep.tuples.size(); ++i) {
        const ClassifiedTuple& g = rep.tuples[i];
        if (g.cls == TupleClass::Trivial) continue;
        any_nontrivial = true;
        if (g.cls != TupleClass::InSd) {
            rep.ramanujan = false;
            if (maxmod(g) > worst_mod) {
                worst_mod = maxmod(g);
                rep.worst_offender = i;
            }
        }
        if (g.cls == TupleClass::Outside) rep.pseudo_ramanujan = false;
    }
    if (!any_nontrivial) rep.notes.push_back("no nontrivial spectrum");

    rep.exit_code = rep.ramanujan ? 0 : (rep.pseudo_ramanujan ? 1 : 2);
    return rep;
}

}  // namespace

VerifierReport classify(const ColoredComplex& X, const std::vector<EigenTupleRec>& tuples,
                        const VerifierOptions& opt) {
    return classify_impl(X, build_operators(X), tuples, opt);
}

VerifierReport verify_complex(const ColoredComplex& X, const VerifierOptions& opt) {
    OperatorFamily fam = build_operators(X);
    if (!fam.structural_ok()) return classify_impl(X, fam, {}, opt);
    return classify_impl(X, fam, joint_spectrum(fam, opt), opt);
}

}  // namespace rcx
