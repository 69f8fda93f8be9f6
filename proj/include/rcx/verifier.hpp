#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcx/complexes.hpp"
#include "rcx/kernels.hpp"
#include "rcx/spectrum.hpp"

namespace rcx {

/// The colored adjacency operators of a complex, with exactly-computed
/// structural flags. A_k[x][y] = multiplicity of the color-k edge x -> y,
/// so A_k acts on functions by summing over out-neighbors.
struct OperatorFamily {
    std::uint32_t n = 0;
    int d = 2;
    std::vector<kernels::MatI64> ops;  // A_1 .. A_{d-1}
    bool normal = false;
    bool pairwise_commuting = false;
    bool adjoint_paired = false;  // A_{d-k} == transpose(A_k) (integer entries)

    bool structural_ok() const { return normal && pairwise_commuting && adjoint_paired; }
};

OperatorFamily build_operators(const ColoredComplex& X);

struct EigenTupleRec {
    std::vector<cd> lambda;  // lambda_1 .. lambda_{d-1} for one joint eigenvector
    double residual = 0.0;   // max_k ||A_k v - lambda_k v||_2
};

struct VerifierOptions {
    double tol = 1e-6;           // spectrum membership / trivial matching tolerance
    double residual_tol = 1e-8;  // residual <= residual_tol * (1 + ||A_k||)
    int t_index = 1;             // [Gamma : Gamma meet PSL_d] when known; 1 admits all zeta^d = 1
    bool treat_trivial_as_nontrivial = false;  // forensic mode
    int curve_samples = 4096;
    std::uint64_t seed = 12345;
    bool strict = false;  // fail instead of auto-completing reverse closure on load
};

/// Joint spectrum of a commuting normal family: eigendecompose one random
/// unit-coefficient combination, read lambda_k = v* A_k v per basis vector,
/// and certify every vector by its residual, retrying with fresh
/// coefficients when clustering spoils a vector. Throws std::runtime_error
/// after 5 failed attempts.
std::vector<EigenTupleRec> joint_spectrum(const OperatorFamily& fam, const VerifierOptions& opt);

enum class TupleClass { Trivial, InSd, PseudoOnly, Outside };

std::string to_string(TupleClass c);

struct ClassifiedTuple {
    std::vector<cd> lambda;
    int multiplicity = 1;
    double residual = 0.0;
    TupleClass cls = TupleClass::Outside;
    cd zeta;                   // the matched root of unity, when cls == Trivial
    bool trivial_match = false;  // informational even in forensic mode
    bool in_sd = false;
    double sd_deviation = 0.0;  // max | |z_i| - 1 | over recovered Satake roots
    std::vector<bool> in_sdk;   // componentwise membership, index k-1
};

struct VerifierReport {
    int d = 2;
    std::int64_t q = 2;
    std::uint32_t n = 0;
    bool normal = false, pairwise_commuting = false, adjoint_paired = false;
    bool structural_ok = false;
    int components = 0;
    std::vector<ClassifiedTuple> tuples;  // grouped, sorted by descending max |lambda_k|
    bool ramanujan = false;
    bool pseudo_ramanujan = false;
    std::optional<std::size_t> worst_offender;  // index into tuples
    std::vector<std::string> notes;
    int exit_code = 3;  // 0 Ramanujan, 1 pseudo only, 2 neither, 3 structural failure
};

/// Group raw tuples, match against trivial_tuples(d, q, t_index), test the
/// rest against S_d and the S_{d,k} projections, and derive the verdicts.
VerifierReport classify(const ColoredComplex& X, const std::vector<EigenTupleRec>& tuples,
                        const VerifierOptions& opt);

/// build_operators + joint_spectrum + classify. Structural-flag failures
/// yield exit_code 3 with empty spectrum instead of throwing.
VerifierReport verify_complex(const ColoredComplex& X, const VerifierOptions& opt = {});

/// Number of weakly connected components of the union of all colors.
int count_components(const ColoredComplex& X);

}  // namespace rcx
