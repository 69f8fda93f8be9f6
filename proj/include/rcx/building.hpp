#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rcx/omatrix.hpp"

namespace rcx {

struct BuildingParams {
    int d;
    Field field;
};

/// A vertex of the building: the homothety class of a full-rank O-lattice in
/// F^d, held as its unique normalized canonical basis (upper triangular,
/// diagonal powers of t, minimal entry valuation zero).
struct LatticeClass {
    OMatrix rep;
    std::vector<int> diag_e;  // diagonal t-exponents of rep
};

LatticeClass base_vertex(const BuildingParams& bp);

/// Canonical representative of the homothety class of the lattice spanned by
/// the columns of `basis`. Throws std::domain_error on singular input.
LatticeClass canonical_class(const Field& F, const OMatrix& basis);

/// Vertex color: valuation of det(rep) mod d.
int vertex_color(const LatticeClass& v, int d);

/// Type (l_1 >= ... >= l_d), normalized so l_d = 0.
std::vector<int> vertex_type(const Field& F, const LatticeClass& v);

/// Distance from the base vertex: l_1 of the type.
int vertex_distance(const Field& F, const LatticeClass& v);

/// The [d choose k]_q coset representatives of the color-k neighbor move:
/// upper triangular, diagonal entry t at positions in a size-k subset C of
/// {1..d} and 1 elsewhere, constant entries from F_q at positions (i, j) with
/// i in C, j not in C, i < j. Subsets C are enumerated in lexicographic
/// order; within a family the constants run in odometer order over the free
/// positions taken row-major, last position fastest.
std::vector<OMatrix> omega_matrices(int d, int k, const Field& F);

/// Color-k neighbor classes of v, one per omega matrix (all distinct for a
/// genuine building vertex).
std::vector<LatticeClass> neighbors(const BuildingParams& bp, const LatticeClass& v, int k);

class BallCapExceeded : public std::runtime_error {
  public:
    explicit BallCapExceeded(std::size_t count)
        : std::runtime_error("ball vertex cap exceeded at " + std::to_string(count) + " vertices"),
          count(count) {}
    std::size_t count;
};

/// Ball of radius r around the base vertex. Vertex 0 is the base; indices
/// follow breadth-first discovery order. Out-edges are recorded for every
/// interior vertex (distance < r); edges[k-1][src] lists the color-k targets.
struct BuildingBall {
    explicit BuildingBall(BuildingParams p) : params(std::move(p)) {}

    BuildingParams params;
    int radius = 0;
    std::vector<LatticeClass> vertices;
    std::vector<int> color;
    std::vector<int> distance;
    std::vector<std::vector<int>> type;
    std::vector<std::vector<std::vector<std::uint32_t>>> edges;
    std::unordered_map<std::string, std::uint32_t> index_of;

    std::size_t size() const { return vertices.size(); }
    bool interior(std::uint32_t v) const { return distance[v] < radius; }
};

BuildingBall build_ball(const BuildingParams& bp, int radius, std::size_t vertex_cap = 1000000);

/// Distinct types among vertices at distance exactly n, with their counts.
std::map<std::vector<int>, std::size_t> count_types(const BuildingBall& ball, int n);

/// g = A_k f summed over recorded out-edges. Entries at boundary vertices
/// (no recorded out-edges) are zero; they are exact whenever f vanishes at
/// distance >= radius - 1, and callers must otherwise ignore them.
std::vector<long long> apply_color_op(const BuildingBall& ball, int k,
                                      const std::vector<long long>& f);

}  // namespace rcx
