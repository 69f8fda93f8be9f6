#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "rcx/building.hpp"
#include "rcx/spectrum.hpp"

using namespace rcx;

namespace {

OMatrix mat2(const Field& F, const LocalPoly& a, const LocalPoly& b, const LocalPoly& c,
             const LocalPoly& d) {
    (void)F;
    OMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("base vertex") {
    for (int d : {2, 3}) {
        BuildingParams bp{d, Field::with_q(2)};
        LatticeClass v = base_vertex(bp);
        CHECK(v.rep == OMatrix::identity(d));
        CHECK(vertex_color(v, d) == 0);
        CHECK(vertex_distance(bp.field, v) == 0);
        CHECK(vertex_type(bp.field, v) == std::vector<int>(d, 0));
    }
}

TEST_CASE("omega matrices d=2 q=2") {
    Field F = Field::with_q(2);
    auto om = omega_matrices(2, 1, F);
    REQUIRE(om.size() == 3);
    LocalPoly one = LocalPoly::constant(1), t = LocalPoly::t_power(1), zero;
    CHECK(om[0] == mat2(F, t, zero, zero, one));
    CHECK(om[1] == mat2(F, t, one, zero, one));
    CHECK(om[2] == mat2(F, one, zero, zero, t));
}

TEST_CASE("omega matrices counts and family sizes") {
    Field F2 = Field::with_q(2);
    auto om = omega_matrices(4, 2, F2);
    REQUIRE(om.size() == 35);  // [4 choose 2]_2

    // per-subset family sizes, keyed by which diagonal entries are t,
    // in lexicographic subset order
    std::vector<std::pair<std::vector<int>, int>> families;
    for (const OMatrix& m : om) {
        std::vector<int> diag;
        for (int i = 0; i < 4; ++i)
            if (m.at(i, i) == LocalPoly::t_power(1)) diag.push_back(i);
        if (families.empty() || families.back().first != diag) families.push_back({diag, 0});
        ++families.back().second;
    }
    REQUIRE(families.size() == 6);
    std::vector<std::vector<int>> order = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<int> sizes = {16, 8, 4, 4, 2, 1};
    for (int i = 0; i < 6; ++i) {
        CHECK(families[i].first == order[i]);
        CHECK(families[i].second == sizes[i]);
    }

    Field F3 = Field::with_q(3);
    CHECK(omega_matrices(3, 2, F3).size() == 13);  // 9 + 3 + 1
    CHECK(omega_matrices(3, 1, F3).size() == 13);
    CHECK_THROWS_AS(omega_matrices(3, 0, F3), std::invalid_argument);
    CHECK_THROWS_AS(omega_matrices(3, 3, F3), std::invalid_argument);

    for (int d : {2, 3, 4})
        for (int k = 1; k < d; ++k)
            CHECK(omega_matrices(d, k, F2).size() == std::size_t(gaussian_binomial(d, k, 2)));
}

TEST_CASE("neighbors of the base vertex") {
    BuildingParams bp{3, Field::with_q(2)};
    LatticeClass base = base_vertex(bp);

    auto nb1 = neighbors(bp, base, 1);
    REQUIRE(nb1.size() == 7);
    std::set<std::string> keys;
    for (const LatticeClass& v : nb1) {
        keys.insert(omat_key(v.rep));
        CHECK(vertex_color(v, 3) == 1);
        CHECK(vertex_type(bp.field, v) == std::vector<int>{1, 0, 0});
    }
    CHECK(keys.size() == 7);  // all distinct

    auto nb2 = neighbors(bp, base, 2);
    REQUIRE(nb2.size() == 7);
    for (const LatticeClass& v : nb2) CHECK(vertex_type(bp.field, v) == std::vector<int>{1, 1, 0});
}

TEST_CASE("color-2 neighbors of a color-1 vertex include the base") {
    // the class of diag(t,1,1): moving by omega_1 then omega_2 passes through
    // diag(t,t,t) ~ identity
    BuildingParams bp{3, Field::with_q(2)};
    OMatrix D(3);
    D.at(0, 0) = LocalPoly::t_power(1);
    D.at(1, 1) = LocalPoly::constant(1);
    D.at(2, 2) = LocalPoly::constant(1);
    LatticeClass v = canonical_class(bp.field, D);

    auto nb = neighbors(bp, v, 2);
    REQUIRE(nb.size() == 7);
    int hits = 0;
    for (const LatticeClass& y : nb)
        if (y.rep == OMatrix::identity(3)) ++hits;
    CHECK(hits == 1);
}

TEST_CASE("canonicalization is representative independent") {
    std::mt19937 rng(31);
    for (int q : {2, 3}) {
        BuildingParams bp{3, Field::with_q(q)};
        LatticeClass base = base_vertex(bp);
        for (int it = 0; it < 20; ++it) {
            // walk a few random steps to a generic vertex
            LatticeClass v = base;
            for (int s = 0; s < 3; ++s) {
                auto nb = neighbors(bp, v, 1 + int(rng() % 2));
                v = nb[rng() % nb.size()];
            }
            OMatrix U = rcx::testing::random_unimodular(bp.field, rng, 3);
            LatticeClass w = canonical_class(bp.field, omat_mul(bp.field, v.rep, U));
            CHECK(w.rep == v.rep);

            // scaling by t^j does not change the class either
            OMatrix scaled(3);
            for (int i = 0; i < 9; ++i) scaled.a[i] = pshift(v.rep.a[i], 2);
            CHECK(canonical_class(bp.field, scaled).rep == v.rep);
        }
    }
}

TEST_CASE("ball sizes") {
    {
        BuildingParams bp{2, Field::with_q(2)};
        CHECK(build_ball(bp, 0).size() == 1);
        CHECK(build_ball(bp, 2).size() == 10);  // 1 + 3 + 6 on the 3-regular tree
        BuildingBall b3 = build_ball(bp, 3);
        CHECK(b3.size() == 22);  // + 12
        std::map<int, int> per_dist;
        for (std::size_t v = 0; v < b3.size(); ++v) ++per_dist[b3.distance[v]];
        CHECK(per_dist.at(0) == 1);
        CHECK(per_dist.at(1) == 3);
        CHECK(per_dist.at(2) == 6);
        CHECK(per_dist.at(3) == 12);
    }
    {
        BuildingParams bp{3, Field::with_q(2)};
        BuildingBall b = build_ball(bp, 1);
        CHECK(b.size() == 15);  // 1 + 7 + 7
        int c1 = 0, c2 = 0;
        for (std::size_t v = 0; v < b.size(); ++v) {
            if (b.color[v] == 1) ++c1;
            if (b.color[v] == 2) ++c2;
        }
        CHECK(c1 == 7);
        CHECK(c2 == 7);
    }
}

TEST_CASE("ball vertex cap") {
    BuildingParams bp{2, Field::with_q(2)};
    CHECK_THROWS_AS(build_ball(bp, 3, 5), BallCapExceeded);
    try {
        build_ball(bp, 3, 5);
    } catch (const BallCapExceeded& e) {
        CHECK(e.count == 6);
    }
}

TEST_CASE("ball structure: regularity, colors, reversal, distance") {
    BuildingParams bp{3, Field::with_q(2)};
    BuildingBall ball = build_ball(bp, 2);

    // vertex 0 is the base
    CHECK(ball.vertices[0].rep == OMatrix::identity(3));

    for (std::uint32_t x = 0; x < ball.size(); ++x) {
        if (!ball.interior(x)) continue;
        for (int k = 1; k < 3; ++k) {
            const auto& row = ball.edges[k - 1][x];
            CHECK(std::int64_t(row.size()) == gaussian_binomial(3, k, 2));
            std::set<std::uint32_t> distinct(row.begin(), row.end());
            CHECK(distinct.size() == row.size());
            for (std::uint32_t y : row) CHECK((ball.color[y] - ball.color[x] + 3) % 3 == k % 3);
        }
    }

    // reversal: x -> y at color k iff y -> x at color d-k, same multiplicity,
    // for interior pairs
    for (int k = 1; k < 3; ++k)
        for (std::uint32_t x = 0; x < ball.size(); ++x) {
            if (!ball.interior(x)) continue;
            for (std::uint32_t y : ball.edges[k - 1][x]) {
                if (!ball.interior(y)) continue;
                const auto& back = ball.edges[3 - k - 1][y];
                CHECK(std::count(back.begin(), back.end(), x) == 1);
            }
        }

    // breadth-first graph distance equals the elementary-divisor distance
    std::vector<int> layer(ball.size(), -1);
    layer[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t x = queue.front();
        queue.pop_front();
        for (const auto& color_edges : ball.edges)
            for (std::uint32_t y : color_edges[x])
                if (layer[y] < 0) {
                    layer[y] = layer[x] + 1;
                    queue.push_back(y);
                }
    }
    for (std::uint32_t v = 0; v < ball.size(); ++v) {
        if (layer[v] >= 0) CHECK(layer[v] == ball.distance[v]);
        // every vertex at distance < radius was reached
        if (ball.distance[v] < ball.radius) CHECK(layer[v] >= 0);
    }
}

TEST_CASE("type census") {
    {
        BuildingParams bp{2, Field::with_q(2)};
        BuildingBall ball = build_ball(bp, 3);
        auto t3 = count_types(ball, 3);
        REQUIRE(t3.size() == 1);
        CHECK(t3.begin()->first == std::vector<int>{3, 0});
        CHECK(t3.begin()->second == 12);
    }
    {
        BuildingParams bp{3, Field::with_q(2)};
        BuildingBall ball = build_ball(bp, 2);
        auto t1 = count_types(ball, 1);
        REQUIRE(t1.size() == 2);
        CHECK(t1.count({1, 0, 0}) == 1);
        CHECK(t1.count({1, 1, 0}) == 1);
        auto t2 = count_types(ball, 2);
        REQUIRE(t2.size() == 3);
        CHECK(t2.count({2, 0, 0}) == 1);
        CHECK(t2.count({2, 1, 0}) == 1);
        CHECK(t2.count({2, 2, 0}) == 1);
        CHECK_THROWS_AS(count_types(ball, 3), std::invalid_argument);
    }
}

TEST_CASE("vertex type of a diagonal representative") {
    BuildingParams bp{3, Field::with_q(2)};
    OMatrix D(3);
    D.at(0, 0) = LocalPoly::t_power(2);
    D.at(1, 1) = LocalPoly::t_power(1);
    D.at(2, 2) = LocalPoly::constant(1);
    LatticeClass v = canonical_class(bp.field, D);
    CHECK(vertex_type(bp.field, v) == std::vector<int>{2, 1, 0});
    CHECK(vertex_distance(bp.field, v) == 2);
}

TEST_CASE("colored operators commute on ball functions") {
    BuildingParams bp{3, Field::with_q(2)};
    BuildingBall ball = build_ball(bp, 3);
    std::mt19937 rng(37);

    for (int it = 0; it < 20; ++it) {
        std::vector<long long> f(ball.size(), 0);
        for (std::size_t v = 0; v < ball.size(); ++v)
            if (ball.distance[v] <= 1) f[v] = (long long)(rng() % 21) - 10;
        // supported at distance <= radius - 2, so both compositions are exact
        // on the interior and vanish identically on the boundary rows
        auto a12 = apply_color_op(ball, 1, apply_color_op(ball, 2, f));
        auto a21 = apply_color_op(ball, 2, apply_color_op(ball, 1, f));
        CHECK(a12 == a21);
    }
}
