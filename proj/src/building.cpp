#include "rcx/building.hpp"

#include <algorithm>
#include <deque>

namespace rcx {

LatticeClass base_vertex(const BuildingParams& bp) {
    LatticeClass v;
    v.rep = OMatrix::identity(bp.d);
    v.diag_e.assign(bp.d, 0);
    return v;
}

LatticeClass canonical_class(const Field& F, const OMatrix& basis) {
    OMatrix H = hermite_canonical(F, basis);
    int m = min_entry_valuation(H);
    if (m > 0) H = divide_by_t_power(H, m);
    LatticeClass v;
    v.diag_e = diag_t_exponents(H);
    v.rep = std::move(H);
    return v;
}

int vertex_color(const LatticeClass& v, int d) {
    long long s = 0;
    for (int e : v.diag_e) s += e;
    return int(s % d);
}

std::vector<int> vertex_type(const Field& F, const LatticeClass& v) {
    std::vector<int> ell = elementary_divisors(F, v.rep);
    int base = ell.back();
    for (int& e : ell) e -= base;
    return ell;
}

int vertex_distance(const Field& F, const LatticeClass& v) {
    return vertex_type(F, v).front();
}

std::vector<OMatrix> omega_matrices(int d, int k, const Field& F) {
    if (k < 1 || k >= d) throw std::invalid_argument("omega_matrices: k must be in 1..d-1");

    std::vector<OMatrix> out;
    std::vector<int> C(k);
    for (int i = 0; i < k; ++i) C[i] = i;  // current subset, 0-based, ascending

    const int q = F.q();
    while (true) {
        std::vector<bool> in_C(d, false);
        for (int i : C) in_C[i] = true;

        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < d; ++i) {
            if (!in_C[i]) continue;
            for (int j = i + 1; j < d; ++j)
                if (!in_C[j]) free_pos.emplace_back(i, j);
        }

        std::vector<int> val(free_pos.size(), 0);
        while (true) {
            OMatrix m(d);
            for (int i = 0; i < d; ++i)
                m.at(i, i) = in_C[i] ? LocalPoly::t_power(1) : LocalPoly::constant(1);
            for (std::size_t p = 0; p < free_pos.size(); ++p)
                m.at(free_pos[p].first, free_pos[p].second) = LocalPoly::constant(felem(val[p]));
            out.push_back(std::move(m));

            int p = int(free_pos.size()) - 1;
            while (p >= 0 && val[p] == q - 1) val[p--] = 0;
            if (p < 0) break;
            ++val[p];
        }

        // next k-subset in lexicographic order
        int i = k - 1;
        while (i >= 0 && C[i] == d - k + i) --i;
        if (i < 0) break;
        ++C[i];
        for (int j = i + 1; j < k; ++j) C[j] = C[j - 1] + 1;
    }
    return out;
}

std::vector<LatticeClass> neighbors(const BuildingParams& bp, const LatticeClass& v, int k) {
    std::vector<LatticeClass> out;
    for (const OMatrix& m : omega_matrices(bp.d, k, bp.field))
        out.push_back(canonical_class(bp.field, omat_mul(bp.field, v.rep, m)));
    return out;
}

BuildingBall build_ball(const BuildingParams& bp, int radius, std::size_t vertex_cap) {
    if (radius < 0) throw std::invalid_argument("build_ball: radius must be >= 0");
    BuildingBall ball(bp);
    ball.radius = radius;
    ball.edges.assign(bp.d - 1, {});

    auto add_vertex = [&](LatticeClass&& v) -> std::uint32_t {
        std::string key = omat_key(v.rep);
        auto it = ball.index_of.find(key);
        if (it != ball.index_of.end()) return it->second;
        if (ball.size() >= vertex_cap) throw BallCapExceeded(ball.size() + 1);
        auto idx = std::uint32_t(ball.size());
        ball.index_of.emplace(std::move(key), idx);
        ball.color.push_back(vertex_color(v, bp.d));
        ball.type.push_back(vertex_type(bp.field, v));
        ball.distance.push_back(ball.type.back().front());
        ball.vertices.push_back(std::move(v));
        for (auto& e : ball.edges) e.emplace_back();
        return idx;
    };

    add_vertex(base_vertex(bp));

    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t x = queue.front();
        queue.pop_front();
        if (!ball.interior(x)) continue;  // boundary vertices are not expanded
        for (int k = 1; k < bp.d; ++k) {
            auto nb = neighbors(bp, ball.vertices[x], k);
            // add_vertex grows ball.edges, so collect the row locally
            std::vector<std::uint32_t> row;
            row.reserve(nb.size());
            for (LatticeClass& y : nb) {
                bool fresh = ball.index_of.find(omat_key(y.rep)) == ball.index_of.end();
                std::uint32_t yi = add_vertex(std::move(y));
                row.push_back(yi);
                if (fresh) queue.push_back(yi);
            }
            ball.edges[k - 1][x] = std::move(row);
        }
    }
    return ball;
}

std::map<std::vector<int>, std::size_t> count_types(const BuildingBall& ball, int n) {
    if (n > ball.radius) throw std::invalid_argument("count_types: n exceeds the ball radius");
    std::map<std::vector<int>, std::size_t> counts;
    for (std::size_t v = 0; v < ball.size(); ++v)
        if (ball.distance[v] == n) ++counts[ball.type[v]];
    return counts;
}

std::vector<long long> apply_color_op(const BuildingBall& ball, int k,
                                      const std::vector<long long>& f) {
    if (k < 1 || k >= ball.params.d) throw std::invalid_argument("apply_color_op: bad color");
    if (f.size() != ball.size()) throw std::invalid_argument("apply_color_op: size mismatch");
    std::vector<long long> g(ball.size(), 0);
    for (std::size_t x = 0; x < ball.size(); ++x)
        for (std::uint32_t y : ball.edges[k - 1][x]) g[x] += f[y];
    return g;
}

}  // namespace rcx
