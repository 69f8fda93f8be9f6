#include "rcx/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace rcx {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void canonicalize_edges(ColoredComplex& X) {
    for (auto& list : X.edges) {
        std::sort(list.begin(), list.end());
        std::vector<ColoredEdge> merged;
        for (const ColoredEdge& e : list) {
            if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v)
                merged.back().mult += e.mult;
            else
                merged.push_back(e);
        }
        list = std::move(merged);
    }
}

namespace {

std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> edge_map(
    const std::vector<ColoredEdge>& list, bool reversed) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> m;
    for (const ColoredEdge& e : list)
        m[reversed ? std::make_pair(e.v, e.u) : std::make_pair(e.u, e.v)] += e.mult;
    return m;
}

}  // namespace

bool reverse_closure_holds(const ColoredComplex& X) {
    for (int k = 1; k < X.d; ++k) {
        if (edge_map(X.color(k), false) != edge_map(X.color(X.d - k), true)) return false;
        if (2 * k >= X.d) break;
    }
    return true;
}

void complete_reverse_closure(ColoredComplex& X) {
    for (int k = 1; 2 * k <= X.d; ++k) {
        auto fwd = edge_map(X.color(k), false);
        auto rev = edge_map(X.color(X.d - k), true);
        for (const auto& [key, mult] : rev) {
            auto& m = fwd[key];
            m = std::max(m, mult);
        }
        std::vector<ColoredEdge> ks, dks;
        for (const auto& [key, mult] : fwd) {
            ks.push_back({key.first, key.second, mult});
            dks.push_back({key.second, key.first, mult});
        }
        X.edges[k - 1] = std::move(ks);
        X.edges[X.d - k - 1] = std::move(dks);
    }
    canonicalize_edges(X);
}

ColoredComplex load_complex(std::istream& in, bool autocomplete) {
    ColoredComplex X;
    bool saw_version = false, saw_d = false, saw_q = false, saw_n = false;
    bool saw_body = false;
    std::string raw;
    int lineno = 0;

    auto headers_done = [&]() { return saw_version && saw_d && saw_q && saw_n; };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;

        if (tag == "rcx") {
            int version = 0;
            if (saw_version || !(ls >> version) || version != 1)
                throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                         "expected `rcx 1` once, before everything else");
            saw_version = true;
        } else if (tag == "d" || tag == "q" || tag == "n") {
            if (!saw_version || saw_body)
                throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                         "header line out of place");
            long long val = -1;
            if (!(ls >> val))
                throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                         "header needs an integer value");
            if (tag == "d") {
                if (saw_d || val < 2 || val > 64)
                    throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                             "d must appear once, in 2..64");
                X.d = int(val);
                saw_d = true;
            } else if (tag == "q") {
                if (saw_q || val < 1)
                    throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                             "q must appear once and be >= 1");
                X.q = val;
                saw_q = true;
            } else {
                if (saw_n || val < 0)
                    throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                             "n must appear once and be >= 0");
                X.n = std::uint32_t(val);
                saw_n = true;
            }
        } else if (tag == "e") {
            if (!headers_done())
                throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                         "edge before complete header");
            if (!saw_body) {
                X.edges.assign(X.d - 1, {});
                saw_body = true;
            }
            long long k = -1, u = -1, v = -1, mult = 1;
            if (!(ls >> k >> u >> v))
                throw ComplexFormatError(ComplexFormatError::BadEdge, lineno,
                                         "edge needs `e <color> <u> <v> [mult]`");
            ls >> mult;
            std::string extra;
            if (ls >> extra)
                throw ComplexFormatError(ComplexFormatError::BadEdge, lineno,
                                         "trailing tokens after edge");
            if (k < 1 || k >= X.d)
                throw ComplexFormatError(ComplexFormatError::BadColor, lineno,
                                         "color must be in 1..d-1");
            if (u < 0 || u >= X.n || v < 0 || v >= X.n)
                throw ComplexFormatError(ComplexFormatError::BadVertex, lineno,
                                         "vertex index out of range");
            if (mult < 1)
                throw ComplexFormatError(ComplexFormatError::BadEdge, lineno,
                                         "multiplicity must be >= 1");
            X.edges[k - 1].push_back({std::uint32_t(u), std::uint32_t(v), mult});
        } else if (tag == "l") {
            if (!headers_done())
                throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                         "label before complete header");
            if (!saw_body) {
                X.edges.assign(X.d - 1, {});
                saw_body = true;
            }
            long long u = -1;
            if (!(ls >> u) || u < 0 || u >= X.n)
                throw ComplexFormatError(ComplexFormatError::BadVertex, lineno,
                                         "label vertex index out of range");
            std::string text;
            std::getline(ls, text);
            if (!text.empty() && text.front() == ' ') text.erase(text.begin());
            X.labels.resize(X.n);
            X.labels[std::uint32_t(u)] = text;
        } else {
            throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                     "unknown line tag `" + tag + "`");
        }
    }
    if (!headers_done())
        throw ComplexFormatError(ComplexFormatError::MalformedHeader, lineno,
                                 "incomplete header (need rcx, d, q, n)");
    if (!saw_body) X.edges.assign(X.d - 1, {});

    canonicalize_edges(X);
    if (!reverse_closure_holds(X)) {
        if (!autocomplete)
            throw ComplexFormatError(ComplexFormatError::ClosureViolation, lineno,
                                     "color-(d-k) edges are not the reversed color-k edges");
        complete_reverse_closure(X);
    }
    return X;
}

ColoredComplex load_complex_file(const std::string& path, bool autocomplete) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_complex(in, autocomplete);
}

void save_complex(std::ostream& out, const ColoredComplex& X) {
    out << "rcx 1\n";
    out << "d " << X.d << "\n";
    out << "q " << X.q << "\n";
    out << "n " << X.n << "\n";
    if (!X.labels.empty())
        for (std::uint32_t u = 0; u < X.n; ++u)
            if (!X.labels[u].empty()) out << "l " << u << " " << X.labels[u] << "\n";
    for (int k = 1; k < X.d; ++k)
        for (const ColoredEdge& e : X.color(k)) {
            out << "e " << k << " " << e.u << " " << e.v;
            if (e.mult != 1) out << " " << e.mult;
            out << "\n";
        }
}

void save_complex_file(const std::string& path, const ColoredComplex& X) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    save_complex(out, X);
}

ColoredComplex gen_complete(int m) {
    if (m < 3) throw std::invalid_argument("gen_complete: need m >= 3");
    ColoredComplex X;
    X.d = 2;
    X.q = m - 2;
    X.n = std::uint32_t(m);
    X.edges.assign(1, {});
    for (std::uint32_t u = 0; u < X.n; ++u)
        for (std::uint32_t v = 0; v < X.n; ++v)
            if (u != v) X.edges[0].push_back({u, v, 1});
    return X;
}

ColoredComplex gen_circulant(int m, const std::vector<int>& jumps) {
    if (m < 1) throw std::invalid_argument("gen_circulant: need m >= 1");
    std::vector<int> js = jumps;
    std::sort(js.begin(), js.end());
    if (std::adjacent_find(js.begin(), js.end()) != js.end())
        throw std::invalid_argument("gen_circulant: duplicate jumps");
    int degree = 0;
    for (int j : js) {
        if (j < 1 || 2 * j > m)
            throw std::invalid_argument("gen_circulant: jumps must lie in 1..m/2");
        degree += (2 * j == m) ? 1 : 2;
    }

    ColoredComplex X;
    X.d = 2;
    X.q = std::max(degree - 1, 1);
    X.n = std::uint32_t(m);
    X.edges.assign(1, {});
    for (std::uint32_t v = 0; v < X.n; ++v)
        for (int j : js) {
            X.edges[0].push_back({v, std::uint32_t((v + j) % m), 1});
            if (2 * j != m) X.edges[0].push_back({v, std::uint32_t((v + m - j) % m), 1});
        }
    canonicalize_edges(X);
    return X;
}

std::vector<double> circulant_spectrum(int m, const std::vector<int>& jumps) {
    std::vector<double> lam(m, 0.0);
    for (int s = 0; s < m; ++s)
        for (int j : jumps)
            lam[s] += (2 * j == m) ? (s % 2 == 0 ? 1.0 : -1.0) : 2.0 * std::cos(2.0 * kPi * s * j / m);
    return lam;
}

ColoredComplex gen_cayley(int d, std::int64_t q, std::uint32_t m,
                          const std::vector<PermGenerator>& gens) {
    if (d < 2) throw std::invalid_argument("gen_cayley: need d >= 2");
    ColoredComplex X;
    X.d = d;
    X.q = q;
    X.n = m;
    X.edges.assign(d - 1, {});
    for (const PermGenerator& g : gens) {
        if (g.color < 1 || g.color >= d)
            throw std::invalid_argument("gen_cayley: color must be in 1..d-1");
        if (g.image.size() != m)
            throw std::invalid_argument("gen_cayley: permutation length mismatch");
        std::vector<std::uint32_t> inverse(m, m);
        for (std::uint32_t x = 0; x < m; ++x) {
            if (g.image[x] >= m || inverse[g.image[x]] != m)
                throw std::invalid_argument("gen_cayley: not a permutation");
            inverse[g.image[x]] = x;
        }
        for (std::uint32_t x = 0; x < m; ++x) X.edges[g.color - 1].push_back({x, g.image[x], 1});
        if (d - g.color != g.color || inverse != g.image)
            for (std::uint32_t x = 0; x < m; ++x)
                X.edges[d - g.color - 1].push_back({x, inverse[x], 1});
    }
    canonicalize_edges(X);
    return X;
}

ColoredComplex gen_voltage_cover(const ColoredComplex& base, int m,
                                 const std::vector<VoltageAssignment>& voltages) {
    if (base.d != 2) throw std::invalid_argument("gen_voltage_cover: base must be d=2");
    if (m < 1) throw std::invalid_argument("gen_voltage_cover: need m >= 1");
    for (const ColoredEdge& e : base.color(1))
        if (e.u == e.v)
            throw std::invalid_argument("gen_voltage_cover: base must be loop-free");

    // voltage per unordered pair, stored for the (min -> max) direction
    std::map<std::pair<std::uint32_t, std::uint32_t>, long> volt;
    auto base_edges = edge_map(base.color(1), false);
    for (const VoltageAssignment& a : voltages) {
        if (a.u == a.v)
            throw ComplexFormatError(ComplexFormatError::VoltageConflict, a.line,
                                     "voltage on a loop");
        if (!base_edges.count({a.u, a.v}))
            throw ComplexFormatError(ComplexFormatError::VoltageConflict, a.line,
                                     "voltage on a non-edge " + std::to_string(a.u) + "->" +
                                         std::to_string(a.v));
        auto key = std::minmax(a.u, a.v);
        long w = (a.u < a.v) ? a.w : -a.w;
        auto [it, fresh] = volt.emplace(key, w);
        if (!fresh && ((it->second - w) % m != 0))
            throw ComplexFormatError(ComplexFormatError::VoltageConflict, a.line,
                                     "conflicting voltage for edge {" + std::to_string(key.first) +
                                         "," + std::to_string(key.second) + "}");
    }

    ColoredComplex X;
    X.d = 2;
    X.q = base.q;
    X.n = base.n * std::uint32_t(m);
    X.edges.assign(1, {});
    for (const ColoredEdge& e : base.color(1)) {
        auto key = std::minmax(e.u, e.v);
        auto it = volt.find(key);
        long w = (it == volt.end()) ? 0 : (e.u < e.v ? it->second : -it->second);
        long wm = ((w % m) + m) % m;
        for (std::uint32_t a = 0; a < std::uint32_t(m); ++a)
            X.edges[0].push_back({e.u * std::uint32_t(m) + a,
                                  e.v * std::uint32_t(m) + std::uint32_t((a + wm) % m), e.mult});
    }
    canonicalize_edges(X);
    return X;
}

}  // namespace rcx
