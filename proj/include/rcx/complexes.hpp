#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcx {

struct ColoredEdge {
    std::uint32_t u = 0, v = 0;
    std::int64_t mult = 1;

    friend bool operator<(const ColoredEdge& a, const ColoredEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
    friend bool operator==(const ColoredEdge& a, const ColoredEdge& b) {
        return a.u == b.u && a.v == b.v && a.mult == b.mult;
    }
};

/// A finite colored complex: directed edges of colors 1..d-1 on n vertices,
/// reverse-closed (the color-(d-k) edge multiset is the reversal of the
/// color-k one). Edge lists are kept canonical: sorted by (u, v), merged.
struct ColoredComplex {
    int d = 2;
    std::int64_t q = 2;
    std::uint32_t n = 0;
    std::vector<std::vector<ColoredEdge>> edges;  // index k-1 holds color k
    std::vector<std::string> labels;              // empty, or one per vertex

    const std::vector<ColoredEdge>& color(int k) const { return edges[k - 1]; }
};

class ComplexFormatError : public std::runtime_error {
  public:
    enum Code {
        MalformedHeader,
        BadColor,
        BadVertex,
        BadEdge,
        ClosureViolation,
        VoltageConflict,
    };
    ComplexFormatError(Code code, int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          code(code),
          line(line) {}
    Code code;
    int line;
};

/// Sort each color's edges by (u, v) and merge duplicates.
void canonicalize_edges(ColoredComplex& X);

/// Whether the color-(d-k) edges are exactly the reversed color-k edges.
bool reverse_closure_holds(const ColoredComplex& X);

/// Repair reverse closure: each (u,v) pair's multiplicity at color k and its
/// reverse at color d-k are both raised to the larger of the two.
void complete_reverse_closure(ColoredComplex& X);

/// Parse the line-oriented `.rcx` format. With autocomplete (the default)
/// reverse closure is completed; otherwise a violation throws
/// ComplexFormatError{ClosureViolation}.
ColoredComplex load_complex(std::istream& in, bool autocomplete = true);
ColoredComplex load_complex_file(const std::string& path, bool autocomplete = true);

/// Write canonically: header, optional label lines, then edges sorted by
/// color then (u, v), multiplicity omitted when 1.
void save_complex(std::ostream& out, const ColoredComplex& X);
void save_complex_file(const std::string& path, const ColoredComplex& X);

/// Complete graph K_m as a d=2 complex with q = m-2 (so it is (q+1)-regular).
ColoredComplex gen_complete(int m);

/// Circulant graph C_m(jumps) as a d=2 complex with q = degree - 1, where
/// the degree is 2 per jump plus 1 for the jump m/2.
ColoredComplex gen_circulant(int m, const std::vector<int>& jumps);

/// Closed-form circulant spectrum: lambda_s = sum_j 2 cos(2 pi s j / m),
/// the jump m/2 contributing (-1)^s instead; s = 0..m-1.
std::vector<double> circulant_spectrum(int m, const std::vector<int>& jumps);

struct PermGenerator {
    int color = 1;
    std::vector<std::uint32_t> image;  // permutation of {0..m-1}, i -> image[i]
};

/// Cayley-style complex: for each supplied color-k generator g, directed
/// color-k edges x -> g(x) plus the inverse edges x -> g^{-1}(x) at color
/// d-k. When d-k == k and g is an involution the two coincide and are added
/// once.
ColoredComplex gen_cayley(int d, std::int64_t q, std::uint32_t m,
                          const std::vector<PermGenerator>& gens);

struct VoltageAssignment {
    std::uint32_t u = 0, v = 0;
    long w = 0;    // voltage in Z_m on the directed edge u -> v
    int line = 0;  // source line for error reporting, when parsed from a file
};

/// Degree-preserving Z_m cover of a d=2 base: vertex (x, a) = index x*m + a,
/// edges (x, a) -> (y, a + w(x,y) mod m). Voltages may be given on either
/// orientation (the reverse is the negation); conflicts throw. The base must
/// be loop-free. Unassigned edges get voltage 0.
ColoredComplex gen_voltage_cover(const ColoredComplex& base, int m,
                                 const std::vector<VoltageAssignment>& voltages);

}  // namespace rcx
