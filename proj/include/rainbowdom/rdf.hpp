#ifndef RAINBOWDOM_RDF_HPP
#define RAINBOWDOM_RDF_HPP

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

#include "rainbowdom/graph.hpp"

namespace rainbowdom {

/// Subset of the colors {1..16}, packed into one word (bit i-1 <-> color i).
/// Ordered by the packed value, which is the total order used everywhere a
/// "lexicographically least" set sequence is required.
class ColorSet {
public:
    static constexpr int kMaxColors = 16;

    constexpr ColorSet() = default;

    static ColorSet single(int color);
    static ColorSet full(int t);
    static constexpr ColorSet from_bits(std::uint32_t bits) {
        ColorSet s;
        s.bits_ = bits & 0xFFFFu;
        return s;
    }
    static ColorSet from_members(const std::vector<int>& members);

    bool contains(int color) const { return color >= 1 && color <= kMaxColors && (bits_ >> (color - 1)) & 1u; }
    void add(int color);
    void remove(int color);

    int size() const { return __builtin_popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    /// Largest member, 0 when empty.
    int max_color() const { return bits_ == 0 ? 0 : 32 - __builtin_clz(bits_); }

    std::uint32_t bits() const { return bits_; }
    std::vector<int> members() const;

    friend ColorSet operator|(ColorSet a, ColorSet b) { return from_bits(a.bits_ | b.bits_); }
    friend ColorSet operator&(ColorSet a, ColorSet b) { return from_bits(a.bits_ & b.bits_); }
    /// Set difference a \ b.
    friend ColorSet operator-(ColorSet a, ColorSet b) { return from_bits(a.bits_ & ~b.bits_); }
    bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }

    auto operator<=>(const ColorSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

std::string to_string(ColorSet s);

/// Candidate t-rainbow domination function: one ColorSet per vertex.
struct RainbowAssignment {
    int t = 1;
    std::vector<ColorSet> colors;

    RainbowAssignment() = default;
    RainbowAssignment(int t, int n_vertices) : t(t), colors(n_vertices) {}

    /// Throws std::invalid_argument when t is out of 1..16 or some vertex
    /// uses a color above t.
    void validate() const;
};

int weight(const RainbowAssignment& a);

struct Violation {
    int vertex = 0;
    ColorSet missing;

    bool operator==(const Violation&) const = default;
};

/// Verdict of the t-rainbow domination check. Violations list every uncolored
/// vertex that does not see all t colors, together with the exact colors it
/// lacks; the list is exhaustive, not first-failure.
struct VerifyReport {
    bool pass = false;
    std::vector<Violation> violations;
};

VerifyReport verify_trdf(const Graph& g, const RainbowAssignment& a);

bool is_singleton(const RainbowAssignment& a);

/// Vertex counts by assigned-set size (by_size[i] = #{v : |f(v)| = i}) and
/// color class sizes (class_size[i-1] = |{v : i in f(v)}|).
struct Census {
    std::vector<long long> by_size;
    std::vector<long long> class_size;

    long long weight() const;
};

Census census(const RainbowAssignment& a);

/// Relabels colors by the permutation that makes the vertex-major sequence of
/// packed sets smallest. Idempotent, weight-preserving, and commutes with
/// verify_trdf verdicts. O(u! * n) over the u <= t colors actually used.
RainbowAssignment canonicalize_colors(const RainbowAssignment& a);

// Assignment text format: {"t": T, "colors": [[...], ...]}, inner lists sorted
// ascending. parse rejects members outside 1..t, naming vertex and color.
RainbowAssignment parse_assignment(const std::string& text);
std::string serialize_assignment(const RainbowAssignment& a);

} // namespace rainbowdom

#endif
