#include "rainbowdom/rdf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rainbowdom/errors.hpp"

namespace rainbowdom {

using nlohmann::json;

ColorSet ColorSet::single(int color) {
    ColorSet s;
    s.add(color);
    return s;
}

ColorSet ColorSet::full(int t) {
    if (t < 0 || t > kMaxColors)
        throw std::invalid_argument("colorset: t must lie in 0.." + std::to_string(kMaxColors));
    return from_bits(t == 0 ? 0u : (1u << t) - 1u);
}

ColorSet ColorSet::from_members(const std::vector<int>& members) {
    ColorSet s;
    for (int c : members) s.add(c);
    return s;
}

void ColorSet::add(int color) {
    if (color < 1 || color > kMaxColors)
        throw std::invalid_argument("colorset: color " + std::to_string(color) + " out of range 1.." +
                                    std::to_string(kMaxColors));
    bits_ |= 1u << (color - 1);
}

void ColorSet::remove(int color) {
    if (color < 1 || color > kMaxColors)
        throw std::invalid_argument("colorset: color " + std::to_string(color) + " out of range 1.." +
                                    std::to_string(kMaxColors));
    bits_ &= ~(1u << (color - 1));
}

std::vector<int> ColorSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (int c = 1; c <= kMaxColors; ++c)
        if (contains(c)) out.push_back(c);
    return out;
}

std::string to_string(ColorSet s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int c : s.members()) {
        if (!first) out << ',';
        out << c;
        first = false;
    }
    out << '}';
    return out.str();
}

void RainbowAssignment::validate() const {
    if (t < 1 || t > ColorSet::kMaxColors)
        throw std::invalid_argument("assignment: t must lie in 1.." + std::to_string(ColorSet::kMaxColors) +
                                    ", got " + std::to_string(t));
    for (size_t v = 0; v < colors.size(); ++v) {
        if (colors[v].max_color() > t)
            throw std::invalid_argument("assignment: vertex " + std::to_string(v) + " uses color " +
                                        std::to_string(colors[v].max_color()) + " above t=" + std::to_string(t));
    }
}

int weight(const RainbowAssignment& a) {
    int w = 0;
    for (ColorSet s : a.colors) w += s.size();
    return w;
}

VerifyReport verify_trdf(const Graph& g, const RainbowAssignment& a) {
    a.validate();
    if (static_cast<int>(a.colors.size()) != g.n_vertices())
        throw std::invalid_argument("verify: assignment covers " + std::to_string(a.colors.size()) +
                                    " vertices but graph has " + std::to_string(g.n_vertices()));
    const ColorSet all = ColorSet::full(a.t);
    VerifyReport report;
    report.pass = true;
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (!a.colors[v].empty()) continue;
        ColorSet seen;
        for (int w : g.neighbors(v)) seen = seen | a.colors[w];
        const ColorSet missing = all - seen;
        if (!missing.empty()) {
            report.pass = false;
            report.violations.push_back({v, missing});
        }
    }
    return report;
}

bool is_singleton(const RainbowAssignment& a) {
    return std::all_of(a.colors.begin(), a.colors.end(), [](ColorSet s) { return s.size() <= 1; });
}

long long Census::weight() const {
    long long w = 0;
    for (size_t i = 0; i < by_size.size(); ++i) w += static_cast<long long>(i) * by_size[i];
    return w;
}

Census census(const RainbowAssignment& a) {
    a.validate();
    Census c;
    c.by_size.assign(a.t + 1, 0);
    c.class_size.assign(a.t, 0);
    for (ColorSet s : a.colors) {
        ++c.by_size[s.size()];
        for (int color = 1; color <= a.t; ++color)
            if (s.contains(color)) ++c.class_size[color - 1];
    }
    return c;
}

namespace {

// Applies perm (old color c -> perm[c-1]) to every set.
std::vector<ColorSet> apply_permutation(const std::vector<ColorSet>& sets, const std::vector<int>& perm) {
    std::vector<ColorSet> out(sets.size());
    for (size_t v = 0; v < sets.size(); ++v) {
        ColorSet mapped;
        for (int c : sets[v].members()) mapped.add(perm[c - 1]);
        out[v] = mapped;
    }
    return out;
}

} // namespace

RainbowAssignment canonicalize_colors(const RainbowAssignment& a) {
    a.validate();
    ColorSet used;
    for (ColorSet s : a.colors) used = used | s;
    const std::vector<int> used_colors = used.members();
    const int u = static_cast<int>(used_colors.size());

    // The minimal form maps the used colors onto 1..u (mapping any used color
    // below an unused one strictly lowers the first set containing it), so it
    // suffices to scan the u! images of that mapping.
    std::vector<int> targets(u);
    std::iota(targets.begin(), targets.end(), 1);

    std::vector<ColorSet> best = a.colors;
    bool have_best = false;
    do {
        std::vector<int> perm(a.t, 0);
        for (int i = 0; i < u; ++i) perm[used_colors[i] - 1] = targets[i];
        std::vector<ColorSet> candidate = apply_permutation(a.colors, perm);
        if (!have_best || candidate < best) {
            best = std::move(candidate);
            have_best = true;
        }
    } while (std::next_permutation(targets.begin(), targets.end()));

    RainbowAssignment out;
    out.t = a.t;
    out.colors = std::move(best);
    return out;
}

RainbowAssignment parse_assignment(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("assignment json (byte " + std::to_string(e.byte) + ")", e.what());
    }
    if (!doc.is_object()) throw ParseError("assignment json", "top-level value must be an object");
    if (!doc.contains("t") || !doc["t"].is_number_integer()) throw ParseError("t", "missing or not an integer");
    RainbowAssignment a;
    a.t = doc["t"].get<int>();
    if (a.t < 1 || a.t > ColorSet::kMaxColors)
        throw ParseError("t", "must lie in 1.." + std::to_string(ColorSet::kMaxColors));
    if (!doc.contains("colors") || !doc["colors"].is_array())
        throw ParseError("colors", "missing or not an array");
    int v = 0;
    for (const auto& entry : doc["colors"]) {
        const std::string where = "colors[" + std::to_string(v) + "]";
        if (!entry.is_array()) throw ParseError(where, "must be an array of colors");
        ColorSet s;
        for (const auto& item : entry) {
            if (!item.is_number_integer()) throw ParseError(where, "colors must be integers");
            const int c = item.get<int>();
            if (c < 1 || c > a.t)
                throw ParseError(where, "color " + std::to_string(c) + " out of range 1.." + std::to_string(a.t));
            if (s.contains(c)) throw ParseError(where, "duplicate color " + std::to_string(c));
            s.add(c);
        }
        a.colors.push_back(s);
        ++v;
    }
    return a;
}

std::string serialize_assignment(const RainbowAssignment& a) {
    a.validate();
    json doc;
    doc["t"] = a.t;
    json colors = json::array();
    for (ColorSet s : a.colors) colors.push_back(s.members());
    doc["colors"] = std::move(colors);
    return doc.dump(2) + "\n";
}

} // namespace rainbowdom
