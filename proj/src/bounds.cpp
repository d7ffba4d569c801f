#include "rainbowdom/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "rainbowdom/graph.hpp"

namespace rainbowdom {

namespace {

// Exact rounding of nonnegative fractions; every published formula reduces to
// one of these on integer products, so no rational type is needed.
long long ceil_frac(long long num, long long den) { return (num + den - 1) / den; }
long long floor_frac(long long num, long long den) { return num / den; }

void add_source(BoundReport& r, const std::string& id) {
    if (std::find(r.sources.begin(), r.sources.end(), id) == r.sources.end()) r.sources.push_back(id);
}

void validate_pckk(int c, int k, int t) {
    if (c < 3) throw std::invalid_argument("bounds: c must be at least 3, got " + std::to_string(c));
    if (k < 1) throw std::invalid_argument("bounds: k must be at least 1, got " + std::to_string(k));
    if (t < 1 || t > 16) throw std::invalid_argument("bounds: t must lie in 1..16, got " + std::to_string(t));
}

// The singleton case-table value for P(ck,k), dispatched on (c,k) residues.
// Always integral: the only half-integer term c*(k+1/2) occurs for even c.
long long case_table_inner(long long c, long long k) {
    const long long ck = c * k;
    if (c % 6 == 0) {
        if (k % 6 == 1 || k % 6 == 5) return ck;
        if (k % 2 == 0) return floor_frac(c * (2 * k + 1), 2);
        return c * (k + 1);
    }
    if (c % 2 == 1) {
        if (k % 6 == 1 || k % 6 == 5) return ck + ceil_frac(k, 2);
        if (k % 2 == 0) return ck + floor_frac(c, 2) + k / 2;
        return c * (k + 1) + ceil_frac(k - 2, 2);
    }
    // c even, c != 0 (mod 6)
    if (k % 6 == 1 || k % 6 == 5) return ck + k + 1;
    if (k % 2 == 0) return ck + c / 2 + k;
    return ck + c + k - 2;
}

// True for the two c = 0 (mod 6) rows whose printed 4-rainbow coefficient
// is 5/3 instead of 4/3.
bool printed_coefficient_differs(int c, int k) {
    return c % 6 == 0 && k % 6 != 1 && k % 6 != 5;
}

} // namespace

std::string to_string(TableMode mode) {
    return mode == TableMode::as_printed ? "as_printed" : "corrected";
}

TableMode table_mode_from_string(const std::string& name) {
    if (name == "as_printed") return TableMode::as_printed;
    if (name == "corrected") return TableMode::corrected;
    throw std::invalid_argument("unknown table mode '" + name + "' (expected as_printed or corrected)");
}

long long generic_lower_bound(long long n_vertices, int degree, int t) {
    if (degree < 1) throw std::invalid_argument("generic_lower_bound: degree must be at least 1");
    if (n_vertices < 0) throw std::invalid_argument("generic_lower_bound: negative vertex count");
    if (t >= 2 * degree) return n_vertices;
    return ceil_frac(static_cast<long long>(t) * n_vertices, 2LL * degree);
}

bool is_characterized_extremal(int n, int k, int t) {
    if (t < 3 || t > 5)
        throw std::invalid_argument("is_characterized_extremal: t must be 3, 4 or 5, got " + std::to_string(t));
    PetersenParams params(n, k); // validates
    (void)params;
    return n % 6 == 0 && (k % 6 == 1 || k % 6 == 5);
}

bool characterization_r1(int n, int k) {
    PetersenParams params(n, k);
    (void)params;
    return n % 4 == 0 && k % 2 == 1;
}

bool characterization_r2(int c, int k) {
    if (c < 3 || k < 1) throw std::invalid_argument("characterization_r2: need c >= 3, k >= 1");
    return c % 5 == 0 && (k % 10 == 2 || k % 10 == 8);
}

std::optional<long long> known_exact_pn1(long long n, int t) {
    if (t == 2 && n >= 5) return n;
    if (t == 3 && n >= 6) {
        static constexpr long long alpha_by_residue[6] = {0, 1, 1, 1, 2, 1};
        return n + alpha_by_residue[n % 6];
    }
    return std::nullopt;
}

BoundReport bounds_pckk(int c, int k, int t, TableMode mode) {
    validate_pckk(c, k, t);
    const long long ck = static_cast<long long>(c) * k;
    const long long vertices = 2 * ck;

    BoundReport r;
    r.mode = mode;

    if (t >= 6) {
        r.lower = r.upper = vertices;
        r.exact = vertices;
        add_source(r, kSrcRegularLowerBound);
        return r;
    }

    r.lower = generic_lower_bound(vertices, 3, t);
    add_source(r, kSrcRegularLowerBound);

    // Candidate upper bounds; the tightest applicable one wins.
    std::vector<std::pair<long long, std::string>> uppers;

    const bool extremal = t >= 3 && c % 6 == 0 && (k % 6 == 1 || k % 6 == 5);
    const long long inner = case_table_inner(c, k);

    switch (t) {
        case 1: {
            const long long family_lower = ceil_frac(ck, 2);
            if (family_lower > r.lower) r.lower = family_lower;
            add_source(r, kSrcDominationBounds);
            uppers.push_back({ceil_frac(static_cast<long long>(c + 1) * k, 2) + 1, kSrcDominationBounds});
            if (characterization_r1(static_cast<int>(ck), k)) {
                r.exact = ck / 2;
                add_source(r, kSrcDominationCharacterization);
            }
            break;
        }
        case 2: {
            const long long family_lower = ceil_frac(4 * ck, 5);
            if (family_lower > r.lower) r.lower = family_lower;
            add_source(r, kSrc2RainbowBounds);
            uppers.push_back({ceil_frac(4LL * (c + 1) * (k + 1), 5) + 1, kSrc2RainbowBounds});
            if (characterization_r2(c, k)) {
                add_source(r, kSrc2RainbowCharacterization);
                const long long printed = ck;
                const long long at_lower = ceil_frac(4 * ck, 5);
                if (mode == TableMode::as_printed) {
                    r.exact = printed;
                    r.note = "2-rainbow characterization value as printed (" + std::to_string(printed) +
                             "); it exceeds the family lower bound the minimality condition should meet (" +
                             std::to_string(at_lower) + ")";
                } else {
                    r.exact = at_lower;
                    r.note = "2-rainbow characterization value read as the family lower bound (" +
                             std::to_string(at_lower) + "); the printed statement says " + std::to_string(printed);
                }
            }
            break;
        }
        case 3: {
            if (extremal) {
                r.exact = ck;
                add_source(r, kSrcExtremalCharacterization);
            } else {
                // Every non-characterized table row states ck < gamma.
                r.lower = std::max(r.lower, ck + 1);
                add_source(r, kSrc3RainbowCaseTable);
            }
            uppers.push_back({inner, kSrc3RainbowCaseTable});
            uppers.push_back({static_cast<long long>(c + 1) * (k + 1) - 3, kSrc3RainbowBounds});
            break;
        }
        case 4: {
            if (extremal) {
                r.exact = ceil_frac(4 * ck, 3);
                add_source(r, kSrcExtremalCharacterization);
            }
            long long coef_num = 4;
            if (mode == TableMode::as_printed && printed_coefficient_differs(c, k)) {
                coef_num = 5;
                r.note = "case-table coefficient 5/3 as printed; corrected mode uses 4/3";
            }
            uppers.push_back({ceil_frac(coef_num * inner, 3), kSrc4RainbowCaseTable});
            uppers.push_back({ceil_frac(4LL * (c + 1) * (k + 1), 3) - 4, kSrc4RainbowBounds});
            break;
        }
        case 5: {
            if (extremal) {
                r.exact = ceil_frac(5 * ck, 3);
                add_source(r, kSrcExtremalCharacterization);
            }
            uppers.push_back({ceil_frac(5 * inner, 3), kSrc5RainbowCaseTable});
            uppers.push_back({ceil_frac(5LL * (c + 1) * (k + 1), 3) - 5, kSrc5RainbowBounds});
            break;
        }
        default:
            break;
    }

    r.upper = uppers.front().first;
    for (const auto& [value, source] : uppers)
        if (value < r.upper) r.upper = value;
    for (const auto& [value, source] : uppers)
        if (value == r.upper) add_source(r, source);

    // A characterized value subsumes the interval, except for the 2-rainbow
    // reading as printed, which is kept alongside the printed bounds so the
    // inconsistency stays visible.
    if (r.exact && !(t == 2 && mode == TableMode::as_printed)) {
        r.lower = *r.exact;
        r.upper = *r.exact;
    }
    return r;
}

} // namespace rainbowdom
