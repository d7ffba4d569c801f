#ifndef RAINBOWDOM_BOUNDS_HPP
#define RAINBOWDOM_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace rainbowdom {

/// Two reading modes for the published case tables of 4-rainbow bounds. The
/// table as printed carries a 5/3 coefficient in two of its c = 0 (mod 6)
/// cases; the corrected mode uses the 4/3 coefficient implied by the lift
/// scaling. Nothing else differs between the modes, except the value attached
/// to the 2-rainbow characterization (see bounds_pckk).
enum class TableMode { as_printed, corrected };

std::string to_string(TableMode mode);
TableMode table_mode_from_string(const std::string& name);

/// Bounds on gamma_rt for one (graph family, t) query, with the ids of the
/// formulas that produced them. `note` flags the places where the two table
/// readings disagree.
struct BoundReport {
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    std::vector<std::string> sources;
    TableMode mode = TableMode::corrected;
    std::string note;
};

// Source ids used in BoundReport::sources.
inline constexpr const char* kSrcRegularLowerBound = "regular-lower-bound";
inline constexpr const char* kSrcExtremalCharacterization = "extremal-characterization";
inline constexpr const char* kSrcDominationBounds = "domination-bounds";
inline constexpr const char* kSrcDominationCharacterization = "domination-characterization";
inline constexpr const char* kSrc2RainbowBounds = "2rainbow-bounds";
inline constexpr const char* kSrc2RainbowCharacterization = "2rainbow-characterization";
inline constexpr const char* kSrc3RainbowBounds = "3rainbow-bounds";
inline constexpr const char* kSrc3RainbowCaseTable = "3rainbow-case-table";
inline constexpr const char* kSrc4RainbowBounds = "4rainbow-bounds";
inline constexpr const char* kSrc4RainbowCaseTable = "4rainbow-case-table";
inline constexpr const char* kSrc5RainbowBounds = "5rainbow-bounds";
inline constexpr const char* kSrc5RainbowCaseTable = "5rainbow-case-table";

/// gamma_rt(G) >= ceil(t |V| / 2d) for d-regular G, and gamma_rt(G) = |V|
/// once t >= 2d.
long long generic_lower_bound(long long n_vertices, int degree, int t);

/// True iff gamma_rt(P(n,k)) equals the general lower bound t*n/3, which for
/// t in {3,4,5} happens exactly when n = 0 (mod 6) and k = 1 or 5 (mod 6).
bool is_characterized_extremal(int n, int k, int t);

/// Full bound report for P(ck,k). Lower bound is the tightest family bound,
/// upper bound the minimum over the applicable case-table and general
/// formulas; exact is filled for characterized cases and for t >= 6. All
/// fractional formulas are evaluated exactly and ceiling-rounded.
BoundReport bounds_pckk(int c, int k, int t, TableMode mode = TableMode::corrected);

/// Literature-exact values for P(n,1): gamma_r2 = n (n >= 5) and
/// gamma_r3 = n + alpha with alpha determined by n mod 6 (n >= 6).
std::optional<long long> known_exact_pn1(long long n, int t);

/// gamma_r1(P(n,k)) = n/2 iff n = 0 (mod 4) and k odd.
bool characterization_r1(int n, int k);

/// The published 2-rainbow minimality condition: c = 0 (mod 5) and
/// k = 2 or 8 (mod 10). The exact value attached to it is mode-dependent;
/// see bounds_pckk.
bool characterization_r2(int c, int k);

} // namespace rainbowdom

#endif
