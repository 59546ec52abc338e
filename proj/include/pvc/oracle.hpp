#ifndef PVC_ORACLE_HPP
#define PVC_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

/// Refusal to enumerate an instance beyond the configured size guard.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The coverage target cannot be met (t > m) or is negative.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default enumeration guard: instances with more vertices are refused
/// unless the caller overrides the limit.
inline constexpr int kDefaultOracleMaxN = 24;

/// opt[k] = maximum edges coverable with budget k, for k = 0..K.
/// Unit-weight profiles index by subset size; weighted profiles index by
/// total vertex weight ("budget"). marginals[k] = opt[k] - opt[k-1] for
/// k >= 1 (marginals[0] is 0 and unused).
struct CoverageProfile {
    std::vector<int> opt;
    std::vector<int> marginals;
    bool weighted = false;

    static CoverageProfile from_opt(std::vector<int> opt_values, bool weighted_flag);
};

/// Result of the concavity check on a coverage profile.
/// holds <=> marginals are nonincreasing over the computed range;
/// otherwise first_violation is the smallest k with a_{k+1} > a_k.
struct MncReport {
    bool holds = true;
    std::optional<int> first_violation;
};

/// A (claimed-optimal) solution to a partial-cover instance.
struct PvcSolution {
    std::vector<int> vertices;
    int size = 0;
    int covered = 0;
    int t = 0;
};

/// Exhaustive best-coverage-per-size profile, opt[0..k_max], computed by
/// subset enumeration with branch-and-bound pruning (a branch dies when the
/// sum of the largest remaining degrees cannot beat the incumbent at any
/// reachable size). Requires unit weights and n <= max_n.
CoverageProfile opt_profile(const Graph& g, int k_max, int max_n = kDefaultOracleMaxN);
CoverageProfile opt_profile(const Graph& g);

/// Exhaustive best-coverage-per-weight-budget profile, opt[0..budget_max],
/// where a subset qualifies for budget k when its total weight is <= k.
/// Pass g.total_weight() as budget_max for the full saturating curve.
CoverageProfile weighted_profile(const Graph& g, int budget_max,
                                 int max_n = kDefaultOracleMaxN);

/// Checks that the marginal sequence is nonincreasing.
MncReport check_mnc(const CoverageProfile& p);

/// Minimum-cardinality set covering at least t edges, by enumeration.
/// Among minimum-size optima returns the lexicographically smallest
/// vertex-id set. Requires unit weights, 0 <= t <= m, and the size guard.
PvcSolution solve_pvc_bruteforce(const PvcInstance& inst, int max_n = kDefaultOracleMaxN);

}  // namespace pvc

#endif  // PVC_ORACLE_HPP
