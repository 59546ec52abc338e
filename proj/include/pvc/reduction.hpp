#ifndef PVC_REDUCTION_HPP
#define PVC_REDUCTION_HPP

#include <iosfwd>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/oracle.hpp"

namespace pvc {

enum class ProvKind : uint8_t { OriginalVertex, EdgeBlockLeft, EdgeBlockRight };

/// Where a vertex of the reduced graph came from: a source vertex (ref =
/// its id) or one side of the gadget built for source edge `ref` (1-based
/// edge index). The block-left vertex carries the block edge plus the two
/// incidence edges (degree 3); the block-right vertex carries only the
/// block edge (degree 1).
struct VertexProvenance {
    ProvKind kind = ProvKind::OriginalVertex;
    int ref = 0;
};

/// Output of the clique -> bipartite partial-cover reduction.
/// For a source graph with n' vertices and m' edges the reduced graph has
/// n' + 2m' vertices and 3m' edges; a k-clique exists in the source iff
/// budget vertices can cover at least target_t reduced edges, provided
/// m' > k(k-1)/2 and k >= 5 (precondition_warning is set otherwise).
struct ReductionArtifact {
    Graph bipartite;
    BipartiteLabeling labeling;
    int budget = 0;    // k + m' - k(k-1)/2 (may be negative on degenerate inputs)
    int target_t = 0;  // 3m' - k(k-1)/2 (ditto)
    std::vector<VertexProvenance> provenance;  // index 0 unused
    std::vector<std::pair<int, int>> source_edges;
    int source_n = 0;
    int source_m = 0;
    int clique_k = 0;
    bool precondition_warning = false;
};

/// Builds the gadget instance. Vertex ids: source vertex i maps to i;
/// source edge q (1-based) contributes block-left n'+2q-1 and block-right
/// n'+2q. Requires 2 <= k <= n'.
ReductionArtifact reduce_clique_to_pvcb(const Graph& source, int k);

/// Maps a k-clique of the source to a cover of the reduced graph: the k
/// vertex images plus the block-left vertex of every source edge not inside
/// the clique. The result has exactly `budget` vertices and is validated to
/// cover at least target_t edges. Throws std::invalid_argument when the
/// input is not a clique of size clique_k.
std::vector<int> clique_to_cover(const ReductionArtifact& art, const std::vector<int>& clique);

/// Certificates gathered while checking one (source, k) pair.
struct VerificationResult {
    bool clique_exists = false;
    bool pvcb_feasible = false;
    bool equivalent = false;
    std::vector<int> clique;  // one k-clique, when present
    std::vector<int> cover;   // budget-size cover reaching target_t, when available
};

/// Checks [a k-clique exists] <=> [budget vertices can cover >= target_t
/// reduced edges], the clique side by subset enumeration (source limited to
/// 8 vertices), the cover side by the exhaustive oracle (reduced instance
/// limited by oracle_max_n). `want_cover_witness` additionally extracts an
/// explicit cover when the instance is feasible but has no clique.
VerificationResult verify_reduction_detail(const Graph& source, int k,
                                           int oracle_max_n = kDefaultOracleMaxN,
                                           bool want_cover_witness = false);
bool verify_reduction(const Graph& source, int k, int oracle_max_n = kDefaultOracleMaxN);

/// Artifact file: metadata comments, then the canonical graph section.
///   c pvcb-reduction 1
///   c source <n'> <m'>
///   c clique-k <k>
///   c budget <B>
///   c target <T>
///   c provenance <id> original <v'> | block-left <q> | block-right <q>
///   p pvc <n> <m>
///   e <u> <v> ...
/// Provenance lines appear for every vertex in ascending id order.
void write_artifact(const ReductionArtifact& art, std::ostream& out);
std::string write_artifact(const ReductionArtifact& art);

/// Parses an artifact file and revalidates every structural invariant.
ReductionArtifact load_artifact(std::istream& in);

}  // namespace pvc

#endif  // PVC_REDUCTION_HPP
