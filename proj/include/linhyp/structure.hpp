#ifndef LINHYP_STRUCTURE_HPP
#define LINHYP_STRUCTURE_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "linhyp/hypercore.hpp"

namespace linhyp {

/// A matching edge joins M1 once at least this many D1-edges meet it.
inline constexpr std::size_t kApexThreshold = 7;

/// Vertices covered by every maximum matching, found with the criterion
/// x in S_F  <=>  nu(F \ F_x) = nu(F) - 1. Works for any family.
std::vector<VertexId> s_f(const Family& f);

struct NestedDecomposition {
    std::vector<VertexId> sequence;   // x_1 .. x_k1
    std::vector<Family> subfamilies;  // H_0 .. H_k1
    std::size_t k1() const { return sequence.size(); }
};

/**
 * Strip S-vertices until S of the remaining family is empty.
 *
 * The caller may fix a prefix of the sequence; each prefix vertex must lie in
 * S of the current subfamily (std::invalid_argument otherwise). After the
 * prefix, the next vertex is the one of largest degree in S, smallest id on
 * ties.
 */
NestedDecomposition nested_decomposition(const Family& f, std::span<const VertexId> prefix = {});

/// Edges classified by how many of their vertices the matching covers.
struct DPartition {
    std::array<EdgeList, 4> d;  // d[i] = { A : |A ∩ X_M| = i }
};

DPartition d_partition(const Family& f, std::span<const Edge> m);

/// D_2 edges meeting both a and b.
EdgeList d2_pair(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b);

/// D_2 edges with exactly two vertices in a ∪ b ∪ c.
EdgeList d2_triple(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b, const Edge& c);

/// D_3 edges other than a, b, c with at least two vertices in a ∪ b ∪ c.
EdgeList d3_triple(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b, const Edge& c);

/// Graph on a ∪ b (a -> 0,1,2 and b -> 3,4,5 in member order) whose edges are
/// the traces C ∩ (a ∪ b) of the edges C in d2_pair(a, b).
SimpleGraph g_d2(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b);

/// D_1 edges meeting a matching edge.
EdgeList d1_of(const Family& f, std::span<const Edge> m, const Edge& a);

struct ApexConflict {
    Edge edge;
    std::vector<VertexId> vertices;  // vertices of edge carrying D1 edges
};

struct MatchingPartition {
    EdgeList m1;
    EdgeList m2;
    std::vector<std::pair<Edge, VertexId>> apex;  // in m1 order
    std::vector<ApexConflict> conflicts;          // expected empty
    std::vector<VertexId> apex_vertices() const;
};

/// Split a maximum matching at d1(A) >= kApexThreshold. Throws
/// std::invalid_argument if m is not a maximum matching or f is not a linear
/// 3-uniform family.
MatchingPartition matching_partition(const Family& f, std::span<const Edge> m);

struct FamilyPartition {
    std::array<EdgeList, 4> e;  // e[0] = E_1 ... e[3] = E_4
    EdgeList m2;
};

/// The partition F = E_1 ∪ E_2 ∪ E_3 ∪ E_4 ∪ M_2 for the given matching
/// partition. Throws std::logic_error if the classes fail to partition f.
FamilyPartition family_partition(const Family& f, std::span<const Edge> m, const MatchingPartition& mp);

}  // namespace linhyp

#endif
