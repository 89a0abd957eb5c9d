#ifndef LINHYP_ORACLES_HPP
#define LINHYP_ORACLES_HPP

#include <vector>

#include "linhyp/hypercore.hpp"

// Brute-force reference computations used to cross-check the solver and the
// S_F criterion. They share no code with matching.cpp or structure.cpp and are
// only meant for small families (at most kOracleMaxEdges edges).
namespace linhyp::oracle {

inline constexpr std::size_t kOracleMaxEdges = 24;

/// Largest pairwise-disjoint subset, by scanning every subset of edges.
std::size_t nu_exhaustive(const Family& f);

/// Every maximum matching, each as a sorted edge list, in lexicographic order.
std::vector<EdgeList> all_maximum_matchings(const Family& f);

/// Intersection of the vertex sets of all maximum matchings.
std::vector<VertexId> s_f_by_enumeration(const Family& f);

}  // namespace linhyp::oracle

#endif
