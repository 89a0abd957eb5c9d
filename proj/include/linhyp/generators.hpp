#ifndef LINHYP_GENERATORS_HPP
#define LINHYP_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "linhyp/hypercore.hpp"

namespace linhyp {

/// nu disjoint copies of a star of delta triples through one core vertex.
/// Component i has core i*(2*delta+1) followed by its petal vertices.
Family sunflower_family(std::size_t delta, std::size_t nu);

/// A Steiner triple system on n points (n = 1 or 3 mod 6): Bose construction
/// for n = 3 mod 6, Skolem construction for n = 1 mod 6.
Family steiner_triple_system(std::size_t n);

/// The Fano plane as the 7-point Steiner system.
Family fano_plane();

/// Simple graph with maximum degree delta, matching number nu and
/// nu*delta + floor(nu / ceil(delta/2)) * floor(delta/2) edges, built from
/// dense odd-order gadgets plus stars.
SimpleGraph chvatal_hanson_graph(std::size_t delta, std::size_t nu);

/// Replace every graph edge e_i by e_i ∪ {y_i}; y_i = g.n() + i in edge order.
Family graph_lift(const SimpleGraph& g);

/// Rejection-sampled linear triple system; deterministic in (n, target, seed).
/// Gives up after 10*target draws, so it may return fewer edges.
Family random_linear_family(std::size_t n, std::size_t target_edges, std::uint64_t seed);

struct EnumerationOptions {
    std::size_t max_vertices = 0;
    std::size_t max_edges = 0;
    bool isomorphism_rejection = false;
};

/**
 * Every linear triple system on vertices 0..max_vertices-1 with at most
 * max_edges edges.
 *
 * Labeled mode visits each edge set once, depth-first in lexicographic order
 * of the sorted edge list. With isomorphism rejection one canonical
 * representative per class is visited, level by level in edge count; its
 * support is 0..s-1 and n stays max_vertices. The callback returns false to
 * stop early.
 */
void enumerate_families(const EnumerationOptions& opts, const std::function<bool(const Family&)>& visit);

/// Collects the whole enumeration.
std::vector<Family> enumerate_families(const EnumerationOptions& opts);

/// Canonical representative of the isomorphism class of f (support relabeled
/// to 0..s-1, n preserved). Two families are isomorphic iff their canonical
/// forms are equal and their n agree.
Family canonical_form(const Family& f);

}  // namespace linhyp

#endif
