#ifndef LINHYP_MATCHING_HPP
#define LINHYP_MATCHING_HPP

#include <optional>
#include <span>

#include "linhyp/hypercore.hpp"

namespace linhyp {

/// True iff every member of m is an edge of f and members are pairwise disjoint.
bool is_matching(const Family& f, std::span<const Edge> m);

/**
 * Checks the three augmenting-set conditions of c relative to the matching m:
 *  (1) |c ∩ m| < |c \ m|;
 *  (2) every m-edge meeting an edge of c is itself in c;
 *  (3) the edges of c \ m are pairwise disjoint.
 * Also requires c ⊆ f. Returns false (never throws) when m is not a matching.
 */
bool is_augmenting_set(const Family& f, std::span<const Edge> m, std::span<const Edge> c);

/// (m \ c) ∪ (c \ m), sorted. Throws std::invalid_argument unless c is an
/// m-augmenting set.
EdgeList augment(const Family& f, std::span<const Edge> m, std::span<const Edge> c);

/**
 * An m-augmenting set, or nullopt iff m is maximum.
 *
 * Takes a maximum matching m1, forms the symmetric difference of m1 and m and
 * returns the first connected component (ordered by smallest edge) holding
 * more m1-edges than m-edges. Throws std::invalid_argument if m is not a
 * matching of f.
 */
std::optional<EdgeList> find_augmenting_set(const Family& f, std::span<const Edge> m);

/// A maximum matching; among all of them the lexicographically least sorted
/// edge sequence.
EdgeList maximum_matching(const Family& f);

/// Matching number.
std::size_t nu(const Family& f);

bool is_maximum_matching(const Family& f, std::span<const Edge> m);

}  // namespace linhyp

#endif
