#ifndef LINHYP_CONFIG_SEARCH_HPP
#define LINHYP_CONFIG_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linhyp/hypercore.hpp"

// Finite searches over D_2 configurations between matching edges. Local
// labels: A = {0,1,2}, B = {3,4,5}, C = {6,7,8} where present; external
// (unmatched) vertices follow the matching vertices.
namespace linhyp {

/// The listed 8-edge configuration on A = {0,1,2}, B = {3,4,5} with external
/// vertices s,t,u,v = 6,7,8,9. The cross pair {2,5} is missing.
EdgeList listed_eight_edge_configuration();

/// Canonical key of a set of A-B cross edges under the 72 symmetries that
/// permute A, permute B and swap A with B, with externals renumbered from 6
/// by first appearance.
EdgeList pair_configuration_key(const EdgeList& cross_edges);

struct Unique8Result {
    std::size_t candidates = 0;         // missing pair x external partition
    std::size_t linear_candidates = 0;  // of those, linear
    std::size_t survivors = 0;          // no {A,B}-augmenting set
    std::vector<EdgeList> classes;      // one key per surviving class
};

/// Every 8-edge D_2(A,B) structure; keeps those for which {A, B} stays a
/// maximum matching of {A, B} plus the structure, and classifies them.
Unique8Result search_unique_8_config();

struct Sevens {
    enum class Status { complete, budget_exceeded };
    Status status = Status::complete;
    std::size_t selection_classes = 0;  // cross-pair selections up to symmetry
    std::size_t classes_finished = 0;
    std::uint64_t nodes = 0;
    std::size_t survivors = 0;
    std::vector<EdgeList> survivor_examples;
    std::size_t frontier = 0;           // selection classes left unexplored
};

std::string to_string(Sevens::Status s);

/// Canonical 27-bit mask of a selection of cross pairs. Bit 9*b + 3*i + j is
/// the pair (i-th vertex of the first edge, j-th vertex of the second edge)
/// in block b = AB, AC, BC. Minimum over the 1296 symmetries.
std::uint32_t sevens_selection_key(std::uint32_t mask);

/// Every configuration with exactly 7 D_2 edges between each pair of A, B, C
/// such that {A, B, C} stays maximum. Stops after budget search nodes.
Sevens search_sevens(std::uint64_t budget = 100'000'000);

}  // namespace linhyp

#endif
