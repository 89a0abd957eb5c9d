#ifndef LINHYP_HYPERCORE_HPP
#define LINHYP_HYPERCORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace linhyp {

using VertexId = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// A hyperedge: a set of vertices kept as a strictly increasing sequence.
class Edge {
public:
    Edge() = default;
    /// Sorts the members; throws std::invalid_argument on a repeated vertex.
    explicit Edge(std::vector<VertexId> members);
    Edge(std::initializer_list<VertexId> members);

    std::span<const VertexId> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    VertexId front() const { return members_.front(); }
    VertexId back() const { return members_.back(); }
    bool contains(VertexId v) const;

    /// Number of shared vertices (linear merge over sorted members).
    std::size_t intersection_size(const Edge& other) const;
    bool meets(const Edge& other) const { return intersection_size(other) != 0; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;

private:
    std::vector<VertexId> members_;
};

using EdgeList = std::vector<Edge>;

/// Uniformity of a family; nullopt means mixed edge sizes.
using Uniformity = std::optional<std::size_t>;

/**
 * A finite set system over the vertex universe 0..n-1.
 *
 * Edges are kept lexicographically sorted with no duplicates. Each edge also
 * carries a bitset over the vertex universe so that intersection queries cost
 * O(n / 64). Values are immutable once built.
 */
class Family {
public:
    /// Empty 3-uniform family on no vertices.
    Family() = default;

    /// Uniformity is inferred: the common edge size, 3 for an empty family,
    /// nullopt when sizes differ. Throws std::invalid_argument on duplicate
    /// edges, empty edges or vertices >= n.
    Family(std::size_t n, EdgeList edges);

    /// Same, with an explicit uniformity that every edge must satisfy.
    Family(std::size_t n, EdgeList edges, Uniformity k);

    std::size_t n() const { return n_; }
    Uniformity uniformity() const { return k_; }
    const EdgeList& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const VertexSet& mask(std::size_t i) const { return masks_[i]; }

    bool contains(const Edge& e) const;
    /// Position of e in edges(), or nullopt.
    std::optional<std::size_t> index_of(const Edge& e) const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    void build();

    std::size_t n_ = 0;
    Uniformity k_ = 3;
    EdgeList edges_;
    std::vector<VertexSet> masks_;
};

/// Undirected simple graph on 0..n-1.
class SimpleGraph {
public:
    using Pair = std::pair<VertexId, VertexId>;

    SimpleGraph() = default;
    /// Pairs are normalised to (min, max) and sorted; throws on loops,
    /// repeated pairs or out-of-range endpoints.
    SimpleGraph(std::size_t n, std::vector<Pair> edges);

    std::size_t n() const { return n_; }
    const std::vector<Pair>& edges() const { return edges_; }
    std::size_t degree(VertexId v) const;
    std::size_t max_degree() const;

    /// The graph as a 2-uniform family on the same vertex set.
    Family to_family() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Pair> edges_;
};

bool is_linear(const Family& f);
bool is_uniform(const Family& f, std::size_t k);

/// |F_x|; throws std::out_of_range when x >= n.
std::size_t degree(const Family& f, VertexId x);
std::vector<std::size_t> degrees(const Family& f);
std::size_t max_degree(const Family& f);

/// F \ F_x on the same vertex universe; throws std::out_of_range when x >= n.
Family remove_vertex_star(const Family& f, VertexId x);

/// Edges with a nonempty intersection with s.
EdgeList edges_meeting(const Family& f, std::span<const VertexId> s);

/// Union of the given edges as a sorted vertex list.
std::vector<VertexId> vertex_union(std::span<const Edge> edges);

/// Vertices of f that lie in at least one edge.
std::vector<VertexId> support(const Family& f);

/// Relabel the support to 0..s-1 preserving order and set n = s.
Family canonicalize(const Family& f);

/// Apply a vertex permutation (perm[v] is the new label of v).
Family relabel(const Family& f, std::span<const VertexId> perm);

/// Common precondition of the 3-uniform linear machinery; throws
/// std::invalid_argument naming the failed property.
void require_linear_triple_system(const Family& f);

}  // namespace linhyp

#endif
