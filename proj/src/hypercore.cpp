#include "linhyp/hypercore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linhyp {

Edge::Edge(std::vector<VertexId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("edge has a repeated vertex");
}

Edge::Edge(std::initializer_list<VertexId> members) : Edge(std::vector<VertexId>(members)) {}

bool Edge::contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::size_t Edge::intersection_size(const Edge& other) const {
    std::size_t count = 0;
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

namespace {

Uniformity infer_uniformity(const EdgeList& edges) {
    if (edges.empty()) return 3;
    const std::size_t s = edges.front().size();
    for (const auto& e : edges)
        if (e.size() != s) return std::nullopt;
    return s;
}

}  // namespace

Family::Family(std::size_t n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
    k_ = infer_uniformity(edges_);
    build();
}

Family::Family(std::size_t n, EdgeList edges, Uniformity k) : n_(n), k_(k), edges_(std::move(edges)) {
    if (k_ && *k_ == 0) throw std::invalid_argument("uniformity must be positive");
    if (k_) {
        for (const auto& e : edges_)
            if (e.size() != *k_)
                throw std::invalid_argument("edge size " + std::to_string(e.size()) +
                                            " does not match uniformity " + std::to_string(*k_));
    }
    build();
}

void Family::build() {
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("family has a duplicate edge");
    masks_.clear();
    masks_.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (e.size() == 0) throw std::invalid_argument("family has an empty edge");
        if (e.back() >= n_)
            throw std::invalid_argument("vertex " + std::to_string(e.back()) +
                                        " outside universe of size " + std::to_string(n_));
        VertexSet m(n_);
        for (auto v : e) m.set(v);
        masks_.push_back(std::move(m));
    }
}

bool Family::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<std::size_t> Family::index_of(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

SimpleGraph::SimpleGraph(std::size_t n, std::vector<Pair> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [a, b] : edges_) {
        if (a == b) throw std::invalid_argument("graph has a loop");
        if (a > b) std::swap(a, b);
        if (b >= n_) throw std::invalid_argument("graph vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph has a repeated edge");
}

std::size_t SimpleGraph::degree(VertexId v) const {
    if (v >= n_) throw std::out_of_range("vertex out of range");
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(),
                                                  [v](const Pair& p) { return p.first == v || p.second == v; }));
}

std::size_t SimpleGraph::max_degree() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& [a, b] : edges_) {
        ++d[a];
        ++d[b];
    }
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

Family SimpleGraph::to_family() const {
    EdgeList out;
    out.reserve(edges_.size());
    for (const auto& [a, b] : edges_) out.push_back(Edge{a, b});
    return Family(n_, std::move(out), 2);
}

bool is_linear(const Family& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if ((f.mask(i) & f.mask(j)).count() > 1) return false;
    return true;
}

bool is_uniform(const Family& f, std::size_t k) {
    return std::all_of(f.edges().begin(), f.edges().end(), [k](const Edge& e) { return e.size() == k; });
}

std::size_t degree(const Family& f, VertexId x) {
    if (x >= f.n()) throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
    return static_cast<std::size_t>(
        std::count_if(f.edges().begin(), f.edges().end(), [x](const Edge& e) { return e.contains(x); }));
}

std::vector<std::size_t> degrees(const Family& f) {
    std::vector<std::size_t> d(f.n(), 0);
    for (const auto& e : f.edges())
        for (auto v : e) ++d[v];
    return d;
}

std::size_t max_degree(const Family& f) {
    auto d = degrees(f);
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

Family remove_vertex_star(const Family& f, VertexId x) {
    if (x >= f.n()) throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
    EdgeList kept;
    for (const auto& e : f.edges())
        if (!e.contains(x)) kept.push_back(e);
    return Family(f.n(), std::move(kept), f.uniformity());
}

EdgeList edges_meeting(const Family& f, std::span<const VertexId> s) {
    EdgeList out;
    for (const auto& e : f.edges())
        if (std::any_of(s.begin(), s.end(), [&e](VertexId v) { return e.contains(v); })) out.push_back(e);
    return out;
}

std::vector<VertexId> vertex_union(std::span<const Edge> edges) {
    std::vector<VertexId> out;
    for (const auto& e : edges) out.insert(out.end(), e.begin(), e.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> support(const Family& f) { return vertex_union(f.edges()); }

Family canonicalize(const Family& f) {
    const auto used = support(f);
    std::vector<VertexId> label(f.n(), 0);
    for (std::size_t i = 0; i < used.size(); ++i) label[used[i]] = static_cast<VertexId>(i);
    EdgeList out;
    out.reserve(f.size());
    for (const auto& e : f.edges()) {
        std::vector<VertexId> m;
        for (auto v : e) m.push_back(label[v]);
        out.emplace_back(std::move(m));
    }
    return Family(used.size(), std::move(out), f.uniformity());
}

Family relabel(const Family& f, std::span<const VertexId> perm) {
    if (perm.size() != f.n()) throw std::invalid_argument("permutation size mismatch");
    EdgeList out;
    out.reserve(f.size());
    for (const auto& e : f.edges()) {
        std::vector<VertexId> m;
        for (auto v : e) m.push_back(perm[v]);
        out.emplace_back(std::move(m));
    }
    return Family(f.n(), std::move(out), f.uniformity());
}

void require_linear_triple_system(const Family& f) {
    if (!is_uniform(f, 3)) throw std::invalid_argument("family is not 3-uniform");
    if (!is_linear(f)) throw std::invalid_argument("family is not linear");
}

}  // namespace linhyp
