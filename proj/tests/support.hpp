#ifndef LINHYP_TEST_SUPPORT_HPP
#define LINHYP_TEST_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "linhyp/hypercore.hpp"

// Reference computations that share no code with the library under test.
namespace testing_support {

using linhyp::Edge;
using linhyp::EdgeList;
using linhyp::Family;
using linhyp::SimpleGraph;
using linhyp::VertexId;

inline Family fano() {
    return Family(7, {Edge{0, 1, 2}, Edge{0, 3, 4}, Edge{0, 5, 6}, Edge{1, 3, 5}, Edge{1, 4, 6}, Edge{2, 3, 6},
                      Edge{2, 4, 5}});
}

// {x,y,z},{a,c,z},{a,b,x},{b,c,y} with x,y,z,a,b,c = 0..5
inline Family four_edge_family() {
    return Family(6, {Edge{0, 1, 2}, Edge{3, 5, 2}, Edge{3, 4, 0}, Edge{4, 5, 1}});
}

// Graph on w,x,y,z = 0..3 with edges wx, xy, yz, xz.
inline SimpleGraph paw_graph() { return SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}); }

// Matching number of a graph: take the lowest live vertex, leave it unmatched
// or match it to a live neighbour; memoised on the live-vertex mask.
class GraphMatchingOracle {
public:
    explicit GraphMatchingOracle(const SimpleGraph& g) : adj_(g.n()) {
        for (const auto& [a, b] : g.edges()) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
    }

    std::size_t nu() {
        std::vector<bool> live(adj_.size(), true);
        return solve(live, 0);
    }

private:
    std::size_t solve(std::vector<bool>& live, std::size_t from) {
        while (from < live.size() && !live[from]) ++from;
        if (from == live.size()) return 0;
        auto key = live;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        live[from] = false;
        std::size_t best = solve(live, from + 1);
        for (auto u : adj_[from]) {
            if (!live[u]) continue;
            live[u] = false;
            best = std::max(best, 1 + solve(live, from + 1));
            live[u] = true;
        }
        live[from] = true;
        memo_.emplace(std::move(key), best);
        return best;
    }

    std::vector<std::vector<VertexId>> adj_;
    std::unordered_map<std::vector<bool>, std::size_t> memo_;
};

// Lexicographically least sorted edge list over all vertex permutations.
inline EdgeList brute_force_canonical(const Family& f) {
    std::vector<VertexId> perm(f.n());
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool first = true;
    do {
        EdgeList mapped;
        for (const auto& e : f.edges()) {
            std::vector<VertexId> m;
            for (auto v : e) m.push_back(perm[v]);
            mapped.emplace_back(std::move(m));
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Naive labeled enumeration: every linear triple system on 0..n-1 with at
// most max_edges edges, by extending with larger triples only.
inline std::vector<EdgeList> naive_labeled(std::size_t n, std::size_t max_edges) {
    std::vector<Edge> triples;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c) triples.push_back(Edge{a, b, c});
    std::vector<EdgeList> out;
    EdgeList cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        out.push_back(cur);
        if (cur.size() == max_edges) return;
        for (std::size_t i = from; i < triples.size(); ++i) {
            bool ok = true;
            for (const auto& e : cur)
                if (e.intersection_size(triples[i]) > 1) ok = false;
            if (!ok) continue;
            cur.push_back(triples[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Number of triples containing each unordered pair.
inline std::vector<std::vector<int>> pair_coverage(const Family& f) {
    std::vector<std::vector<int>> c(f.n(), std::vector<int>(f.n(), 0));
    for (const auto& e : f.edges()) {
        const auto m = e.members();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                ++c[m[i]][m[j]];
                ++c[m[j]][m[i]];
            }
    }
    return c;
}

}  // namespace testing_support

#endif
