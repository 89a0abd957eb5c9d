#include "linhyp/config_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

#include "linhyp/matching.hpp"

namespace linhyp {

namespace {

constexpr VertexId kFirstExternal = 6;

// Restricted growth strings of the given length: label[i] <= 1 + max(label[0..i)).
template <class Visit>
void for_each_rgs(std::size_t length, Visit&& visit) {
    std::vector<VertexId> labels(length, 0);
    auto rec = [&](auto&& self, std::size_t i, VertexId used) -> void {
        if (i == length) {
            visit(labels, used);
            return;
        }
        for (VertexId l = 0; l <= used && l < length; ++l) {
            labels[i] = l;
            self(self, i + 1, std::max<VertexId>(used, l + 1));
        }
    };
    rec(rec, 0, 0);
}

EdgeList renumber_externals(std::vector<std::array<VertexId, 3>> edges) {
    // edges hold (a, b, external); sort by cross pair, then relabel externals by first appearance
    std::sort(edges.begin(), edges.end());
    std::vector<std::pair<VertexId, VertexId>> seen;
    EdgeList out;
    for (const auto& e : edges) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == e[2]; });
        VertexId label;
        if (it == seen.end()) {
            label = kFirstExternal + static_cast<VertexId>(seen.size());
            seen.emplace_back(e[2], label);
        } else {
            label = it->second;
        }
        out.push_back(Edge{e[0], e[1], label});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

EdgeList listed_eight_edge_configuration() {
    EdgeList e = {Edge{0, 4, 6}, Edge{1, 5, 6}, Edge{0, 3, 7}, Edge{2, 4, 7},
                  Edge{1, 3, 8}, Edge{0, 5, 8}, Edge{1, 4, 9}, Edge{2, 3, 9}};
    std::sort(e.begin(), e.end());
    return e;
}

EdgeList pair_configuration_key(const EdgeList& cross_edges) {
    std::array<VertexId, 3> pa{0, 1, 2};
    EdgeList best;
    bool first = true;
    do {
        std::array<VertexId, 3> pb{0, 1, 2};
        do {
            for (int swap = 0; swap < 2; ++swap) {
                std::vector<std::array<VertexId, 3>> mapped;
                for (const auto& e : cross_edges) {
                    const auto m = e.members();
                    // members are sorted: a in 0..2, b in 3..5, external last
                    VertexId a = pa[m[0]];
                    VertexId b = pb[m[1] - 3];
                    if (swap) std::swap(a, b);
                    mapped.push_back({a, static_cast<VertexId>(b + 3), m[2]});
                }
                auto key = renumber_externals(std::move(mapped));
                if (first || key < best) {
                    best = std::move(key);
                    first = false;
                }
            }
        } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
    return best;
}

Unique8Result search_unique_8_config() {
    Unique8Result result;
    const Edge a{0, 1, 2}, b{3, 4, 5};
    const EdgeList matching = {a, b};
    std::set<EdgeList> classes;

    for (VertexId missing = 0; missing < 9; ++missing) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId i = 0; i < 3; ++i)
            for (VertexId j = 0; j < 3; ++j)
                if (3 * i + j != missing) pairs.emplace_back(i, 3 + j);

        for_each_rgs(pairs.size(), [&](const std::vector<VertexId>& labels, VertexId used) {
            ++result.candidates;
            EdgeList cross;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                cross.push_back(Edge{pairs[i].first, pairs[i].second, kFirstExternal + labels[i]});
            EdgeList all = cross;
            all.push_back(a);
            all.push_back(b);
            std::sort(all.begin(), all.end());
            const Family f(kFirstExternal + used, all);
            if (!is_linear(f)) return;
            ++result.linear_candidates;
            if (const auto c = find_augmenting_set(f, matching)) {
                if (!is_augmenting_set(f, matching, *c)) throw std::logic_error("invalid augmenting set returned");
                return;
            }
            ++result.survivors;
            std::sort(cross.begin(), cross.end());
            classes.insert(pair_configuration_key(cross));
        });
    }
    result.classes.assign(classes.begin(), classes.end());
    return result;
}

std::string to_string(Sevens::Status s) {
    return s == Sevens::Status::complete ? "complete" : "budget_exceeded";
}

namespace {

// Blocks: 0 = (A,B), 1 = (A,C), 2 = (B,C). Edge index of a block pair.
constexpr std::array<std::array<int, 2>, 3> kBlockEdges{{{0, 1}, {0, 2}, {1, 2}}};

struct Symmetry {
    std::array<int, 3> edge_perm;                  // matching edge e -> edge_perm[e]
    std::array<std::array<int, 3>, 3> vertex_perm;  // within edge e: position i -> vertex_perm[e][i]
};

std::vector<Symmetry> sevens_symmetries() {
    std::vector<Symmetry> out;
    std::array<int, 3> ep{0, 1, 2};
    do {
        std::array<int, 3> p0{0, 1, 2};
        do {
            std::array<int, 3> p1{0, 1, 2};
            do {
                std::array<int, 3> p2{0, 1, 2};
                do {
                    out.push_back({ep, {p0, p1, p2}});
                } while (std::next_permutation(p2.begin(), p2.end()));
            } while (std::next_permutation(p1.begin(), p1.end()));
        } while (std::next_permutation(p0.begin(), p0.end()));
    } while (std::next_permutation(ep.begin(), ep.end()));
    return out;
}

int block_of(int e, int f) {
    for (int b = 0; b < 3; ++b)
        if ((kBlockEdges[b][0] == e && kBlockEdges[b][1] == f) || (kBlockEdges[b][0] == f && kBlockEdges[b][1] == e))
            return b;
    return -1;
}

std::uint32_t apply(const Symmetry& s, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (int bit = 0; bit < 27; ++bit) {
        if (!(mask >> bit & 1U)) continue;
        const int block = bit / 9, i = bit % 9 / 3, j = bit % 3;
        int e = s.edge_perm[kBlockEdges[block][0]], f = s.edge_perm[kBlockEdges[block][1]];
        int vi = s.vertex_perm[kBlockEdges[block][0]][i], vj = s.vertex_perm[kBlockEdges[block][1]][j];
        if (e > f) {
            std::swap(e, f);
            std::swap(vi, vj);
        }
        out |= 1U << (9 * block_of(e, f) + 3 * vi + vj);
    }
    return out;
}

const std::vector<Symmetry>& symmetries() {
    static const auto s = sevens_symmetries();
    return s;
}

class SevensDfs {
public:
    SevensDfs(std::uint32_t selection, Sevens& out, std::uint64_t budget) : out_(out), budget_(budget) {
        // interleave the blocks so that every block fills up at the same pace
        std::array<std::vector<std::pair<int, int>>, 3> per_block;
        for (int bit = 0; bit < 27; ++bit) {
            if (!(selection >> bit & 1U)) continue;
            const int block = bit / 9, i = bit % 9 / 3, j = bit % 3;
            per_block[block].emplace_back(3 * kBlockEdges[block][0] + i, 3 * kBlockEdges[block][1] + j);
        }
        for (std::size_t k = 0; k < 7; ++k)
            for (int b = 0; b < 3; ++b) pairs_.push_back(per_block[b][k]);
        edges_.push_back(0b000000111);
        edges_.push_back(0b000111000);
        edges_.push_back(0b111000000);
    }

    // false when the budget ran out
    bool run() { return place(0); }

private:
    static constexpr int kExternalBase = 9;

    bool place(std::size_t depth) {
        if (depth == pairs_.size()) {
            ++out_.survivors;
            if (out_.survivor_examples.size() < 5) out_.survivor_examples.push_back(current());
            return true;
        }
        const auto [p, q] = pairs_[depth];
        const std::uint64_t base = (1ULL << p) | (1ULL << q);
        for (std::size_t label = 0; label <= used_.size(); ++label) {
            if (label < used_.size() && (used_[label] & base)) continue;  // would share two vertices
            if (++out_.nodes > budget_) return false;
            const std::uint64_t e = base | 1ULL << (kExternalBase + label);
            if (in_four_matching(e)) continue;
            if (label == used_.size()) used_.push_back(0);
            used_[label] |= base;
            edges_.push_back(e);
            const bool ok = place(depth + 1);
            edges_.pop_back();
            used_[label] &= ~base;
            if (label + 1 == used_.size() && used_[label] == 0) used_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    // is there a matching of size 4 containing e among the current edges plus e
    bool in_four_matching(std::uint64_t e) const { return disjoint_from(e, 3, 0); }

    bool disjoint_from(std::uint64_t taken, int need, std::size_t from) const {
        if (need == 0) return true;
        for (std::size_t i = from; i < edges_.size(); ++i)
            if (!(edges_[i] & taken) && disjoint_from(taken | edges_[i], need - 1, i + 1)) return true;
        return false;
    }

    EdgeList current() const {
        EdgeList out;
        for (std::size_t i = 3; i < edges_.size(); ++i) {
            std::vector<VertexId> v;
            for (std::uint64_t m = edges_[i]; m; m &= m - 1) v.push_back(static_cast<VertexId>(std::countr_zero(m)));
            out.push_back(Edge(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Sevens& out_;
    std::uint64_t budget_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::uint64_t> edges_;  // A, B, C, then placed edges
    std::vector<std::uint64_t> used_;   // matching vertices already joined to each external label
};

}  // namespace

std::uint32_t sevens_selection_key(std::uint32_t mask) {
    std::uint32_t best = mask;
    for (const auto& s : symmetries()) best = std::min(best, apply(s, mask));
    return best;
}

Sevens search_sevens(std::uint64_t budget) {
    std::vector<std::uint32_t> sevens_of_nine;
    for (std::uint32_t m = 0; m < 512; ++m)
        if (std::popcount(m) == 7) sevens_of_nine.push_back(m);
    // walk whole orbits so each one is expanded once
    std::set<std::uint32_t> keys;
    std::unordered_set<std::uint32_t> seen;
    for (auto x : sevens_of_nine)
        for (auto y : sevens_of_nine)
            for (auto z : sevens_of_nine) {
                const std::uint32_t mask = x | y << 9 | z << 18;
                if (seen.count(mask)) continue;
                std::uint32_t key = mask;
                for (const auto& s : symmetries()) {
                    const auto image = apply(s, mask);
                    seen.insert(image);
                    key = std::min(key, image);
                }
                keys.insert(key);
            }

    Sevens out;
    out.selection_classes = keys.size();
    for (auto key : keys) {
        SevensDfs dfs(key, out, budget);
        if (!dfs.run()) {
            out.status = Sevens::Status::budget_exceeded;
            out.frontier = out.selection_classes - out.classes_finished;
            return out;
        }
        ++out.classes_finished;
    }
    return out;
}

}  // namespace linhyp
