#include <doctest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "linhyp/config_search.hpp"
#include "linhyp/matching.hpp"
#include "linhyp/oracles.hpp"

using namespace linhyp;

TEST_CASE("listed configuration keeps {A, B} maximum") {
    auto e = listed_eight_edge_configuration();
    CHECK(e.size() == 8);
    e.push_back(Edge{0, 1, 2});
    e.push_back(Edge{3, 4, 5});
    const Family f(10, e);
    CHECK(is_linear(f));
    CHECK_FALSE(find_augmenting_set(f, EdgeList{Edge{0, 1, 2}, Edge{3, 4, 5}}).has_value());
}

TEST_CASE("eight distinct external vertices admit an augmenting set") {
    EdgeList e{Edge{0, 1, 2}, Edge{3, 4, 5}};
    VertexId ext = 6;
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 6; ++b)
            if (!(a == 2 && b == 5)) e.push_back(Edge{a, b, ext++});
    const Family f(ext, e);
    const EdgeList m{Edge{0, 1, 2}, Edge{3, 4, 5}};
    const auto c = find_augmenting_set(f, m);
    REQUIRE(c.has_value());
    CHECK(is_augmenting_set(f, m, *c));
}

TEST_CASE("pair configuration key is invariant under the symmetries") {
    const auto base = pair_configuration_key(listed_eight_edge_configuration());
    // swap A with B, reverse A and rename the externals
    EdgeList moved;
    for (const auto& e : listed_eight_edge_configuration()) {
        const auto m = e.members();
        const VertexId a = m[0], b = m[1], x = m[2];
        const VertexId new_a = b - 3;
        const VertexId new_b = (2 - a) + 3;
        moved.push_back(Edge{new_a, new_b, 15 - x});
    }
    std::sort(moved.begin(), moved.end());
    CHECK(pair_configuration_key(moved) == base);
}

TEST_CASE("unique eight-edge configuration") {
    const auto r = search_unique_8_config();
    CHECK(r.candidates == 9 * 4140);
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes[0] == pair_configuration_key(listed_eight_edge_configuration()));
    CHECK(r.survivors >= 1);
}

TEST_CASE("eight-edge survivors agree with the exhaustive packing oracle") {
    // set partitions built by inserting each pair into an existing block or a new one
    std::size_t linear = 0, maximum = 0;
    for (VertexId missing = 0; missing < 9; ++missing) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId a = 0; a < 3; ++a)
            for (VertexId b = 3; b < 6; ++b)
                if (3 * a + (b - 3) != missing) pairs.emplace_back(a, b);
        std::vector<std::vector<std::size_t>> blocks;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == pairs.size()) {
                EdgeList e{Edge{0, 1, 2}, Edge{3, 4, 5}};
                for (std::size_t k = 0; k < blocks.size(); ++k)
                    for (auto idx : blocks[k])
                        e.push_back(Edge{pairs[idx].first, pairs[idx].second, static_cast<VertexId>(6 + k)});
                std::sort(e.begin(), e.end());
                const Family f(6 + blocks.size(), e);
                if (!is_linear(f)) return;
                ++linear;
                if (oracle::nu_exhaustive(f) == 2) ++maximum;
                return;
            }
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                blocks[b].push_back(i);
                rec(i + 1);
                blocks[b].pop_back();
            }
            blocks.push_back({i});
            rec(i + 1);
            blocks.pop_back();
        };
        rec(0);
    }
    const auto r = search_unique_8_config();
    CHECK(r.linear_candidates == linear);
    CHECK(r.survivors == maximum);
}

TEST_CASE("sevens selection key") {
    const std::uint32_t full_block = 0b111111111;
    const std::uint32_t mask = (full_block & ~3U) | (full_block & ~5U) << 9 | (full_block & ~6U) << 18;
    const auto key = sevens_selection_key(mask);
    CHECK(std::popcount(key) == 21);
    CHECK(key <= mask);
    CHECK(sevens_selection_key(key) == key);
}

TEST_CASE("sevens selection classes match a Burnside count") {
    // the group permutes the three matching edges and the vertices inside each;
    // a selection is 7 of the 9 cross pairs in each of the blocks AB, AC, BC
    const std::array<std::array<int, 2>, 3> block_edges{{{0, 1}, {0, 2}, {1, 2}}};
    auto pair_bit = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (int b = 0; b < 3; ++b)
            if (block_edges[b][0] == u / 3 && block_edges[b][1] == v / 3) return 9 * b + 3 * (u % 3) + v % 3;
        return -1;
    };
    std::size_t group = 0, fixed_total = 0;
    std::array<int, 3> ep{0, 1, 2};
    do {
        for (int q = 0; q < 216; ++q) {
            std::array<int, 9> g{};
            int code = q;
            for (int e = 0; e < 3; ++e) {
                std::array<int, 3> inner{0, 1, 2};
                for (int step = code % 6; step > 0; --step) std::next_permutation(inner.begin(), inner.end());
                code /= 6;
                for (int i = 0; i < 3; ++i) g[3 * e + i] = 3 * ep[e] + inner[i];
            }
            std::array<int, 27> perm{};
            for (int u = 0; u < 9; ++u)
                for (int v = u + 1; v < 9; ++v)
                    if (u / 3 != v / 3) perm[pair_bit(u, v)] = pair_bit(g[u], g[v]);
            // fixed selections are unions of cycles with 7 bits in each block
            std::map<std::array<int, 3>, std::size_t> ways{{{0, 0, 0}, 1}};
            std::array<bool, 27> seen{};
            for (int s = 0; s < 27; ++s) {
                if (seen[s]) continue;
                std::array<int, 3> c{};
                for (int x = s; !seen[x]; x = perm[x]) {
                    seen[x] = true;
                    ++c[x / 9];
                }
                auto next = ways;
                for (const auto& [k, w] : ways) {
                    const std::array<int, 3> t{k[0] + c[0], k[1] + c[1], k[2] + c[2]};
                    if (t[0] <= 7 && t[1] <= 7 && t[2] <= 7) next[t] += w;
                }
                ways = std::move(next);
            }
            fixed_total += ways[{7, 7, 7}];
            ++group;
        }
    } while (std::next_permutation(ep.begin(), ep.end()));
    CHECK(group == 1296);
    REQUIRE(fixed_total % group == 0);
    CHECK(search_sevens(0).selection_classes == fixed_total / group);
}

TEST_CASE("sevens search respects the budget") {
    const auto r = search_sevens(1000);
    CHECK(r.status == Sevens::Status::budget_exceeded);
    CHECK(r.nodes == 1001);
    CHECK(r.frontier == r.selection_classes - r.classes_finished);
    CHECK(r.selection_classes > 0);
}
