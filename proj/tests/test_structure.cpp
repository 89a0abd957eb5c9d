#include <doctest.h>

#include "linhyp/config_search.hpp"
#include "linhyp/generators.hpp"
#include "linhyp/matching.hpp"
#include "linhyp/oracles.hpp"
#include "linhyp/structure.hpp"
#include "support.hpp"

using namespace linhyp;
using testing_support::fano;

namespace {

Family eight_edge_family() {
    EdgeList e = listed_eight_edge_configuration();
    e.push_back(Edge{0, 1, 2});
    e.push_back(Edge{3, 4, 5});
    return Family(10, e);
}

// The matched petal of each flower: the first petal {core, core+1, core+2}.
EdgeList first_petals(std::size_t delta, std::size_t nu) {
    EdgeList m;
    for (std::size_t i = 0; i < nu; ++i) {
        const auto c = static_cast<VertexId>(i * (2 * delta + 1));
        m.push_back(Edge{c, c + 1, c + 2});
    }
    return m;
}

}  // namespace

TEST_CASE("s_f examples") {
    const auto g = testing_support::paw_graph().to_family();
    CHECK(s_f(g) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(s_f(Family(6, {Edge{0, 1, 2}, Edge{3, 4, 5}})) == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
    const Family f(7, {Edge{0, 1, 2}, Edge{0, 3, 4}, Edge{0, 5, 6}, Edge{1, 3, 5}});
    CHECK(s_f(f) == oracle::s_f_by_enumeration(f));
    CHECK(s_f(fano()).empty());
    CHECK(s_f(Family()).empty());
}

TEST_CASE("nested decomposition on the four-vertex graph") {
    const auto g = testing_support::paw_graph().to_family();
    const auto def = nested_decomposition(g);
    CHECK(def.sequence.front() == 1);
    CHECK(def.k1() == 2);
    CHECK((def.sequence[1] == 2 || def.sequence[1] == 3));
    const std::vector<VertexId> w{0};
    const auto forced = nested_decomposition(g, w);
    CHECK(forced.k1() == 1);
    CHECK(s_f(forced.subfamilies.back()).empty());
    const std::vector<VertexId> bad{0, 1};
    CHECK_THROWS_AS(nested_decomposition(g, bad), std::invalid_argument);
    CHECK(nested_decomposition(fano()).k1() == 0);
}

TEST_CASE("nested decomposition invariants on sunflowers") {
    const auto one = nested_decomposition(sunflower_family(4, 1));
    CHECK(one.k1() == 1);
    CHECK(one.subfamilies.back().empty());
    const auto two = nested_decomposition(sunflower_family(4, 2));
    CHECK(two.k1() == 2);
    CHECK(two.sequence == std::vector<VertexId>{0, 9});
}

TEST_CASE("property: nested decomposition bookkeeping on random families") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const auto f = random_linear_family(12, 10, seed);
        const auto d = nested_decomposition(f);
        REQUIRE(d.subfamilies.size() == d.k1() + 1);
        CHECK(d.subfamilies.front() == f);
        const auto nu0 = nu(f);
        for (std::size_t i = 0; i <= d.k1(); ++i) {
            const auto& h = d.subfamilies[i];
            CHECK(nu(h) == nu0 - i);
            const auto sh = s_f(h);
            if (i < d.k1()) CHECK(std::binary_search(sh.begin(), sh.end(), d.sequence[i]));
            const auto deg = degrees(h);
            for (VertexId x = 0; x < h.n(); ++x)
                if (deg[x] > 3 * nu(h)) CHECK(std::binary_search(sh.begin(), sh.end(), x));
        }
        CHECK(s_f(d.subfamilies.back()).empty());
    }
}

TEST_CASE("d_partition") {
    const Family one(3, {Edge{0, 1, 2}});
    const auto p = d_partition(one, one.edges());
    CHECK(p.d[3] == one.edges());
    CHECK((p.d[0].empty() && p.d[1].empty() && p.d[2].empty()));

    const auto sf = sunflower_family(7, 1);
    const auto q = d_partition(sf, first_petals(7, 1));
    CHECK(q.d[1].size() == 6);
    CHECK(q.d[3] == first_petals(7, 1));
}

TEST_CASE("property: D-partition identities for every maximum matching") {
    for (const auto& f : enumerate_families({9, 6, true})) {
        const auto deg = degrees(f);
        for (const auto& m : oracle::all_maximum_matchings(f)) {
            const auto p = d_partition(f, m);
            CHECK(p.d[0].empty());
            CHECK(p.d[0].size() + p.d[1].size() + p.d[2].size() + p.d[3].size() == f.size());
            for (const auto& e : m) CHECK(std::binary_search(p.d[3].begin(), p.d[3].end(), e));
            const auto xm = vertex_union(m);
            std::size_t in = 0, out = 0;
            for (VertexId x = 0; x < f.n(); ++x) (std::binary_search(xm.begin(), xm.end(), x) ? in : out) += deg[x];
            CHECK(out == 2 * p.d[1].size() + p.d[2].size());
            CHECK(in == p.d[1].size() + 2 * p.d[2].size() + 3 * p.d[3].size());
        }
    }
}

TEST_CASE("D2 pair and triple sets") {
    const auto f = eight_edge_family();
    const Edge a{0, 1, 2}, b{3, 4, 5};
    const EdgeList m{a, b};
    REQUIRE(is_maximum_matching(f, m));
    CHECK(d2_pair(f, m, a, b).size() == 8);
    CHECK(d2_pair(f, m, a, b) == listed_eight_edge_configuration());

    const auto g = g_d2(f, m, a, b);
    CHECK(g.edges().size() == 8);
    for (VertexId i = 0; i < 3; ++i)
        for (VertexId j = 3; j < 6; ++j) {
            const bool present = std::find(g.edges().begin(), g.edges().end(), SimpleGraph::Pair{i, j}) != g.edges().end();
            CHECK(present == !(i == 2 && j == 5));
        }

    const Family apart(6, {a, b});
    CHECK(d2_pair(apart, apart.edges(), a, b).empty());
    CHECK(g_d2(apart, apart.edges(), a, b).edges().empty());
    CHECK_THROWS_AS(d2_pair(f, m, a, Edge{0, 3, 7}), std::invalid_argument);
}

TEST_CASE("property: d2_triple is the disjoint union of its pair sets") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto f = random_linear_family(12, 10, seed);
        const auto m = maximum_matching(f);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                CHECK(d2_pair(f, m, m[i], m[j]).size() <= 8);
                CHECK(g_d2(f, m, m[i], m[j]).edges().size() == d2_pair(f, m, m[i], m[j]).size());
                for (std::size_t k = j + 1; k < m.size(); ++k) {
                    const auto t = d2_triple(f, m, m[i], m[j], m[k]);
                    CHECK(t.size() == d2_pair(f, m, m[i], m[j]).size() + d2_pair(f, m, m[j], m[k]).size() +
                                          d2_pair(f, m, m[i], m[k]).size());
                    CHECK(t.size() <= 21);
                    for (const auto& e : d3_triple(f, m, m[i], m[j], m[k])) {
                        const std::size_t hits = e.intersection_size(m[i]) + e.intersection_size(m[j]) +
                                                 e.intersection_size(m[k]);
                        CHECK(hits >= 2);
                    }
                }
            }
    }
}

TEST_CASE("matching partition") {
    const auto sf8 = sunflower_family(8, 1);
    const auto mp = matching_partition(sf8, first_petals(8, 1));
    CHECK(mp.m1 == first_petals(8, 1));
    REQUIRE(mp.apex.size() == 1);
    CHECK(mp.apex[0].second == 0);
    CHECK(mp.conflicts.empty());
    const auto fp = family_partition(sf8, first_petals(8, 1), mp);
    CHECK(fp.e[0].size() == 8);
    CHECK((fp.e[1].empty() && fp.e[2].empty() && fp.e[3].empty() && fp.m2.empty()));

    const auto sf7 = sunflower_family(7, 2);
    const auto mp7 = matching_partition(sf7, first_petals(7, 2));
    CHECK(mp7.m1.empty());
    CHECK(mp7.m2.size() == 2);
    const auto fp7 = family_partition(sf7, first_petals(7, 2), mp7);
    CHECK(fp7.e[0].empty());
    CHECK(fp7.e[1].empty());

    const auto f = fano();
    CHECK_THROWS_AS(matching_partition(Family(6, {Edge{0, 1, 2}, Edge{3, 4, 5}}), EdgeList{Edge{0, 1, 2}}),
                    std::invalid_argument);
    CHECK_NOTHROW(matching_partition(f, EdgeList{f.edge(0)}));
}

TEST_CASE("property: E-classes and M2 partition the family") {
    for (const auto& f : enumerate_families({9, 6, true})) {
        for (const auto& m : oracle::all_maximum_matchings(f)) {
            const auto mp = matching_partition(f, m);
            CHECK(mp.conflicts.empty());
            CHECK(mp.m1.size() + mp.m2.size() == m.size());
            const auto fp = family_partition(f, m, mp);
            EdgeList all = fp.m2;
            for (const auto& cls : fp.e) all.insert(all.end(), cls.begin(), cls.end());
            std::sort(all.begin(), all.end());
            CHECK(all == f.edges());
            CHECK(fp.e[1].empty());
        }
    }
}
