#include "linhyp/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "linhyp/matching.hpp"

namespace linhyp {

namespace {

void require_matching(const Family& f, std::span<const Edge> m) {
    if (!is_matching(f, m)) throw std::invalid_argument("edge set is not a matching of the family");
}

void require_members(std::span<const Edge> m, std::initializer_list<const Edge*> edges) {
    for (const Edge* e : edges)
        if (std::find(m.begin(), m.end(), *e) == m.end())
            throw std::invalid_argument("edge is not a member of the matching");
    for (auto i = edges.begin(); i != edges.end(); ++i)
        for (auto j = std::next(i); j != edges.end(); ++j)
            if (**i == **j) throw std::invalid_argument("matching edges must be distinct");
}

VertexSet cover(const Family& f, std::span<const Edge> m) {
    VertexSet x(f.n());
    for (const auto& e : m)
        for (auto v : e) x.set(v);
    return x;
}

std::size_t covered_count(const Edge& e, const VertexSet& x) {
    return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [&x](VertexId v) { return x.test(v); }));
}

}  // namespace

std::vector<VertexId> s_f(const Family& f) {
    const auto base = nu(f);
    std::vector<VertexId> out;
    for (auto x : support(f))
        if (nu(remove_vertex_star(f, x)) + 1 == base) out.push_back(x);
    return out;
}

NestedDecomposition nested_decomposition(const Family& f, std::span<const VertexId> prefix) {
    NestedDecomposition out;
    out.subfamilies.push_back(f);
    std::size_t step = 0;
    for (;;) {
        const Family& h = out.subfamilies.back();
        const auto s = s_f(h);
        if (s.empty()) {
            if (step < prefix.size())
                throw std::invalid_argument("prefix continues after S of the subfamily became empty");
            break;
        }
        VertexId x;
        if (step < prefix.size()) {
            x = prefix[step];
            if (!std::binary_search(s.begin(), s.end(), x))
                throw std::invalid_argument("prefix vertex " + std::to_string(x) + " is not covered by every maximum matching");
        } else {
            const auto deg = degrees(h);
            x = *std::max_element(s.begin(), s.end(), [&deg](VertexId a, VertexId b) {
                return deg[a] < deg[b] || (deg[a] == deg[b] && a > b);
            });
        }
        out.sequence.push_back(x);
        out.subfamilies.push_back(remove_vertex_star(h, x));
        ++step;
    }
    return out;
}

DPartition d_partition(const Family& f, std::span<const Edge> m) {
    require_linear_triple_system(f);
    require_matching(f, m);
    const auto x = cover(f, m);
    DPartition out;
    for (const auto& e : f.edges()) out.d[covered_count(e, x)].push_back(e);
    return out;
}

EdgeList d2_pair(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b) {
    require_members(m, {&a, &b});
    const auto part = d_partition(f, m);
    EdgeList out;
    for (const auto& e : part.d[2])
        if (e.meets(a) && e.meets(b)) out.push_back(e);
    return out;
}

EdgeList d2_triple(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b, const Edge& c) {
    require_members(m, {&a, &b, &c});
    const auto part = d_partition(f, m);
    EdgeList out;
    for (const auto& e : part.d[2])
        if (e.intersection_size(a) + e.intersection_size(b) + e.intersection_size(c) == 2) out.push_back(e);
    return out;
}

EdgeList d3_triple(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b, const Edge& c) {
    require_members(m, {&a, &b, &c});
    const auto part = d_partition(f, m);
    EdgeList out;
    for (const auto& e : part.d[3]) {
        if (e == a || e == b || e == c) continue;
        if (e.intersection_size(a) + e.intersection_size(b) + e.intersection_size(c) >= 2) out.push_back(e);
    }
    return out;
}

SimpleGraph g_d2(const Family& f, std::span<const Edge> m, const Edge& a, const Edge& b) {
    const auto edges = d2_pair(f, m, a, b);
    auto local = [&](VertexId v) -> VertexId {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.members()[i] == v) return static_cast<VertexId>(i);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b.members()[i] == v) return static_cast<VertexId>(a.size() + i);
        return static_cast<VertexId>(-1);
    };
    std::vector<SimpleGraph::Pair> pairs;
    for (const auto& e : edges) {
        std::vector<VertexId> ends;
        for (auto v : e)
            if (a.contains(v) || b.contains(v)) ends.push_back(local(v));
        pairs.emplace_back(ends[0], ends[1]);
    }
    return SimpleGraph(a.size() + b.size(), std::move(pairs));
}

EdgeList d1_of(const Family& f, std::span<const Edge> m, const Edge& a) {
    require_members(m, {&a});
    const auto part = d_partition(f, m);
    EdgeList out;
    for (const auto& e : part.d[1])
        if (e.meets(a)) out.push_back(e);
    return out;
}

std::vector<VertexId> MatchingPartition::apex_vertices() const {
    std::vector<VertexId> out;
    for (const auto& [edge, x] : apex) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

MatchingPartition matching_partition(const Family& f, std::span<const Edge> m) {
    require_linear_triple_system(f);
    if (find_augmenting_set(f, m)) throw std::invalid_argument("matching is not maximum");
    const auto part = d_partition(f, m);
    EdgeList sorted_m(m.begin(), m.end());
    std::sort(sorted_m.begin(), sorted_m.end());

    MatchingPartition out;
    for (const auto& a : sorted_m) {
        std::vector<std::size_t> at(a.size(), 0);
        std::size_t total = 0;
        for (const auto& e : part.d[1]) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (e.contains(a.members()[i])) {
                    ++at[i];
                    ++total;
                }
        }
        if (total < kApexThreshold) {
            out.m2.push_back(a);
            continue;
        }
        out.m1.push_back(a);
        std::size_t best = 0;
        std::vector<VertexId> carriers;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (at[i] > 0) carriers.push_back(a.members()[i]);
            if (at[i] > at[best]) best = i;
        }
        out.apex.emplace_back(a, a.members()[best]);
        if (carriers.size() > 1) out.conflicts.push_back({a, std::move(carriers)});
    }
    return out;
}

FamilyPartition family_partition(const Family& f, std::span<const Edge> m, const MatchingPartition& mp) {
    require_linear_triple_system(f);
    require_matching(f, m);
    const auto apexes = mp.apex_vertices();
    const auto x2 = cover(f, mp.m2);

    FamilyPartition out;
    out.m2 = mp.m2;
    for (const auto& e : f.edges()) {
        const bool at_apex =
            std::any_of(apexes.begin(), apexes.end(), [&e](VertexId x) { return e.contains(x); });
        if (at_apex) {
            out.e[0].push_back(e);
            continue;
        }
        const auto hits = covered_count(e, x2);
        if (hits == 0) {
            out.e[1].push_back(e);
        } else if (hits == 1) {
            out.e[2].push_back(e);
        } else if (!std::binary_search(out.m2.begin(), out.m2.end(), e)) {
            out.e[3].push_back(e);
        }
    }
    std::size_t total = out.m2.size();
    for (const auto& cls : out.e) total += cls.size();
    if (total != f.size()) throw std::logic_error("family partition classes do not cover the family");
    return out;
}

}  // namespace linhyp
