#include "linhyp/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace linhyp {

Family sunflower_family(std::size_t delta, std::size_t nu) {
    if (delta < 1 || nu < 1) throw std::invalid_argument("sunflower needs delta >= 1 and nu >= 1");
    const std::size_t width = 2 * delta + 1;
    EdgeList edges;
    for (std::size_t c = 0; c < nu; ++c) {
        const auto core = static_cast<VertexId>(c * width);
        for (std::size_t p = 0; p < delta; ++p)
            edges.push_back(Edge{core, static_cast<VertexId>(core + 1 + 2 * p), static_cast<VertexId>(core + 2 + 2 * p)});
    }
    return Family(nu * width, std::move(edges), 3);
}

namespace {

VertexId point(std::size_t x, std::size_t layer, std::size_t v) {
    return static_cast<VertexId>(x + (layer % 3) * v);
}

// Bose: idempotent commutative quasigroup x∘y = (x+y)/2 on Z_v, v odd.
EdgeList bose(std::size_t n) {
    const std::size_t v = n / 3;
    const std::size_t half = (v + 1) / 2;
    EdgeList edges;
    for (std::size_t x = 0; x < v; ++x) edges.push_back(Edge{point(x, 0, v), point(x, 1, v), point(x, 2, v)});
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            const std::size_t z = ((x + y) * half) % v;
            for (std::size_t i = 0; i < 3; ++i) edges.push_back(Edge{point(x, i, v), point(y, i, v), point(z, i + 1, v)});
        }
    return edges;
}

// Skolem: half-idempotent commutative quasigroup on Z_{2m} plus a point at
// infinity.
EdgeList skolem(std::size_t n) {
    const std::size_t v = (n - 1) / 3;  // 2m
    const std::size_t m = v / 2;
    const auto inf = static_cast<VertexId>(n - 1);
    auto op = [v, m](std::size_t x, std::size_t y) {
        const std::size_t s = (x + y) % v;
        return s % 2 == 0 ? s / 2 : (s - 1) / 2 + m;
    };
    EdgeList edges;
    for (std::size_t x = 0; x < m; ++x) {
        edges.push_back(Edge{point(x, 0, v), point(x, 1, v), point(x, 2, v)});
        for (std::size_t i = 0; i < 3; ++i) edges.push_back(Edge{inf, point(x + m, i, v), point(x, i + 1, v)});
    }
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            const std::size_t z = op(x, y);
            for (std::size_t i = 0; i < 3; ++i) edges.push_back(Edge{point(x, i, v), point(y, i, v), point(z, i + 1, v)});
        }
    return edges;
}

}  // namespace

Family steiner_triple_system(std::size_t n) {
    if (n < 3 || (n % 6 != 1 && n % 6 != 3))
        throw std::invalid_argument("Steiner triple systems exist only for n >= 3 with n = 1 or 3 (mod 6); got " +
                                    std::to_string(n));
    return Family(n, n % 6 == 3 ? bose(n) : skolem(n), 3);
}

Family fano_plane() { return steiner_triple_system(7); }

SimpleGraph chvatal_hanson_graph(std::size_t delta, std::size_t nu) {
    if (delta < 1 || nu < 1) throw std::invalid_argument("extremal graph needs delta >= 1 and nu >= 1");
    const std::size_t unit = (delta + 1) / 2;  // matching number of one gadget
    const std::size_t gadgets = nu / unit;
    const std::size_t stars = nu - gadgets * unit;

    std::vector<SimpleGraph::Pair> pairs;
    VertexId next = 0;
    auto add = [&pairs](VertexId a, VertexId b) { pairs.emplace_back(a, b); };

    for (std::size_t g = 0; g < gadgets; ++g) {
        const VertexId base = next;
        if (delta % 2 == 0) {
            // K_{delta+1}
            for (VertexId i = 0; i <= delta; ++i)
                for (VertexId j = i + 1; j <= delta; ++j) add(base + i, base + j);
            next += static_cast<VertexId>(delta + 1);
        } else {
            // K_{delta+2} minus the near-perfect matching {0,1},{2,3},...,{delta-1,delta}
            // minus the edge {0, delta+1} at the unmatched vertex
            const auto order = static_cast<VertexId>(delta + 2);
            const VertexId spare = order - 1;
            for (VertexId i = 0; i < order; ++i)
                for (VertexId j = i + 1; j < order; ++j) {
                    if (j == i + 1 && i % 2 == 0 && j < spare) continue;
                    if (i == 0 && j == spare) continue;
                    add(base + i, base + j);
                }
            next += order;
        }
    }
    for (std::size_t s = 0; s < stars; ++s) {
        const VertexId centre = next;
        for (VertexId leaf = 1; leaf <= delta; ++leaf) add(centre, centre + leaf);
        next += static_cast<VertexId>(delta + 1);
    }
    return SimpleGraph(next, std::move(pairs));
}

Family graph_lift(const SimpleGraph& g) {
    EdgeList edges;
    VertexId fresh = static_cast<VertexId>(g.n());
    for (const auto& [a, b] : g.edges()) edges.push_back(Edge{a, b, fresh++});
    return Family(g.n() + g.edges().size(), std::move(edges), 3);
}

Family random_linear_family(std::size_t n, std::size_t target_edges, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random family needs n >= 3");
    std::mt19937_64 rng(seed);
    auto draw = [&rng, n] { return static_cast<VertexId>(rng() % n); };
    EdgeList edges;
    const std::size_t budget = 10 * target_edges;
    for (std::size_t attempt = 0; attempt < budget && edges.size() < target_edges; ++attempt) {
        VertexId a = draw(), b = draw(), c = draw();
        while (b == a) b = draw();
        while (c == a || c == b) c = draw();
        Edge e{a, b, c};
        const bool ok =
            std::none_of(edges.begin(), edges.end(), [&e](const Edge& other) { return e.intersection_size(other) > 1; });
        if (ok) edges.push_back(std::move(e));
    }
    return Family(n, std::move(edges), 3);
}

namespace {

using Mask = std::uint64_t;

// For a fixed ordering of the edges, a vertex is described by the set of
// positions of the edges containing it. Vertices with equal descriptions are
// twins, so the sorted multiset of descriptions determines the family up to
// isomorphism. The canonical key is the least such multiset over all
// orderings that list edges by a non-decreasing isomorphism invariant.
struct CanonicalSearch {
    const Family& f;
    std::vector<std::vector<std::size_t>> incident;  // per vertex, edge indices
    std::vector<std::size_t> position_class;         // class id required at each position
    std::vector<std::size_t> edge_class;
    std::vector<std::size_t> order;                  // order[p] = edge index
    std::vector<bool> used;
    std::vector<VertexId> vertices;
    std::vector<Mask> best;
    bool have_best = false;

    explicit CanonicalSearch(const Family& fam) : f(fam) {
        if (f.size() > 64) throw std::invalid_argument("canonical form supports at most 64 edges");
        const auto deg = degrees(f);
        vertices = support(f);
        incident.assign(f.n(), {});
        for (std::size_t i = 0; i < f.size(); ++i)
            for (auto v : f.edge(i)) incident[v].push_back(i);

        // invariant: size, then sorted vertex degrees, then sorted
        // neighbouring-edge intersection sizes
        std::vector<std::vector<std::size_t>> inv(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto& key = inv[i];
            key.push_back(f.edge(i).size());
            std::vector<std::size_t> d;
            for (auto v : f.edge(i)) d.push_back(deg[v]);
            std::sort(d.begin(), d.end());
            key.insert(key.end(), d.begin(), d.end());
            std::vector<std::size_t> meets;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) meets.push_back(f.edge(i).intersection_size(f.edge(j)));
            std::sort(meets.begin(), meets.end());
            key.push_back(meets.size());
            key.insert(key.end(), meets.begin(), meets.end());
        }
        auto distinct = inv;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        edge_class.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            edge_class[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), inv[i]) - distinct.begin());
        position_class = edge_class;
        std::sort(position_class.begin(), position_class.end());
        used.assign(f.size(), false);
    }

    void leaf() {
        std::vector<std::size_t> pos(f.size());
        for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = p;
        std::vector<Mask> desc;
        desc.reserve(vertices.size());
        for (auto v : vertices) {
            Mask m = 0;
            for (auto e : incident[v]) m |= Mask{1} << pos[e];
            desc.push_back(m);
        }
        std::sort(desc.begin(), desc.end());
        if (!have_best || desc < best) {
            best = std::move(desc);
            have_best = true;
        }
    }

    void run(std::size_t p) {
        if (p == f.size()) {
            leaf();
            return;
        }
        for (std::size_t e = 0; e < f.size(); ++e) {
            if (used[e] || edge_class[e] != position_class[p]) continue;
            used[e] = true;
            order.push_back(e);
            run(p + 1);
            order.pop_back();
            used[e] = false;
        }
    }
};

}  // namespace

Family canonical_form(const Family& f) {
    CanonicalSearch search(f);
    search.run(0);
    std::vector<std::vector<VertexId>> members(f.size());
    for (std::size_t v = 0; v < search.best.size(); ++v)
        for (std::size_t p = 0; p < f.size(); ++p)
            if (search.best[v] >> p & 1U) members[p].push_back(static_cast<VertexId>(v));
    EdgeList edges;
    for (auto& m : members) edges.emplace_back(std::move(m));
    return Family(f.n(), std::move(edges), f.uniformity());
}

namespace {

std::vector<Edge> all_triples(std::size_t n) {
    std::vector<Edge> out;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c) out.push_back(Edge{a, b, c});
    return out;
}

bool fits(const EdgeList& edges, const Edge& e) {
    return std::none_of(edges.begin(), edges.end(), [&e](const Edge& o) { return e.intersection_size(o) > 1; });
}

bool labeled_dfs(const std::vector<Edge>& triples, std::size_t start, EdgeList& chosen, const EnumerationOptions& opts,
                 const std::function<bool(const Family&)>& visit) {
    if (!visit(Family(opts.max_vertices, chosen, 3))) return false;
    if (chosen.size() == opts.max_edges) return true;
    for (std::size_t i = start; i < triples.size(); ++i) {
        if (!fits(chosen, triples[i])) continue;
        chosen.push_back(triples[i]);
        const bool go_on = labeled_dfs(triples, i + 1, chosen, opts, visit);
        chosen.pop_back();
        if (!go_on) return false;
    }
    return true;
}

}  // namespace

void enumerate_families(const EnumerationOptions& opts, const std::function<bool(const Family&)>& visit) {
    const std::size_t nv = opts.max_vertices;
    if (!opts.isomorphism_rejection) {
        const auto triples = all_triples(nv);
        EdgeList chosen;
        labeled_dfs(triples, 0, chosen, opts, visit);
        return;
    }

    // level-by-level extension with canonical deduplication
    std::vector<Family> level{Family(nv, {}, 3)};
    for (std::size_t e = 0;; ++e) {
        for (const auto& fam : level)
            if (!visit(fam)) return;
        if (e == opts.max_edges) return;
        std::set<EdgeList> next;
        for (const auto& fam : level) {
            const auto s = static_cast<VertexId>(support(fam).size());
            // new vertices are interchangeable; only s, s+1, s+2 are tried
            const std::size_t limit = std::min<std::size_t>(nv, s + 3);
            for (VertexId a = 0; a < limit; ++a)
                for (VertexId b = a + 1; b < limit; ++b)
                    for (VertexId c = b + 1; c < limit; ++c) {
                        if ((a >= s && a != s) || (b >= s && b != std::max<VertexId>(s, a + 1)) ||
                            (c >= s && c != std::max<VertexId>(s, b + 1)))
                            continue;
                        Edge t{a, b, c};
                        if (!fits(fam.edges(), t)) continue;
                        EdgeList grown = fam.edges();
                        grown.push_back(t);
                        next.insert(canonical_form(Family(nv, std::move(grown), 3)).edges());
                    }
        }
        if (next.empty()) return;
        level.clear();
        for (const auto& edges : next) level.emplace_back(nv, edges, 3);
    }
}

std::vector<Family> enumerate_families(const EnumerationOptions& opts) {
    std::vector<Family> out;
    enumerate_families(opts, [&out](const Family& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

}  // namespace linhyp
