#include "linhyp/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace linhyp {

namespace {

using EdgeBits = boost::dynamic_bitset<std::uint64_t>;

// Branch-and-bound over edge indices of a fixed family.
class MatchingSolver {
public:
    explicit MatchingSolver(const Family& f) : f_(f), m_(f.size()) {
        incidence_.assign(f.n(), EdgeBits(m_));
        for (std::size_t i = 0; i < m_; ++i)
            for (auto v : f.edge(i)) incidence_[v].set(i);
        conflict_.assign(m_, EdgeBits(m_));
        for (std::size_t i = 0; i < m_; ++i)
            for (auto v : f.edge(i)) conflict_[i] |= incidence_[v];
    }

    std::size_t matching_number() {
        best_.clear();
        std::vector<std::size_t> chosen;
        EdgeBits alive(m_);
        alive.set();
        // first-fit incumbent in canonical order
        EdgeBits free = alive;
        for (auto i = free.find_first(); i != EdgeBits::npos; i = free.find_next(i)) {
            best_.push_back(i);
            free -= conflict_[i];
        }
        search(alive, chosen);
        return best_.size();
    }

    std::vector<std::size_t> lex_least(std::size_t target) {
        std::vector<std::size_t> chosen;
        EdgeBits alive(m_);
        alive.set();
        if (!lex_search(alive, target, chosen)) throw std::logic_error("no matching of the requested size");
        return chosen;
    }

private:
    // Greedy partition of the alive edges into stars: take the first alive
    // edge, pick its vertex of largest alive degree, remove that star. A
    // matching uses at most one edge of each star.
    std::size_t star_bound(EdgeBits rest) const {
        std::size_t groups = 0;
        for (auto e = rest.find_first(); e != EdgeBits::npos; e = rest.find_first()) {
            std::size_t best_count = 0;
            VertexId best_vertex = f_.edge(e).front();
            for (auto v : f_.edge(e)) {
                const auto c = (incidence_[v] & rest).count();
                if (c > best_count) {
                    best_count = c;
                    best_vertex = v;
                }
            }
            rest -= incidence_[best_vertex];
            ++groups;
        }
        return groups;
    }

    void search(const EdgeBits& alive, std::vector<std::size_t>& chosen) {
        if (chosen.size() > best_.size()) best_ = chosen;
        const auto first = alive.find_first();
        if (first == EdgeBits::npos) return;
        if (chosen.size() + star_bound(alive) <= best_.size()) return;
        // lowest vertex still covered by an alive edge
        const VertexId v = f_.edge(first).front();
        const EdgeBits at_v = alive & incidence_[v];
        for (auto e = at_v.find_first(); e != EdgeBits::npos; e = at_v.find_next(e)) {
            chosen.push_back(e);
            search(alive - conflict_[e], chosen);
            chosen.pop_back();
        }
        search(alive - incidence_[v], chosen);
    }

    bool lex_search(const EdgeBits& alive, std::size_t need, std::vector<std::size_t>& chosen) {
        if (need == 0) return true;
        EdgeBits rest = alive;
        for (auto i = rest.find_first(); i != EdgeBits::npos; i = rest.find_next(i)) {
            if (star_bound(rest) < need) return false;
            rest.reset(i);
            chosen.push_back(i);
            if (lex_search(rest - conflict_[i], need - 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    const Family& f_;
    std::size_t m_;
    std::vector<EdgeBits> incidence_;
    std::vector<EdgeBits> conflict_;
    std::vector<std::size_t> best_;
};

bool pairwise_disjoint(std::span<const Edge> edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].meets(edges[j])) return false;
    return true;
}

EdgeList sorted_unique(std::span<const Edge> edges) {
    EdgeList out(edges.begin(), edges.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

bool is_matching(const Family& f, std::span<const Edge> m) {
    const auto unique = sorted_unique(m);
    if (unique.size() != m.size()) return false;
    for (const auto& e : m)
        if (!f.contains(e)) return false;
    return pairwise_disjoint(m);
}

bool is_augmenting_set(const Family& f, std::span<const Edge> m, std::span<const Edge> c) {
    if (!is_matching(f, m)) return false;
    const auto matching = sorted_unique(m);
    const auto cset = sorted_unique(c);
    if (cset.size() != c.size()) return false;
    for (const auto& e : cset)
        if (!f.contains(e)) return false;

    EdgeList in_m, outside_m;
    for (const auto& e : cset)
        (std::binary_search(matching.begin(), matching.end(), e) ? in_m : outside_m).push_back(e);

    if (!(in_m.size() < outside_m.size())) return false;
    for (const auto& b : matching) {
        const bool touched =
            std::any_of(outside_m.begin(), outside_m.end(), [&b](const Edge& a) { return a.meets(b); });
        if (touched && !std::binary_search(in_m.begin(), in_m.end(), b)) return false;
    }
    return pairwise_disjoint(outside_m);
}

EdgeList augment(const Family& f, std::span<const Edge> m, std::span<const Edge> c) {
    if (!is_augmenting_set(f, m, c)) throw std::invalid_argument("not an augmenting set for this matching");
    const auto matching = sorted_unique(m);
    const auto cset = sorted_unique(c);
    EdgeList out;
    std::set_symmetric_difference(matching.begin(), matching.end(), cset.begin(), cset.end(),
                                  std::back_inserter(out));
    return out;
}

EdgeList maximum_matching(const Family& f) {
    if (f.empty()) return {};
    MatchingSolver solver(f);
    const auto size = solver.matching_number();
    EdgeList out;
    for (auto i : solver.lex_least(size)) out.push_back(f.edge(i));
    return out;
}

std::size_t nu(const Family& f) {
    if (f.empty()) return 0;
    return MatchingSolver(f).matching_number();
}

bool is_maximum_matching(const Family& f, std::span<const Edge> m) {
    return is_matching(f, m) && m.size() == nu(f);
}

std::optional<EdgeList> find_augmenting_set(const Family& f, std::span<const Edge> m) {
    if (!is_matching(f, m)) throw std::invalid_argument("input is not a matching of the family");
    const auto current = sorted_unique(m);
    const auto best = maximum_matching(f);
    if (best.size() <= current.size()) return std::nullopt;

    EdgeList sym;
    std::set_symmetric_difference(best.begin(), best.end(), current.begin(), current.end(),
                                  std::back_inserter(sym));
    // components of the intersection graph on sym; sym is sorted, so scanning
    // seeds in order yields components ordered by their smallest edge
    std::vector<int> component(sym.size(), -1);
    int next = 0;
    for (std::size_t seed = 0; seed < sym.size(); ++seed) {
        if (component[seed] != -1) continue;
        std::vector<std::size_t> stack{seed};
        component[seed] = next;
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < sym.size(); ++j)
                if (component[j] == -1 && sym[i].meets(sym[j])) {
                    component[j] = next;
                    stack.push_back(j);
                }
        }
        ++next;
    }
    for (int c = 0; c < next; ++c) {
        EdgeList members;
        long balance = 0;
        for (std::size_t i = 0; i < sym.size(); ++i)
            if (component[i] == c) {
                members.push_back(sym[i]);
                balance += std::binary_search(best.begin(), best.end(), sym[i]) ? 1 : -1;
            }
        if (balance > 0) return members;
    }
    throw std::logic_error("symmetric difference has no augmenting component");
}

}  // namespace linhyp
