#include "linhyp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace linhyp::oracle {

namespace {

std::vector<std::uint32_t> conflict_masks(const Family& f) {
    if (f.size() > kOracleMaxEdges) throw std::invalid_argument("family too large for the exhaustive oracle");
    std::vector<std::uint32_t> c(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j && f.edge(i).meets(f.edge(j))) c[i] |= 1U << j;
    return c;
}

bool packs(std::uint32_t subset, const std::vector<std::uint32_t>& conflict) {
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(rest));
        if (conflict[i] & subset) return false;
    }
    return true;
}

}  // namespace

std::size_t nu_exhaustive(const Family& f) {
    const auto conflict = conflict_masks(f);
    const std::uint32_t all = f.size() == 32 ? ~0U : (1U << f.size()) - 1;
    std::size_t best = 0;
    for (std::uint32_t s = 0;; ++s) {
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (size > best && packs(s, conflict)) best = size;
        if (s == all) break;
    }
    return best;
}

std::vector<EdgeList> all_maximum_matchings(const Family& f) {
    const auto conflict = conflict_masks(f);
    const std::uint32_t all = (1U << f.size()) - 1;
    std::vector<std::uint32_t> best_sets;
    int best = -1;
    for (std::uint32_t s = 0;; ++s) {
        const int size = std::popcount(s);
        if (size >= best && packs(s, conflict)) {
            if (size > best) {
                best = size;
                best_sets.clear();
            }
            best_sets.push_back(s);
        }
        if (s == all) break;
    }
    std::vector<EdgeList> out;
    for (auto s : best_sets) {
        EdgeList m;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (s >> i & 1U) m.push_back(f.edge(i));
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> s_f_by_enumeration(const Family& f) {
    std::vector<VertexId> common;
    bool first = true;
    for (const auto& m : all_maximum_matchings(f)) {
        std::vector<VertexId> cover;
        for (const auto& e : m) cover.insert(cover.end(), e.begin(), e.end());
        std::sort(cover.begin(), cover.end());
        if (first) {
            common = cover;
            first = false;
        } else {
            std::vector<VertexId> kept;
            std::set_intersection(common.begin(), common.end(), cover.begin(), cover.end(), std::back_inserter(kept));
            common = std::move(kept);
        }
    }
    return common;
}

}  // namespace linhyp::oracle
