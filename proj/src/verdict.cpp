#include "linhyp/verdict.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "linhyp/family_json.hpp"
#include "linhyp/generators.hpp"
#include "linhyp/matching.hpp"
#include "linhyp/oracles.hpp"

namespace linhyp {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::tight: return "tight";
        case Verdict::violated: return "violated";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "unknown";
}

BoundRecord make_inequality(std::string id, std::string statement, bool applicable, Rational left, Rational right,
                            std::string note) {
    BoundRecord r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.kind = RecordKind::inequality;
    r.applicable = applicable;
    r.left = left;
    r.right = right;
    r.note = std::move(note);
    if (!applicable)
        r.verdict = Verdict::not_applicable;
    else if (left > right)
        r.verdict = Verdict::violated;
    else if (left == right)
        r.verdict = Verdict::tight;
    else
        r.verdict = Verdict::holds;
    return r;
}

BoundRecord make_property(std::string id, std::string statement, long long offenders, std::string note) {
    BoundRecord r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.kind = RecordKind::property;
    r.applicable = true;
    r.left = offenders;
    r.right = 0;
    r.verdict = offenders > 0 ? Verdict::violated : Verdict::holds;
    r.note = std::move(note);
    return r;
}

BoundRecord not_applicable(std::string id, std::string statement, RecordKind kind, std::string note) {
    BoundRecord r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.kind = kind;
    r.note = std::move(note);
    return r;
}

namespace {

namespace stmt {
constexpr const char* trivial_cover = "|F| <= (Delta-1)*k*nu + nu";
constexpr const char* two_delta_nu = "Delta >= 5 implies |F| <= 2*Delta*nu";
constexpr const char* max_2dnu_10nu = "|F| <= max(2*Delta*nu, 10*nu)";
constexpr const char* main_delta_nu = "6*Delta*(nu-1) >= 23*nu^2 implies |F| <= Delta*nu";
constexpr const char* degree_knu = "every vertex of degree > k*nu lies in S_F";
constexpr const char* sf_bound = "|F| <= k1*Delta + |F_k1|";
constexpr const char* sf_residual_degree = "Delta(F_k1) <= min(3*nu(F_k1), Delta)";
constexpr const char* d0_empty = "no edge avoids the vertices of a maximum matching";
constexpr const char* degree_sums = "degree sum outside X_M = 2|D1| + |D2|; inside X_M = |D1| + 2|D2| + 3|D3|";
constexpr const char* d1_edges = "|D1| <= max((Delta-1)*nu, 6*nu)";
constexpr const char* degree_0_1 = "a matching-edge vertex with d1 >= 3 forces d1 = 0 on the other vertices";
constexpr const char* d2_pair_max8 = "|D2(A,B)| <= 8 for every pair of matching edges";
constexpr const char* d2_pair_sum12 = "|D2(A,B)| = 8 implies |D2(A,C)| + |D2(B,C)| <= 12";
constexpr const char* d2_triple_max21 = "|D2(A,B,C)| <= 21 for every triple of matching edges";
constexpr const char* d2_d3_aggregate = "|D2| + |D3 \\ M| <= 23/(n-2) * C(n,3), n = |M|";
constexpr const char* apex_unique = "the D1 edges of every M1 edge share one vertex";
constexpr const char* e1_bound = "|E1| <= m*Delta, m = |M1|";
constexpr const char* e2_empty = "E2 is empty";
constexpr const char* e3_bound = "|E3| <= min(2m+6, Delta-1)*(nu-m), m = |M1|";
constexpr const char* e4_bound = "|E4| <= 23n(n-1)/6 if n >= 3, 8 if n = 2, 0 if n <= 1, n = |M2|";
constexpr const char* s_empty_quadratic = "S_F empty implies |F| <= 23/6*nu^2 + 7*nu";
}  // namespace stmt

constexpr const char* kNeedsLinearTriples = "requires a linear 3-uniform family";

struct Context {
    explicit Context(const Family& fam) : f(fam) {}
    const Family& f;
    std::size_t delta = 0;
    std::size_t nu = 0;
    std::vector<VertexId> sf;
    NestedDecomposition nested;
};

Context make_context(const Family& f) {
    Context c(f);
    c.delta = max_degree(f);
    c.nu = linhyp::nu(f);
    c.sf = s_f(f);
    c.nested = nested_decomposition(f);
    return c;
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

void require_maximum(const Family& f, std::span<const Edge> m) {
    if (!is_maximum_matching(f, m)) throw std::invalid_argument("matching is not maximum");
}

BoundRecord trivial_bound(const Context& c) {
    if (!c.f.uniformity()) return not_applicable("trivial_cover", stmt::trivial_cover, RecordKind::inequality, "mixed uniformity");
    const auto k = ll(*c.f.uniformity());
    const long long right = (ll(c.delta) - 1) * k * ll(c.nu) + ll(c.nu);
    return make_inequality("trivial_cover", stmt::trivial_cover, true, ll(c.f.size()), right);
}

std::vector<BoundRecord> thm_2dnu(const Context& c) {
    const long long size = ll(c.f.size());
    const long long d = ll(c.delta), n = ll(c.nu);
    std::vector<BoundRecord> out;
    out.push_back(make_inequality("two_delta_nu", stmt::two_delta_nu, d >= 5, size, 2 * d * n,
                                  d >= 5 ? "" : "hypothesis Delta >= 5 fails"));
    out.push_back(make_inequality("max_2dnu_10nu", stmt::max_2dnu_10nu, true, size, std::max(2 * d * n, 10 * n)));
    return out;
}

BoundRecord main_theorem(const Context& c) {
    const long long size = ll(c.f.size());
    const long long d = ll(c.delta), n = ll(c.nu);
    if (n < 2) {
        return make_inequality("main_delta_nu", stmt::main_delta_nu, false, size, d * n,
                               "hypothesis undefined for nu < 2; the trivial cover bound applies instead");
    }
    const bool hyp = 6 * d * (n - 1) >= 23 * n * n;
    std::string note;
    if (!hyp) {
        note = "hypothesis fails (6*Delta*(nu-1) < 23*nu^2); no claim";
        if (size > d * n) note += "; |F| exceeds Delta*nu";
    }
    return make_inequality("main_delta_nu", stmt::main_delta_nu, hyp, size, d * n, note);
}

BoundRecord degree_knu(const Context& c) {
    const auto k = *c.f.uniformity();
    const auto deg = degrees(c.f);
    long long offenders = 0;
    for (VertexId x = 0; x < c.f.n(); ++x)
        if (deg[x] > k * c.nu && !std::binary_search(c.sf.begin(), c.sf.end(), x)) ++offenders;
    return make_property("degree_knu", stmt::degree_knu, offenders);
}

std::vector<BoundRecord> sf_bound(const Context& c) {
    const auto& rest = c.nested.subfamilies.back();
    const long long k1 = ll(c.nested.k1());
    std::vector<BoundRecord> out;
    out.push_back(make_inequality("sf_bound", stmt::sf_bound, true, ll(c.f.size()), k1 * ll(c.delta) + ll(rest.size()),
                                  "k1 = " + std::to_string(k1)));
    const long long cap = std::min(3 * ll(linhyp::nu(rest)), ll(c.delta));
    out.push_back(make_inequality("sf_residual_degree", stmt::sf_residual_degree, true, ll(max_degree(rest)), cap));
    return out;
}

// Everything relative to one maximum matching.
std::vector<BoundRecord> matching_records(const Context& c, std::span<const Edge> m) {
    const Family& f = c.f;
    const auto part = d_partition(f, m);
    EdgeList mm(m.begin(), m.end());
    std::sort(mm.begin(), mm.end());
    const std::size_t n = mm.size();
    const long long delta = ll(c.delta);
    const long long nu = ll(n);

    std::vector<int> owner(f.n(), -1);
    for (std::size_t i = 0; i < n; ++i)
        for (auto v : mm[i]) owner[v] = static_cast<int>(i);

    std::vector<BoundRecord> out;
    out.push_back(make_property("d0_empty", stmt::d0_empty, ll(part.d[0].size())));

    {
        const auto deg = degrees(f);
        long long inside = 0, outside = 0, total = 0;
        for (VertexId x = 0; x < f.n(); ++x) {
            (owner[x] >= 0 ? inside : outside) += ll(deg[x]);
            total += ll(deg[x]);
        }
        const long long d1 = ll(part.d[1].size()), d2 = ll(part.d[2].size()), d3 = ll(part.d[3].size());
        long long failed = 0;
        if (outside != 2 * d1 + d2) ++failed;
        if (inside != d1 + 2 * d2 + 3 * d3) ++failed;
        if (total != 3 * ll(f.size())) ++failed;
        out.push_back(make_property("degree_sums", stmt::degree_sums, failed));
    }

    out.push_back(make_inequality("d1_edges", stmt::d1_edges, true, ll(part.d[1].size()),
                                  std::max((delta - 1) * nu, 6 * nu)));

    {
        long long offenders = 0;
        for (const auto& b : mm) {
            std::vector<std::size_t> d1(b.size(), 0);
            for (const auto& e : part.d[1])
                for (std::size_t i = 0; i < b.size(); ++i)
                    if (e.contains(b.members()[i])) ++d1[i];
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (d1[i] < 3) continue;
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (j != i && d1[j] != 0) ++offenders;
            }
        }
        out.push_back(make_property("degree_0_1", stmt::degree_0_1, offenders));
    }

    // pair counts of D2 edges; every D2 edge meets exactly two matching edges
    std::vector<std::vector<long long>> pair(n, std::vector<long long>(n, 0));
    for (const auto& e : part.d[2]) {
        std::vector<int> hit;
        for (auto v : e)
            if (owner[v] >= 0) hit.push_back(owner[v]);
        ++pair[hit[0]][hit[1]];
        ++pair[hit[1]][hit[0]];
    }

    if (n >= 2) {
        long long worst = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) worst = std::max(worst, pair[i][j]);
        out.push_back(make_inequality("d2_pair_max8", stmt::d2_pair_max8, true, worst, 8));
    } else {
        out.push_back(make_inequality("d2_pair_max8", stmt::d2_pair_max8, false, 0, 8, "fewer than two matching edges"));
    }

    long long worst_sum = 0, worst_triple = 0;
    bool any_eight = false;
    bool all_within_21 = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                const long long ab = pair[i][j], ac = pair[i][l], bc = pair[j][l];
                const long long t = ab + ac + bc;
                worst_triple = std::max(worst_triple, t);
                if (t > 21) all_within_21 = false;
                if (ab == 8) { any_eight = true; worst_sum = std::max(worst_sum, ac + bc); }
                if (ac == 8) { any_eight = true; worst_sum = std::max(worst_sum, ab + bc); }
                if (bc == 8) { any_eight = true; worst_sum = std::max(worst_sum, ab + ac); }
            }
    out.push_back(make_inequality("d2_pair_sum12", stmt::d2_pair_sum12, any_eight, worst_sum, 12,
                                  any_eight ? "" : "no matching triple with a pair at 8"));
    out.push_back(make_inequality("d2_triple_max21", stmt::d2_triple_max21, n >= 3, worst_triple, 21,
                                  n >= 3 ? "" : "fewer than three matching edges"));
    {
        long long d3_extra = 0;
        for (const auto& e : part.d[3])
            if (!std::binary_search(mm.begin(), mm.end(), e)) ++d3_extra;
        const long long left = ll(part.d[2].size()) + d3_extra;
        const long long nn = ll(n);
        const bool applicable = n >= 3 && all_within_21;
        const Rational right = n >= 3 ? Rational(23 * (nn * (nn - 1) * (nn - 2) / 6), nn - 2) : Rational(0);
        std::string note;
        if (n < 3) note = "fewer than three matching edges";
        else if (!all_within_21) note = "some matching triple exceeds 21";
        out.push_back(make_inequality("d2_d3_aggregate", stmt::d2_d3_aggregate, applicable, left, right, note));
    }

    const auto mp = matching_partition(f, m);
    const auto fp = family_partition(f, m, mp);
    const long long m1 = ll(mp.m1.size());
    out.push_back(make_property("apex_unique", stmt::apex_unique, ll(mp.conflicts.size())));
    out.push_back(make_inequality("e1_bound", stmt::e1_bound, true, ll(fp.e[0].size()), m1 * delta));
    out.push_back(make_property("e2_empty", stmt::e2_empty, ll(fp.e[1].size())));
    out.push_back(make_inequality("e3_bound", stmt::e3_bound, true, ll(fp.e[2].size()),
                                  std::min(2 * m1 + 6, delta - 1) * (nu - m1), "m = " + std::to_string(m1)));
    {
        const long long n2 = ll(mp.m2.size());
        Rational right = 0;
        if (n2 >= 3) right = Rational(23 * n2 * (n2 - 1), 6);
        else if (n2 == 2) right = 8;
        out.push_back(make_inequality("e4_bound", stmt::e4_bound, true, ll(fp.e[3].size()), right,
                                      "n = " + std::to_string(n2)));
    }
    return out;
}

BoundRecord quadratic_bound(const Context& c) {
    const long long n = ll(c.nu);
    const Rational right = Rational(23 * n * n, 6) + 7 * n;
    const bool applicable = c.sf.empty();
    return make_inequality("s_empty_quadratic", stmt::s_empty_quadratic, applicable, ll(c.f.size()), right,
                           applicable ? "" : "S_F is not empty");
}

// least slack wins; properties compare by offender count
bool worse(const BoundRecord& a, const BoundRecord& b) {
    if (a.applicable != b.applicable) return a.applicable;
    return a.slack() < b.slack();
}

}  // namespace

const std::vector<std::string>& record_ids() {
    static const std::vector<std::string> ids = {
        "trivial_cover", "two_delta_nu",  "max_2dnu_10nu",   "main_delta_nu", "degree_knu",   "sf_bound",
        "sf_residual_degree", "d0_empty", "degree_sums",     "d1_edges",      "degree_0_1",   "d2_pair_max8",
        "d2_pair_sum12", "d2_triple_max21", "d2_d3_aggregate", "apex_unique", "e1_bound",     "e2_empty",
        "e3_bound",      "e4_bound",      "s_empty_quadratic"};
    return ids;
}

bool BoundReport::any_violation() const {
    return std::any_of(records.begin(), records.end(), [](const BoundRecord& r) { return r.verdict == Verdict::violated; });
}

const BoundRecord& BoundReport::record(const std::string& id) const {
    for (const auto& r : records)
        if (r.id == id) return r;
    throw std::out_of_range("no record " + id);
}

BoundRecord check_trivial_bound(const Family& f) {
    Context c(f);
    c.delta = max_degree(f);
    c.nu = nu(f);
    return trivial_bound(c);
}

std::vector<BoundRecord> check_thm_2dnu(const Family& f) {
    require_linear_triple_system(f);
    Context c(f);
    c.delta = max_degree(f);
    c.nu = nu(f);
    return thm_2dnu(c);
}

BoundRecord check_main_theorem(const Family& f) {
    require_linear_triple_system(f);
    Context c(f);
    c.delta = max_degree(f);
    c.nu = nu(f);
    return main_theorem(c);
}

BoundRecord check_d1_bound(const Family& f, std::span<const Edge> m) {
    require_maximum(f, m);
    const auto c = make_context(f);
    for (auto& r : matching_records(c, m))
        if (r.id == "d1_edges") return r;
    throw std::logic_error("d1_edges missing");
}

BoundRecord check_lemma_degree01(const Family& f, std::span<const Edge> m) {
    require_maximum(f, m);
    const auto c = make_context(f);
    for (auto& r : matching_records(c, m))
        if (r.id == "degree_0_1") return r;
    throw std::logic_error("degree_0_1 missing");
}

BoundRecord check_prop_degree_knu(const Family& f) {
    if (!f.uniformity() || !is_linear(f)) throw std::invalid_argument("requires a linear uniform family");
    Context c(f);
    c.nu = nu(f);
    c.sf = s_f(f);
    return degree_knu(c);
}

std::vector<BoundRecord> check_sf_bound(const Family& f) {
    require_linear_triple_system(f);
    return sf_bound(make_context(f));
}

BoundRecord check_d0_empty(const Family& f, std::span<const Edge> m) {
    require_linear_triple_system(f);
    if (!is_matching(f, m)) throw std::invalid_argument("not a matching");
    return make_property("d0_empty", stmt::d0_empty, ll(d_partition(f, m).d[0].size()));
}

BoundRecord check_degree_sums(const Family& f, std::span<const Edge> m) {
    require_maximum(f, m);
    const auto c = make_context(f);
    for (auto& r : matching_records(c, m))
        if (r.id == "degree_sums") return r;
    throw std::logic_error("degree_sums missing");
}

std::vector<BoundRecord> check_structure_bounds(const Family& f, std::span<const Edge> m) {
    require_linear_triple_system(f);
    require_maximum(f, m);
    const auto c = make_context(f);
    std::vector<BoundRecord> out;
    for (auto& r : matching_records(c, m))
        if (r.id.rfind("d2_", 0) == 0 || r.id.rfind("e", 0) == 0 || r.id == "apex_unique") out.push_back(std::move(r));
    out.push_back(quadratic_bound(c));
    return out;
}

BoundReport evaluate(const Family& f, const EvaluateOptions& opts) {
    BoundReport report;
    auto& s = report.summary;
    s.n = f.n();
    s.edges = f.size();
    s.uniformity = f.uniformity();
    s.linear = is_linear(f);

    const auto ctx = make_context(f);
    s.max_degree = ctx.delta;
    s.nu = ctx.nu;
    s.s_f = ctx.sf;
    s.nested_sequence = ctx.nested.sequence;
    s.matching = maximum_matching(f);

    const bool triples = s.linear && is_uniform(f, 3);
    std::vector<BoundRecord> records;
    records.push_back(trivial_bound(ctx));
    if (triples) {
        for (auto& r : thm_2dnu(ctx)) records.push_back(std::move(r));
        records.push_back(main_theorem(ctx));
        records.push_back(degree_knu(ctx));
        for (auto& r : sf_bound(ctx)) records.push_back(std::move(r));

        auto per_matching = matching_records(ctx, s.matching);
        if (opts.all_maximum_matchings) {
            for (const auto& other : oracle::all_maximum_matchings(f)) {
                auto alt = matching_records(ctx, other);
                for (std::size_t i = 0; i < alt.size(); ++i)
                    if (worse(alt[i], per_matching[i])) per_matching[i] = std::move(alt[i]);
            }
        }
        for (auto& r : per_matching) records.push_back(std::move(r));
        records.push_back(quadratic_bound(ctx));
    }

    // emit in the stable id order; absent ids become not-applicable
    for (const auto& id : record_ids()) {
        auto it = std::find_if(records.begin(), records.end(), [&id](const BoundRecord& r) { return r.id == id; });
        if (it != records.end())
            report.records.push_back(std::move(*it));
        else
            report.records.push_back(not_applicable(id, "", RecordKind::inequality, kNeedsLinearTriples));
    }
    return report;
}

namespace {

void merge_into(SweepReport& into, SweepReport&& part, std::size_t witness_cap) {
    into.families += part.families;
    for (const auto& [id, st] : part.stats) {
        auto& t = into.stats[id];
        t.applicable += st.applicable;
        t.holds += st.holds;
        t.tight += st.tight;
        t.violated += st.violated;
    }
    for (auto& v : part.violations) into.violations.push_back(std::move(v));
    for (auto& [id, list] : part.tight_witnesses) {
        auto& dest = into.tight_witnesses[id];
        for (auto& w : list)
            if (dest.size() < witness_cap) dest.push_back(std::move(w));
    }
    into.nu_mismatches += part.nu_mismatches;
    into.sf_mismatches += part.sf_mismatches;
    for (auto& e : part.mismatch_examples) into.mismatch_examples.push_back(std::move(e));
    for (auto& r : part.rows) into.rows.push_back(std::move(r));
}

SweepReport sweep_chunk(const std::vector<Family>& families, std::size_t begin, std::size_t end,
                        const SweepOptions& opts) {
    SweepReport part;
    for (std::size_t i = begin; i < end; ++i) {
        const Family& f = families[i];
        const auto report = evaluate(f);
        ++part.families;
        const auto json = to_json(f);
        if (opts.keep_rows) {
            const auto hash = family_hash(f);
            for (const auto& r : report.records) part.rows.push_back({hash, r});
        }
        for (const auto& r : report.records) {
            auto& st = part.stats[r.id];
            if (!r.applicable) continue;
            ++st.applicable;
            switch (r.verdict) {
                case Verdict::holds: ++st.holds; break;
                case Verdict::tight:
                    ++st.tight;
                    if (part.tight_witnesses[r.id].size() < opts.witnesses_per_bound)
                        part.tight_witnesses[r.id].push_back(json);
                    break;
                case Verdict::violated:
                    ++st.violated;
                    part.violations.push_back({r.id, json, r.left, r.right});
                    break;
                case Verdict::not_applicable: break;
            }
        }
        if (opts.oracle_checks) {
            if (oracle::nu_exhaustive(f) != report.summary.nu) {
                ++part.nu_mismatches;
                part.mismatch_examples.push_back("nu: " + json);
            }
            if (oracle::s_f_by_enumeration(f) != report.summary.s_f) {
                ++part.sf_mismatches;
                part.mismatch_examples.push_back("s_f: " + json);
            }
        }
    }
    return part;
}

}  // namespace

SweepReport sweep(const SweepOptions& opts) {
    const auto families = enumerate_families({opts.max_vertices, opts.max_edges, opts.isomorphism_rejection});
    const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, families.size()));
    const std::size_t chunk = families.empty() ? 0 : (families.size() + jobs - 1) / jobs;

    std::vector<SweepReport> parts(jobs);
    if (jobs == 1) {
        parts[0] = sweep_chunk(families, 0, families.size(), opts);
    } else {
        std::vector<std::thread> workers;
        for (std::size_t j = 0; j < jobs; ++j) {
            const std::size_t begin = std::min(families.size(), j * chunk);
            const std::size_t end = std::min(families.size(), begin + chunk);
            workers.emplace_back([&, j, begin, end] { parts[j] = sweep_chunk(families, begin, end, opts); });
        }
        for (auto& w : workers) w.join();
    }

    SweepReport out;
    out.options = opts;
    for (const auto& id : record_ids()) out.stats[id];
    for (auto& p : parts) merge_into(out, std::move(p), opts.witnesses_per_bound);
    return out;
}

}  // namespace linhyp
