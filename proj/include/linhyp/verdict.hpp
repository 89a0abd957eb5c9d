#ifndef LINHYP_VERDICT_HPP
#define LINHYP_VERDICT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "linhyp/hypercore.hpp"
#include "linhyp/structure.hpp"

namespace linhyp {

using Rational = boost::rational<long long>;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

enum class Verdict { holds, tight, violated, not_applicable };
std::string to_string(Verdict v);

/// Records are either inequalities (left <= right, may be tight) or
/// properties (a count of offending objects that must be zero).
enum class RecordKind { inequality, property };

struct BoundRecord {
    std::string id;
    std::string statement;
    RecordKind kind = RecordKind::inequality;
    bool applicable = false;
    Rational left{0};
    Rational right{0};
    Verdict verdict = Verdict::not_applicable;
    std::string note;

    Rational slack() const { return right - left; }
};

BoundRecord make_inequality(std::string id, std::string statement, bool applicable, Rational left, Rational right,
                            std::string note = {});
BoundRecord make_property(std::string id, std::string statement, long long offenders, std::string note = {});
BoundRecord not_applicable(std::string id, std::string statement, RecordKind kind, std::string note);

/// Stable list of every record id evaluate() emits, in emission order.
const std::vector<std::string>& record_ids();

struct FamilySummary {
    std::size_t n = 0;
    std::size_t edges = 0;
    Uniformity uniformity;
    bool linear = false;
    std::size_t max_degree = 0;
    std::size_t nu = 0;
    std::vector<VertexId> s_f;
    std::vector<VertexId> nested_sequence;
    EdgeList matching;
};

struct BoundReport {
    FamilySummary summary;
    std::vector<BoundRecord> records;

    bool any_violation() const;
    const BoundRecord& record(const std::string& id) const;
};

// Individual checkers. Matching-relative ones take a maximum matching m and
// throw std::invalid_argument when m is not maximum.
BoundRecord check_trivial_bound(const Family& f);
/// [0]: |F| <= 2 Delta nu when Delta >= 5; [1]: |F| <= max{2 Delta nu, 10 nu}.
std::vector<BoundRecord> check_thm_2dnu(const Family& f);
BoundRecord check_main_theorem(const Family& f);
BoundRecord check_d1_bound(const Family& f, std::span<const Edge> m);
BoundRecord check_lemma_degree01(const Family& f, std::span<const Edge> m);
BoundRecord check_prop_degree_knu(const Family& f);
/// [0]: |F| <= k1 Delta + |F_k1|; [1]: Delta(F_k1) <= min{3 nu(F_k1), Delta}.
std::vector<BoundRecord> check_sf_bound(const Family& f);
BoundRecord check_d0_empty(const Family& f, std::span<const Edge> m);
BoundRecord check_degree_sums(const Family& f, std::span<const Edge> m);
/// The pair/triple D_2 bounds, the aggregate D_2 + D_3 bound, the E_1..E_4
/// bounds, apex uniqueness and the quadratic bound for S_F = ∅.
std::vector<BoundRecord> check_structure_bounds(const Family& f, std::span<const Edge> m);

struct EvaluateOptions {
    /// Re-run the matching-relative checks for every maximum matching (via the
    /// exhaustive oracle) and keep the least slack per record.
    bool all_maximum_matchings = false;
};

/// Every record on one family. Families that are not linear and 3-uniform
/// get only the trivial bound (when uniform); the rest are not applicable.
BoundReport evaluate(const Family& f, const EvaluateOptions& opts = {});

struct BoundStats {
    std::size_t applicable = 0;
    std::size_t holds = 0;
    std::size_t tight = 0;
    std::size_t violated = 0;
};

struct Violation {
    std::string bound_id;
    std::string family_json;
    Rational left{0};
    Rational right{0};
};

struct SweepOptions {
    std::size_t max_vertices = 0;
    std::size_t max_edges = 0;
    bool isomorphism_rejection = true;
    bool oracle_checks = true;
    std::size_t jobs = 1;
    std::size_t witnesses_per_bound = 3;
    /// Keep every (family hash, record) pair, for CSV output.
    bool keep_rows = false;
};

struct SweepRow {
    std::string family_hash;
    BoundRecord record;
};

struct SweepReport {
    SweepOptions options;
    std::size_t families = 0;
    std::map<std::string, BoundStats> stats;
    std::vector<Violation> violations;
    std::map<std::string, std::vector<std::string>> tight_witnesses;
    std::size_t nu_mismatches = 0;
    std::size_t sf_mismatches = 0;
    std::vector<std::string> mismatch_examples;
    std::vector<SweepRow> rows;

    std::size_t violation_count() const { return violations.size(); }
    bool oracles_agree() const { return nu_mismatches == 0 && sf_mismatches == 0; }
};

/// Evaluate every enumerated family; workers take contiguous chunks and the
/// partial reports are merged in chunk order, so output does not depend on
/// the number of jobs.
SweepReport sweep(const SweepOptions& opts);

}  // namespace linhyp

#endif
