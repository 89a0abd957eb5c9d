#include "linhyp/report_io.hpp"

#include <sstream>

#include <json.hpp>

#include "linhyp/family_json.hpp"
#include "linhyp/matching.hpp"
#include "linhyp/structure.hpp"

namespace linhyp {

namespace {

using Json = nlohmann::ordered_json;

Json family_object(const Family& f) { return Json::parse(to_json(f)); }

Json edges_array(std::span<const Edge> edges) {
    Json out = Json::array();
    for (const auto& e : edges) out.push_back(std::vector<VertexId>(e.begin(), e.end()));
    return out;
}

Json record_object(const BoundRecord& r) {
    return Json{{"id", r.id},
                {"statement", r.statement},
                {"kind", r.kind == RecordKind::inequality ? "inequality" : "property"},
                {"applicable", r.applicable},
                {"left", to_string(r.left)},
                {"right", to_string(r.right)},
                {"slack", to_string(r.slack())},
                {"verdict", to_string(r.verdict)},
                {"note", r.note}};
}

std::string csv_row(const std::string& hash, const BoundRecord& r) {
    std::ostringstream out;
    out << hash << ',' << r.id << ',' << (r.applicable ? "true" : "false") << ',' << to_string(r.left) << ','
        << to_string(r.right) << ',' << to_string(r.slack()) << ',' << to_string(r.verdict) << '\n';
    return out.str();
}

Json uniformity_value(const Uniformity& k) { return k ? Json(*k) : Json("mixed"); }

}  // namespace

std::string report_to_json(const Family& f, const BoundReport& report) {
    const auto& s = report.summary;
    Json j;
    j["schema"] = kReportSchema;
    j["family"] = family_object(f);
    j["hash"] = family_hash(f);
    j["summary"] = Json{{"n", s.n},
                        {"edges", s.edges},
                        {"k", uniformity_value(s.uniformity)},
                        {"linear", s.linear},
                        {"max_degree", s.max_degree},
                        {"nu", s.nu},
                        {"s_f", s.s_f},
                        {"k1", s.nested_sequence.size()},
                        {"nested_sequence", s.nested_sequence},
                        {"matching", edges_array(s.matching)}};
    Json records = Json::array();
    std::size_t violated = 0;
    for (const auto& r : report.records) {
        records.push_back(record_object(r));
        if (r.verdict == Verdict::violated) ++violated;
    }
    j["records"] = std::move(records);
    j["violations"] = violated;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Family& f, const BoundReport& report) {
    std::string out = std::string(kCsvHeader) + "\n";
    const auto hash = family_hash(f);
    for (const auto& r : report.records) out += csv_row(hash, r);
    return out;
}

std::string analysis_to_json(const Family& f) {
    Json j;
    j["schema"] = kAnalysisSchema;
    j["family"] = family_object(f);
    j["hash"] = family_hash(f);
    j["n"] = f.n();
    j["edges"] = f.size();
    j["k"] = uniformity_value(f.uniformity());
    j["linear"] = is_linear(f);
    j["max_degree"] = max_degree(f);
    const auto m = maximum_matching(f);
    j["nu"] = m.size();
    j["matching"] = edges_array(m);
    j["s_f"] = s_f(f);
    const auto nested = nested_decomposition(f);
    j["k1"] = nested.k1();
    j["nested_sequence"] = nested.sequence;

    if (is_linear(f) && is_uniform(f, 3)) {
        const auto d = d_partition(f, m);
        j["d_partition"] = {d.d[0].size(), d.d[1].size(), d.d[2].size(), d.d[3].size()};
        const auto mp = matching_partition(f, m);
        const auto fp = family_partition(f, m, mp);
        j["m1"] = mp.m1.size();
        j["m2"] = mp.m2.size();
        j["apex_vertices"] = mp.apex_vertices();
        j["e_partition"] = {fp.e[0].size(), fp.e[1].size(), fp.e[2].size(), fp.e[3].size()};
    } else {
        j["d_partition"] = nullptr;
        j["m1"] = nullptr;
        j["m2"] = nullptr;
        j["apex_vertices"] = nullptr;
        j["e_partition"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string analysis_to_text(const Family& f) {
    const auto j = Json::parse(analysis_to_json(f));
    std::ostringstream out;
    auto list = [](const Json& a) {
        std::string s;
        for (const auto& v : a) s += (s.empty() ? "" : " ") + v.dump();
        return s.empty() ? std::string("-") : s;
    };
    out << "n            " << j["n"] << '\n';
    out << "edges        " << j["edges"] << '\n';
    out << "k            " << (j["k"].is_string() ? j["k"].get<std::string>() : j["k"].dump()) << '\n';
    out << "linear       " << (j["linear"].get<bool>() ? "yes" : "no") << '\n';
    out << "max degree   " << j["max_degree"] << '\n';
    out << "nu           " << j["nu"] << '\n';
    out << "matching     " << list(j["matching"]) << '\n';
    out << "S_F          " << list(j["s_f"]) << '\n';
    out << "k1           " << j["k1"] << '\n';
    out << "nested       " << list(j["nested_sequence"]) << '\n';
    if (!j["d_partition"].is_null()) {
        out << "D0..D3       " << list(j["d_partition"]) << '\n';
        out << "M1 M2        " << j["m1"] << ' ' << j["m2"] << '\n';
        out << "E1..E4       " << list(j["e_partition"]) << '\n';
    }
    return out.str();
}

std::string sweep_to_json(const SweepReport& report) {
    Json j;
    j["schema"] = kSweepSchema;
    j["max_vertices"] = report.options.max_vertices;
    j["max_edges"] = report.options.max_edges;
    j["isomorphism_rejection"] = report.options.isomorphism_rejection;
    j["families"] = report.families;
    j["violation_count"] = report.violation_count();
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"id", v.bound_id},
                                  {"family", Json::parse(v.family_json)},
                                  {"left", to_string(v.left)},
                                  {"right", to_string(v.right)}});
    j["violations"] = std::move(violations);
    Json stats = Json::object();
    for (const auto& id : record_ids()) {
        auto it = report.stats.find(id);
        const BoundStats st = it == report.stats.end() ? BoundStats{} : it->second;
        stats[id] = Json{{"applicable", st.applicable}, {"holds", st.holds}, {"tight", st.tight}, {"violated", st.violated}};
    }
    j["stats"] = std::move(stats);
    Json witnesses = Json::object();
    for (const auto& [id, list] : report.tight_witnesses) {
        Json arr = Json::array();
        for (const auto& w : list) arr.push_back(Json::parse(w));
        witnesses[id] = std::move(arr);
    }
    j["tight_witnesses"] = std::move(witnesses);
    j["oracle"] = Json{{"checked", report.options.oracle_checks},
                       {"nu_mismatches", report.nu_mismatches},
                       {"sf_mismatches", report.sf_mismatches},
                       {"examples", report.mismatch_examples}};
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepReport& report) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& row : report.rows) out += csv_row(row.family_hash, row.record);
    return out;
}

std::string unique8_to_json(const Unique8Result& r) {
    Json j;
    j["schema"] = kConfigSchema;
    j["prop"] = "d2ab-unique";
    j["candidates"] = r.candidates;
    j["linear_candidates"] = r.linear_candidates;
    j["survivors"] = r.survivors;
    Json classes = Json::array();
    for (const auto& c : r.classes) classes.push_back(edges_array(c));
    j["classes"] = std::move(classes);
    j["matches_listed"] = r.classes.size() == 1 && r.classes[0] == pair_configuration_key(listed_eight_edge_configuration());
    return j.dump(2) + "\n";
}

std::string sevens_to_json(const Sevens& r, std::uint64_t budget) {
    Json j;
    j["schema"] = kConfigSchema;
    j["prop"] = "remark777";
    j["status"] = to_string(r.status);
    j["budget"] = budget;
    j["nodes"] = r.nodes;
    j["selection_classes"] = r.selection_classes;
    j["classes_finished"] = r.classes_finished;
    j["frontier"] = r.frontier;
    j["survivors"] = r.survivors;
    Json examples = Json::array();
    for (const auto& e : r.survivor_examples) examples.push_back(edges_array(e));
    j["survivor_examples"] = std::move(examples);
    return j.dump(2) + "\n";
}

}  // namespace linhyp
