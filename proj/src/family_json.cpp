#include "linhyp/family_json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace linhyp {

namespace {

void append_edge(std::string& out, const Edge& e) {
    out += '[';
    bool first = true;
    for (auto v : e) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
    }
    out += ']';
}

std::size_t as_count(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw FormatError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

}  // namespace

std::string edges_to_json(std::span<const Edge> edges) {
    std::string out = "[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ", ";
        append_edge(out, edges[i]);
    }
    out += ']';
    return out;
}

std::string to_json(const Family& f) {
    std::string out = "{\"k\": ";
    out += f.uniformity() ? std::to_string(*f.uniformity()) : std::string("\"mixed\"");
    out += ", \"n\": " + std::to_string(f.n()) + ", \"edges\": ";
    out += edges_to_json(f.edges());
    out += '}';
    return out;
}

Family family_from_json(std::string_view text, ReadMode mode) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("family must be a JSON object");
    for (const char* key : {"k", "n", "edges"})
        if (!j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");

    Uniformity k;
    if (j["k"].is_string()) {
        if (j["k"].get<std::string>() != "mixed") throw FormatError("k must be a positive integer or \"mixed\"");
        k = std::nullopt;
    } else {
        k = as_count(j["k"], "k");
        if (*k == 0) throw FormatError("k must be positive");
    }
    const std::size_t n = as_count(j["n"], "n");
    if (!j["edges"].is_array()) throw FormatError("edges must be an array");

    std::vector<std::vector<VertexId>> raw;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.empty()) throw FormatError("each edge must be a non-empty array");
        std::vector<VertexId> members;
        for (const auto& v : item) {
            const std::size_t id = as_count(v, "vertex");
            if (id >= n) throw FormatError("vertex " + std::to_string(id) + " out of range for n=" + std::to_string(n));
            members.push_back(static_cast<VertexId>(id));
        }
        if (mode == ReadMode::strict) {
            if (std::adjacent_find(members.begin(), members.end(), std::greater_equal<>{}) != members.end())
                throw FormatError("edge members must be strictly increasing");
        } else {
            std::sort(members.begin(), members.end());
            if (std::adjacent_find(members.begin(), members.end()) != members.end())
                throw FormatError("edge has a repeated vertex");
        }
        if (k && members.size() != *k) throw FormatError("edge size does not match k");
        raw.push_back(std::move(members));
    }
    if (mode == ReadMode::strict) {
        if (std::adjacent_find(raw.begin(), raw.end(), std::greater_equal<>{}) != raw.end())
            throw FormatError("edges must be strictly increasing in lexicographic order");
    } else {
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    }

    EdgeList edges;
    edges.reserve(raw.size());
    for (auto& m : raw) edges.emplace_back(std::move(m));
    try {
        return Family(n, std::move(edges), k);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Family read_family_file(const std::string& path, ReadMode mode) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return family_from_json(buf.str(), mode);
}

std::string family_hash(const Family& f) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json(f)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace linhyp
