#ifndef LINHYP_FAMILY_JSON_HPP
#define LINHYP_FAMILY_JSON_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "linhyp/hypercore.hpp"

namespace linhyp {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ReadMode {
    strict,   // reject unsorted members, unsorted edge lists and duplicates
    lenient,  // sort members and edges, drop duplicates
};

/// Serialise as {"k": 3, "n": 7, "edges": [[0,1,2], [0,3,4]]}. Mixed families
/// carry "k": "mixed". No trailing newline.
std::string to_json(const Family& f);

/// Serialise a bare sorted edge list in the same inner format.
std::string edges_to_json(std::span<const Edge> edges);

/// Parse the format written by to_json; throws FormatError.
Family family_from_json(std::string_view text, ReadMode mode = ReadMode::strict);

Family read_family_file(const std::string& path, ReadMode mode = ReadMode::strict);

/// 64-bit FNV-1a of to_json(f), rendered as 16 hex digits.
std::string family_hash(const Family& f);

}  // namespace linhyp

#endif
