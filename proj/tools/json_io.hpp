#pragma once

// JSON encoding of matrices: {"n": 4, "entries": [["q^2", "0", ...], ...]}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "qgl/catalog.hpp"

namespace qgl::cli {

using json = nlohmann::ordered_json;

json to_json(const Mat& m);
json to_json(const MatSpace& s);

/// Throws Error with the offending location prefixed by `where`.
Mat mat_from_json(const json& j, const std::string& where);
/// Reads and parses a file; "-" reads stdin.
json read_json_file(const std::string& path);
Mat read_matrix_file(const std::string& path);

/// A file holding either a bare matrix, {"a": .., "b": ..} or
/// {"c11": .., "c12": .., "c21": .., "c22": ..}.
Instance read_instance_file(const std::string& path);

/// Constant scalar from text ("2", "1/2+i"); throws when q appears.
GaussRational parse_constant(std::string_view text);

json instance_to_json(const Instance& inst);

/// Indented output with arrays of scalars kept on one line.
std::string dump_pretty(const json& j);

}  // namespace qgl::cli
