// JSON instances and results. Scalars travel as "p/q" or "p" strings;
// integer JSON numbers are accepted on input.
//
//   { "vertices": [ids], "edges": [[u, v], ...],
//     "drawings": [ { "name": str, "pos": { "<id>": ["x", "y"], ... } }, ... ] }
#pragma once

#include "compaug/augment.hpp"
#include "compaug/graph.hpp"
#include "compaug/linf_path.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compaug {

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws FormatError on malformed JSON, missing positions or bad graphs.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

/// Canonical form: ids ascending, edges as [smaller, larger] sorted, two
/// space indentation. parse_instance(emit_instance(x)) re-emits byte for byte.
std::string emit_instance(const Instance& instance);

/// The input document plus "added_vertices", "added_edges" and "report".
std::string emit_result(const Instance& instance, const CompatibleResult& result);

/// The augmented drawings of an emitted result as a plain instance.
Instance parse_result_as_instance(std::string_view text);

/// A JSON array of integer points [[x, y, ...], ...]; labels are positions.
std::vector<GridPoint> parse_points(std::string_view text);

}  // namespace compaug
