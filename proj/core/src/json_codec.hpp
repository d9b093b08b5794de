#pragma once

/// JSON (de)serialization for task files, shared by the CLI dispatcher and
/// the selftest battery.  Validation is schema-first: every object is
/// checked against its expected key set before any value is touched, and
/// every complaint carries a JSON path such as "$.payload.group.order".

#include <string>
#include <vector>

#include <json.hpp>

#include "galbrauer/complexes.hpp"
#include "galbrauer/homspace.hpp"

namespace galbrauer::codec {

using Json = nlohmann::ordered_json;

/// Strictness switch plus the warning sink used in lenient mode.
struct ParseContext {
  bool lenient = false;
  std::size_t order_cap = FiniteGroup::kDefaultOrderCap;
  std::vector<std::string> warnings;
};

/// Wraps the library parser; throws "malformed-json" on syntax errors.
Json parse_text(const std::string& text);

/// Object shape check: required keys present, unknown keys rejected
/// (strict) or recorded as warnings (lenient).
void check_keys(const Json& obj, const std::string& path,
                const std::vector<std::string>& required,
                const std::vector<std::string>& optional, ParseContext& ctx);

Int parse_int(const Json& v, const std::string& path);
std::size_t parse_index(const Json& v, const std::string& path);

/// Row-major rectangular matrix; [] is the 0 x 0 matrix.
IntMatrix parse_matrix(const Json& v, const std::string& path);
/// Same, but the expected shape is known from context, which disambiguates
/// matrices without columns.
IntMatrix parse_matrix_shaped(const Json& v, const std::string& path,
                              std::size_t rows, std::size_t cols);

FiniteGroup parse_group(const Json& v, const std::string& path,
                        ParseContext& ctx);
GammaModule parse_module(const Json& v, const std::string& path,
                         const FiniteGroup& gamma, ParseContext& ctx);
ModComplex parse_complex(const Json& v, const std::string& path,
                         const FiniteGroup& gamma, ParseContext& ctx);
LinearGroupData parse_group_data(const Json& v, const std::string& path,
                                 ParseContext& ctx);
StabilizerData parse_stabilizer_data(const Json& v, const std::string& path,
                                     const LinearGroupData& g,
                                     ParseContext& ctx);
EvalFlags parse_flags(const Json& v, const std::string& path,
                      ParseContext& ctx);

/// Numbers below 2^53 in magnitude are emitted as JSON numbers, larger
/// ones as decimal strings.
Json int_to_json(const Int& x);
Json matrix_to_json(const IntMatrix& m);
Json structure_to_json(const AbStructure& s);

Json group_to_json(const FiniteGroup& g);
Json module_to_json(const GammaModule& m);
Json complex_to_json(const ModComplex& c);
Json group_data_to_json(const LinearGroupData& g);
Json stabilizer_data_to_json(const StabilizerData& h);

} // namespace galbrauer::codec
