#ifndef REVCORE_IO_HPP
#define REVCORE_IO_HPP

#include <optional>
#include <string>

#include "revcore/action.hpp"
#include "revcore/burnside.hpp"

namespace revcore {

// Action files are strict JSON: the exact fields below and nothing else.
//
// {
//   "monoid": { "kind": "free" | "free_commutative" | "finite_table",
//               "generators": [...],
//               "unit": true,            // optional, default true
//               "table": [[...], ...] }, // finite_table only
//   "carrier": ["x0", ...],
//   "left":  { "<gen>": { "<state>": "<state>", ... }, ... },  // optional, default trivial
//   "right": { ... }                                           // optional, default trivial
// }
FiniteBiAction parse_action_json(const std::string& text, const std::string& origin);
FiniteBiAction load_action_file(const std::string& path);
std::string serialize_action(const FiniteBiAction& a);

// Map files reference two action files (paths resolved relative to the map
// file's directory) and give a total assignment on the source carrier:
// { "source": "a.json", "target": "b.json", "map": { "x0": "y0", ... } }
struct MapFileData {
  FiniteBiAction source;
  FiniteBiAction target;
  std::vector<int> map;
};
MapFileData load_map_file(const std::string& path);
std::string serialize_map(const FiniteBiAction& source, const FiniteBiAction& target,
                          const std::vector<int>& map, const std::string& source_path,
                          const std::string& target_path);

// Graphviz export of one side of an action: one labeled edge per state and
// generator, emitted in (state, generator) order; states in the reversible
// core (when the opposite side is trivial) are double-circled.
std::string export_dot(const FiniteBiAction& a, std::optional<Side> side = std::nullopt);

// Burnside element grammar:  INT '*' '[' INT+ ']' ('+' ...)  |  '0'
// The bracket lists the lower-triangular HNF entries in row-major order.
BurnsideElement parse_burnside(const std::string& text);
std::string format_burnside(const BurnsideElement& e);

// Whitespace-separated generator names; capped at 10^4 letters.
Word parse_word_text(const MonoidPresentation& p, const std::string& text);

}  // namespace revcore

#endif
