#include "revcore/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "revcore/inverse.hpp"

namespace revcore {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw invalid_input(origin + ": " + what);
}

void expect_fields(const ordered_json& obj, const std::string& origin,
                   const std::string& where, const std::vector<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const auto& name : allowed) known = known || it.key() == name;
    if (!known) fail(origin, where + ": unknown field \"" + it.key() + "\"");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Endo> parse_side(const ordered_json& obj, const std::string& origin,
                             const std::string& where, const FiniteBiAction& a) {
  if (!obj.is_object()) fail(origin, where + ": expected an object");
  std::vector<Endo> fam(a.monoid.generators.size(), Endo());
  std::vector<char> seen_gen(a.monoid.generators.size(), 0);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    int g = a.monoid.generator_index(it.key());
    if (g < 0) fail(origin, where + ": unknown generator \"" + it.key() + "\"");
    if (seen_gen[g]) fail(origin, where + ": duplicate generator \"" + it.key() + "\"");
    seen_gen[g] = 1;
    const ordered_json& entries = it.value();
    if (!entries.is_object())
      fail(origin, where + "." + it.key() + ": expected an object");
    Endo f(static_cast<std::size_t>(a.size()), -1);
    for (auto st = entries.begin(); st != entries.end(); ++st) {
      int s = a.state_index(st.key());
      if (s < 0) fail(origin, where + "." + it.key() + ": unknown state \"" + st.key() + "\"");
      if (f[s] >= 0) fail(origin, where + "." + it.key() + ": duplicate state \"" + st.key() + "\"");
      if (!st.value().is_string())
        fail(origin, where + "." + it.key() + "." + st.key() + ": expected a state name");
      int t = a.state_index(st.value().get<std::string>());
      if (t < 0)
        fail(origin, where + "." + it.key() + "." + st.key() + ": unknown target state \"" +
                         st.value().get<std::string>() + "\"");
      f[s] = t;
    }
    for (int s = 0; s < a.size(); ++s)
      if (f[s] < 0)
        fail(origin, where + "." + it.key() + ": no image for state \"" + a.carrier[s] + "\"");
    fam[g] = std::move(f);
  }
  for (std::size_t g = 0; g < fam.size(); ++g)
    if (!seen_gen[g])
      fail(origin, where + ": missing generator \"" + a.monoid.generators[g] + "\"");
  return fam;
}

}  // namespace

FiniteBiAction parse_action_json(const std::string& text, const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!doc.is_object()) fail(origin, "expected a JSON object");
  expect_fields(doc, origin, "top level", {"monoid", "carrier", "left", "right"});
  if (!doc.contains("monoid")) fail(origin, "missing field \"monoid\"");
  if (!doc.contains("carrier")) fail(origin, "missing field \"carrier\"");

  const ordered_json& mon = doc["monoid"];
  if (!mon.is_object()) fail(origin, "monoid: expected an object");
  expect_fields(mon, origin, "monoid", {"kind", "generators", "unit", "table"});
  if (!mon.contains("kind") || !mon["kind"].is_string())
    fail(origin, "monoid.kind: expected a string");
  if (!mon.contains("generators") || !mon["generators"].is_array())
    fail(origin, "monoid.generators: expected an array");

  MonoidPresentation p;
  std::string kind = mon["kind"].get<std::string>();
  if (kind == "free")
    p.kind = MonoidKind::Free;
  else if (kind == "free_commutative")
    p.kind = MonoidKind::FreeCommutative;
  else if (kind == "finite_table")
    p.kind = MonoidKind::FiniteTable;
  else
    fail(origin, "monoid.kind: expected free, free_commutative or finite_table");
  for (const auto& g : mon["generators"]) {
    if (!g.is_string()) fail(origin, "monoid.generators: expected strings");
    p.generators.push_back(g.get<std::string>());
  }
  if (mon.contains("unit")) {
    if (!mon["unit"].is_boolean()) fail(origin, "monoid.unit: expected a boolean");
    p.unit = mon["unit"].get<bool>();
  }
  if (p.kind == MonoidKind::FiniteTable) {
    if (!mon.contains("table") || !mon["table"].is_array())
      fail(origin, "monoid.table: expected an array of rows");
    for (const auto& row : mon["table"]) {
      if (!row.is_array()) fail(origin, "monoid.table: expected an array of rows");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) fail(origin, "monoid.table: expected integer entries");
        r.push_back(v.get<int>());
      }
      p.table.push_back(std::move(r));
    }
  } else if (mon.contains("table")) {
    fail(origin, "monoid.table: only allowed for finite_table");
  }

  FiniteBiAction a;
  a.monoid = std::move(p);
  if (!doc["carrier"].is_array()) fail(origin, "carrier: expected an array");
  for (const auto& s : doc["carrier"]) {
    if (!s.is_string()) fail(origin, "carrier: expected state names");
    a.carrier.push_back(s.get<std::string>());
  }
  a.left.assign(a.monoid.generators.size(), identity_endo(a.size()));
  a.right = a.left;
  if (doc.contains("left")) a.left = parse_side(doc["left"], origin, "left", a);
  if (doc.contains("right")) a.right = parse_side(doc["right"], origin, "right", a);

  try {
    validate_biaction(a);
  } catch (const invalid_input& e) {
    fail(origin, e.what());
  }
  return a;
}

FiniteBiAction load_action_file(const std::string& path) {
  return parse_action_json(read_file(path), path);
}

std::string serialize_action(const FiniteBiAction& a) {
  ordered_json mon;
  mon["kind"] = a.monoid.kind == MonoidKind::Free              ? "free"
                : a.monoid.kind == MonoidKind::FreeCommutative ? "free_commutative"
                                                               : "finite_table";
  mon["generators"] = a.monoid.generators;
  mon["unit"] = a.monoid.unit;
  if (a.monoid.kind == MonoidKind::FiniteTable) mon["table"] = a.monoid.table;

  auto side = [&](const std::vector<Endo>& fam) {
    ordered_json out = ordered_json::object();
    for (std::size_t g = 0; g < fam.size(); ++g) {
      ordered_json entries = ordered_json::object();
      for (int s = 0; s < a.size(); ++s) entries[a.carrier[s]] = a.carrier[fam[g][s]];
      out[a.monoid.generators[g]] = std::move(entries);
    }
    return out;
  };

  ordered_json doc;
  doc["monoid"] = std::move(mon);
  doc["carrier"] = a.carrier;
  doc["left"] = side(a.left);
  doc["right"] = side(a.right);
  return doc.dump(2) + "\n";
}

MapFileData load_map_file(const std::string& path) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(read_file(path));
  } catch (const ordered_json::parse_error& e) {
    fail(path, e.what());
  }
  if (!doc.is_object()) fail(path, "expected a JSON object");
  expect_fields(doc, path, "top level", {"source", "target", "map"});
  for (const char* field : {"source", "target"})
    if (!doc.contains(field) || !doc[field].is_string())
      fail(path, std::string(field) + ": expected a path");
  if (!doc.contains("map") || !doc["map"].is_object()) fail(path, "map: expected an object");

  std::filesystem::path base = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  MapFileData data;
  data.source = load_action_file(resolve(doc["source"].get<std::string>()));
  data.target = load_action_file(resolve(doc["target"].get<std::string>()));
  data.map.assign(static_cast<std::size_t>(data.source.size()), -1);
  for (auto it = doc["map"].begin(); it != doc["map"].end(); ++it) {
    int s = data.source.state_index(it.key());
    if (s < 0) fail(path, "map: unknown source state \"" + it.key() + "\"");
    if (data.map[s] >= 0) fail(path, "map: duplicate source state \"" + it.key() + "\"");
    if (!it.value().is_string()) fail(path, "map: expected state names");
    int t = data.target.state_index(it.value().get<std::string>());
    if (t < 0) fail(path, "map: unknown target state \"" + it.value().get<std::string>() + "\"");
    data.map[s] = t;
  }
  for (int s = 0; s < data.source.size(); ++s)
    if (data.map[s] < 0)
      fail(path, "map: no image for state \"" + data.source.carrier[s] + "\"");
  return data;
}

std::string serialize_map(const FiniteBiAction& source, const FiniteBiAction& target,
                          const std::vector<int>& map, const std::string& source_path,
                          const std::string& target_path) {
  ordered_json doc;
  doc["source"] = source_path;
  doc["target"] = target_path;
  ordered_json entries = ordered_json::object();
  for (int s = 0; s < source.size(); ++s)
    entries[source.carrier[s]] = target.carrier[map[s]];
  doc["map"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string export_dot(const FiniteBiAction& a, std::optional<Side> side) {
  Side chosen;
  if (side.has_value())
    chosen = *side;
  else if (a.right_trivial())
    chosen = Side::Left;
  else if (a.left_trivial())
    chosen = Side::Right;
  else
    throw invalid_input("two-sided action: choose a side to render");

  bool core_known = chosen == Side::Left ? a.right_trivial() : a.left_trivial();
  std::vector<char> in_core(static_cast<std::size_t>(a.size()), 0);
  if (core_known)
    for (int s : reversible_core(a, chosen)) in_core[s] = 1;

  auto quoted = [](const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };

  std::ostringstream os;
  os << "digraph action {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (int s = 0; s < a.size(); ++s) {
    os << "  " << quoted(a.carrier[s]);
    if (in_core[s]) os << " [peripheries=2]";
    os << ";\n";
  }
  const std::vector<Endo>& fam = chosen == Side::Left ? a.left : a.right;
  for (int s = 0; s < a.size(); ++s)
    for (std::size_t g = 0; g < fam.size(); ++g)
      os << "  " << quoted(a.carrier[s]) << " -> " << quoted(a.carrier[fam[g][s]])
         << " [label=" << quoted(a.monoid.generators[g]) << "];\n";
  os << "}\n";
  return os.str();
}

BurnsideElement parse_burnside(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else if (c == '*' || c == '[' || c == ']' || c == '+') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      tokens.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw invalid_input("empty Burnside element");

  auto parse_int = [](const std::string& tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw invalid_input("expected an integer, got \"" + tok + "\"");
    }
    if (pos != tok.size()) throw invalid_input("expected an integer, got \"" + tok + "\"");
    return v;
  };

  if (tokens.size() == 1 && tokens[0] == "0") return burnside_zero(1);

  BurnsideElement acc;
  bool first = true;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!first) {
      if (tokens[i] != "+") throw invalid_input("expected '+' between terms");
      ++i;
    }
    if (i >= tokens.size()) throw invalid_input("trailing '+' in Burnside element");
    long long coeff = parse_int(tokens[i++]);
    if (i >= tokens.size() || tokens[i] != "*") throw invalid_input("expected '*' after coefficient");
    ++i;
    if (i >= tokens.size() || tokens[i] != "[") throw invalid_input("expected '[' after '*'");
    ++i;
    std::vector<long long> entries;
    while (i < tokens.size() && tokens[i] != "]") entries.push_back(parse_int(tokens[i++]));
    if (i >= tokens.size()) throw invalid_input("missing ']' in Burnside element");
    ++i;
    if (entries.empty()) throw invalid_input("empty class bracket");

    // k(k+1)/2 lower-triangular entries determine the rank.
    int k = 0;
    while (k * (k + 1) / 2 < static_cast<int>(entries.size())) ++k;
    if (k * (k + 1) / 2 != static_cast<int>(entries.size()))
      throw invalid_input("class bracket is not a triangular number of entries");

    LatticeClass cls;
    cls.rank = k;
    cls.hnf.assign(static_cast<std::size_t>(k),
                   std::vector<long long>(static_cast<std::size_t>(k), 0));
    std::size_t e = 0;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c <= r; ++c) cls.hnf[r][c] = entries[e++];
    cls.index = 1;
    for (int r = 0; r < k; ++r) {
      if (cls.hnf[r][r] <= 0) throw invalid_input("class diagonal entries must be positive");
      if (__builtin_mul_overflow(cls.index, cls.hnf[r][r], &cls.index))
        throw invalid_input("integer overflow in Burnside arithmetic");
      for (int c = 0; c < r; ++c)
        if (cls.hnf[r][c] < 0 || cls.hnf[r][c] >= cls.hnf[r][r])
          throw invalid_input("class entries below the diagonal must be reduced");
    }

    BurnsideElement term = burnside_single(std::move(cls), coeff);
    acc = first ? std::move(term) : burnside_add(acc, term);
    first = false;
  }
  return acc;
}

std::string format_burnside(const BurnsideElement& e) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [cls, coeff] : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << coeff << "*[";
    bool fe = true;
    for (int r = 0; r < cls.rank; ++r)
      for (int c = 0; c <= r; ++c) {
        if (!fe) os << ' ';
        fe = false;
        os << cls.hnf[r][c];
      }
    os << ']';
  }
  return os.str();
}

Word parse_word_text(const MonoidPresentation& p, const std::string& text) {
  std::vector<std::string> letters;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) letters.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) letters.push_back(std::move(cur));
  if (letters.size() > 10000) throw invalid_input("word longer than 10^4 letters");
  return reduce_word(p, letters);
}

}  // namespace revcore
