#include "revcore/monoid.hpp"

#include <algorithm>
#include <map>

namespace revcore {

Endo identity_endo(int n) {
  Endo f(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) f[a] = a;
  return f;
}

bool is_identity_endo(const Endo& f) {
  for (int a = 0; a < static_cast<int>(f.size()); ++a)
    if (f[a] != a) return false;
  return true;
}

bool is_bijection(const Endo& f) {
  std::vector<char> seen(f.size(), 0);
  for (int v : f) {
    if (v < 0 || v >= static_cast<int>(f.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Endo compose(const Endo& f, const Endo& g) {
  Endo h(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) h[a] = f[g[a]];
  return h;
}

Endo inverse_endo(const Endo& f) {
  Endo inv(f.size());
  for (int a = 0; a < static_cast<int>(f.size()); ++a) inv[f[a]] = a;
  return inv;
}

int MonoidPresentation::generator_index(const std::string& name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (generators[i] == name) return i;
  return -1;
}

int MonoidPresentation::identity_element() const {
  if (kind != MonoidKind::FiniteTable)
    throw invalid_input("identity_element: not a finite-table presentation");
  const int n = generator_count();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  throw invalid_input("finite table has no two-sided identity element");
}

void validate_presentation(const MonoidPresentation& p) {
  const int n = p.generator_count();
  for (int i = 0; i < n; ++i) {
    if (p.generators[i].empty()) throw invalid_input("empty generator name");
    for (int j = i + 1; j < n; ++j)
      if (p.generators[i] == p.generators[j])
        throw invalid_input("duplicate generator name: " + p.generators[i]);
  }
  if (p.kind != MonoidKind::FiniteTable) {
    if (!p.table.empty())
      throw invalid_input("multiplication table only allowed for finite_table");
    return;
  }
  if (static_cast<int>(p.table.size()) != n)
    throw invalid_input("multiplication table must be square over the element list");
  for (const auto& row : p.table) {
    if (static_cast<int>(row.size()) != n)
      throw invalid_input("multiplication table must be square over the element list");
    for (int v : row)
      if (v < 0 || v >= n) throw invalid_input("table entry out of range");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (p.table[p.table[i][j]][k] != p.table[i][p.table[j][k]])
          throw invalid_input("multiplication table is not associative at (" +
                              p.generators[i] + "," + p.generators[j] + "," +
                              p.generators[k] + ")");
  if (p.unit) p.identity_element();  // throws when absent
}

Word reduce_word(const MonoidPresentation& p, const std::vector<std::string>& letters) {
  std::vector<int> idx;
  idx.reserve(letters.size());
  for (const auto& name : letters) {
    int i = p.generator_index(name);
    if (i < 0) throw invalid_input("unknown generator name: " + name);
    idx.push_back(i);
  }
  Word w;
  w.kind = p.kind;
  switch (p.kind) {
    case MonoidKind::Free:
      if (idx.empty() && !p.unit)
        throw invalid_input("empty word needs a unit");
      w.letters = std::move(idx);
      break;
    case MonoidKind::FreeCommutative: {
      if (idx.empty() && !p.unit)
        throw invalid_input("empty word needs a unit");
      w.exponents.assign(p.generators.size(), 0);
      for (int i : idx) ++w.exponents[i];
      break;
    }
    case MonoidKind::FiniteTable: {
      if (idx.empty()) {
        if (!p.unit) throw invalid_input("empty word needs a unit");
        w.element = p.identity_element();
      } else {
        int acc = idx[0];
        for (std::size_t i = 1; i < idx.size(); ++i) acc = p.table[acc][idx[i]];
        w.element = acc;
      }
      break;
    }
  }
  return w;
}

std::vector<std::string> word_letters(const MonoidPresentation& p, const Word& w) {
  std::vector<std::string> out;
  switch (w.kind) {
    case MonoidKind::Free:
      for (int i : w.letters) out.push_back(p.generators[i]);
      break;
    case MonoidKind::FreeCommutative:
      for (int i = 0; i < p.generator_count(); ++i)
        for (int c = 0; c < w.exponents[i]; ++c) out.push_back(p.generators[i]);
      break;
    case MonoidKind::FiniteTable:
      out.push_back(p.generators[w.element]);
      break;
  }
  return out;
}

JointTransitionMonoid joint_transition_monoid(const std::vector<TrackFamily>& tracks,
                                              bool unit_flag) {
  const std::size_t ntracks = tracks.size();
  std::size_t ngens = ntracks == 0 ? 0 : tracks[0].gens.size();
  for (const auto& t : tracks)
    if (t.gens.size() != ngens)
      throw invalid_input("track families must have one endofunction per generator");
  for (const auto& t : tracks)
    for (const auto& f : t.gens)
      for (int v : f)
        if (v < 0 || v >= static_cast<int>(f.size()))
          throw invalid_input("endofunction target out of range");

  JointTransitionMonoid result;
  result.generator_of.assign(ngens, -1);
  std::map<std::vector<Endo>, int> seen;

  auto add = [&](std::vector<Endo> tup) -> int {
    auto it = seen.find(tup);
    if (it != seen.end()) return it->second;
    int id = static_cast<int>(result.elements.size());
    seen.emplace(tup, id);
    result.elements.push_back(std::move(tup));
    return id;
  };

  auto gen_tuple = [&](std::size_t g) {
    std::vector<Endo> tup;
    tup.reserve(ntracks);
    for (const auto& t : tracks) tup.push_back(t.gens[g]);
    return tup;
  };

  if (unit_flag) {
    std::vector<Endo> id_tup;
    for (const auto& t : tracks) {
      int n = t.gens.empty() ? 0 : static_cast<int>(t.gens[0].size());
      id_tup.push_back(identity_endo(n));
    }
    if (!tracks.empty()) add(std::move(id_tup));
  }
  for (std::size_t g = 0; g < ngens; ++g)
    result.generator_of[g] = add(gen_tuple(g));

  // Breadth-first closure: every element times every generator on the right.
  for (std::size_t head = 0; head < result.elements.size(); ++head) {
    for (std::size_t g = 0; g < ngens; ++g) {
      std::vector<Endo> next(ntracks);
      for (std::size_t t = 0; t < ntracks; ++t) {
        const Endo& elem = result.elements[head][t];
        const Endo& gen = tracks[t].gens[g];
        next[t] = tracks[t].side == Side::Left ? compose(elem, gen) : compose(gen, elem);
      }
      add(std::move(next));
    }
  }
  return result;
}

TransitionMonoid transition_monoid(const std::vector<Endo>& gens, bool unit_flag) {
  JointTransitionMonoid joint = joint_transition_monoid({{gens, Side::Left}}, unit_flag);
  TransitionMonoid tm;
  tm.generator_of = joint.generator_of;
  tm.elements.reserve(joint.elements.size());
  for (auto& tup : joint.elements) tm.elements.push_back(std::move(tup[0]));
  return tm;
}

bool check_relations(const MonoidPresentation& p, const std::vector<Endo>& gens, Side side) {
  if (static_cast<int>(gens.size()) != p.generator_count())
    throw invalid_input("one endofunction required per generator");
  std::size_t n = gens.empty() ? 0 : gens[0].size();
  for (const auto& f : gens) {
    if (f.size() != n) throw invalid_input("endofunctions act on carriers of different sizes");
    for (int v : f)
      if (v < 0 || v >= static_cast<int>(n))
        throw invalid_input("endofunction target out of range");
  }
  switch (p.kind) {
    case MonoidKind::Free:
      return true;
    case MonoidKind::FreeCommutative:
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
          if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
      return true;
    case MonoidKind::FiniteTable: {
      const int m = p.generator_count();
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Endo prod = side == Side::Left ? compose(gens[i], gens[j])
                                         : compose(gens[j], gens[i]);
          if (gens[p.table[i][j]] != prod) return false;
        }
      if (p.unit && !is_identity_endo(gens[p.identity_element()])) return false;
      return true;
    }
  }
  return false;
}

}  // namespace revcore
