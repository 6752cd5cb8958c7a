#include "revcore/action.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace revcore {

namespace {

bool side_trivial(const std::vector<Endo>& fam) {
  for (const auto& f : fam)
    if (!is_identity_endo(f)) return false;
  return true;
}

void require_same_monoid(const FiniteBiAction& a, const FiniteBiAction& b) {
  if (!(a.monoid == b.monoid)) throw invalid_input("actions live over different monoids");
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

bool FiniteBiAction::left_trivial() const { return side_trivial(left); }
bool FiniteBiAction::right_trivial() const { return side_trivial(right); }

int FiniteBiAction::state_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (carrier[i] == name) return i;
  return -1;
}

FiniteBiAction make_trivial_action(MonoidPresentation m, std::vector<std::string> carrier) {
  FiniteBiAction a;
  a.monoid = std::move(m);
  a.carrier = std::move(carrier);
  a.left.assign(a.monoid.generators.size(), identity_endo(a.size()));
  a.right = a.left;
  return a;
}

FiniteBiAction make_left_action(MonoidPresentation m, std::vector<std::string> carrier,
                                std::vector<Endo> left) {
  FiniteBiAction a = make_trivial_action(std::move(m), std::move(carrier));
  a.left = std::move(left);
  return a;
}

FiniteBiAction make_right_action(MonoidPresentation m, std::vector<std::string> carrier,
                                 std::vector<Endo> right) {
  FiniteBiAction a = make_trivial_action(std::move(m), std::move(carrier));
  a.right = std::move(right);
  return a;
}

FiniteBiAction make_biaction(MonoidPresentation m, std::vector<std::string> carrier,
                             std::vector<Endo> left, std::vector<Endo> right) {
  FiniteBiAction a = make_trivial_action(std::move(m), std::move(carrier));
  a.left = std::move(left);
  a.right = std::move(right);
  return a;
}

JointTransitionMonoid biaction_monoid(const FiniteBiAction& a) {
  return joint_transition_monoid({{a.left, Side::Left}, {a.right, Side::Right}},
                                 a.monoid.unit);
}

SubActionFlags validate_biaction(const FiniteBiAction& a) {
  validate_presentation(a.monoid);
  const int ngens = a.monoid.generator_count();
  const int n = a.size();
  if (static_cast<int>(a.left.size()) != ngens ||
      static_cast<int>(a.right.size()) != ngens)
    throw invalid_input("one endofunction required per generator on each side");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.carrier[i] == a.carrier[j])
        throw invalid_input("duplicate state name: " + a.carrier[i]);
  for (int g = 0; g < ngens; ++g) {
    for (const std::vector<Endo>* fam : {&a.left, &a.right}) {
      const Endo& f = (*fam)[g];
      if (static_cast<int>(f.size()) != n)
        throw invalid_input("endofunction for generator " + a.monoid.generators[g] +
                            " has wrong arity");
      for (int s = 0; s < n; ++s)
        if (f[s] < 0 || f[s] >= n)
          throw invalid_input("target out of range for generator " +
                              a.monoid.generators[g] + " at state " + a.carrier[s]);
    }
  }
  if (!check_relations(a.monoid, a.left, Side::Left))
    throw invalid_input("left family does not respect the monoid relations");
  if (!check_relations(a.monoid, a.right, Side::Right))
    throw invalid_input("right family does not respect the monoid relations");
  for (int g = 0; g < ngens; ++g)
    for (int h = 0; h < ngens; ++h)
      for (int s = 0; s < n; ++s)
        if (a.right[h][a.left[g][s]] != a.left[g][a.right[h][s]])
          throw invalid_input("left/right commutation fails for generators (" +
                              a.monoid.generators[g] + "," + a.monoid.generators[h] +
                              ") at state " + a.carrier[s]);

  SubActionFlags flags;
  flags.invertible_left = true;
  flags.invertible_right = true;
  flags.semi_invertible = true;
  JointTransitionMonoid jm = biaction_monoid(a);
  for (const auto& elem : jm.elements) {
    bool bl = is_bijection(elem[0]);
    bool br = is_bijection(elem[1]);
    flags.invertible_left = flags.invertible_left && bl;
    flags.invertible_right = flags.invertible_right && br;
    flags.semi_invertible = flags.semi_invertible && (bl || br);
  }
  return flags;
}

bool is_equivariant(const std::vector<int>& f, const FiniteBiAction& a,
                    const FiniteBiAction& b) {
  require_same_monoid(a, b);
  if (static_cast<int>(f.size()) != a.size())
    throw invalid_input("map length does not match the source carrier");
  for (int v : f)
    if (v < 0 || v >= b.size()) throw invalid_input("map target out of range");
  for (int g = 0; g < a.monoid.generator_count(); ++g)
    for (int s = 0; s < a.size(); ++s)
      if (b.right[g][f[a.left[g][s]]] != b.left[g][f[a.right[g][s]]]) return false;
  return true;
}

bool is_equivariant_full(const std::vector<int>& f, const FiniteBiAction& a,
                         const FiniteBiAction& b) {
  require_same_monoid(a, b);
  if (static_cast<int>(f.size()) != a.size())
    throw invalid_input("map length does not match the source carrier");
  JointTransitionMonoid jm = joint_transition_monoid(
      {{a.left, Side::Left}, {a.right, Side::Right},
       {b.left, Side::Left}, {b.right, Side::Right}},
      a.monoid.unit);
  for (const auto& e : jm.elements) {
    const Endo& al = e[0];
    const Endo& ar = e[1];
    const Endo& bl = e[2];
    const Endo& br = e[3];
    for (int s = 0; s < a.size(); ++s)
      if (br[f[al[s]]] != bl[f[ar[s]]]) return false;
  }
  return true;
}

EquivariantMap make_equivariant_map(const FiniteBiAction& a, const FiniteBiAction& b,
                                    std::vector<int> f) {
  if (!is_equivariant(f, a, b)) throw invalid_input("map is not equivariant");
  return EquivariantMap{a, b, std::move(f), true};
}

EquivariantMap identity_map(const FiniteBiAction& a) {
  return EquivariantMap{a, a, identity_endo(a.size()), true};
}

EquivariantMap compose_maps(const EquivariantMap& g, const EquivariantMap& f) {
  if (!(f.target == g.source)) throw invalid_input("maps are not composable");
  std::vector<int> h(f.map.size());
  for (std::size_t s = 0; s < f.map.size(); ++s) h[s] = g.map[f.map[s]];
  EquivariantMap out{f.source, g.target, std::move(h), false};
  out.verified = is_equivariant(out.map, out.source, out.target);
  return out;
}

FiniteBiAction product(const FiniteBiAction& a, const FiniteBiAction& b) {
  require_same_monoid(a, b);
  FiniteBiAction p;
  p.monoid = a.monoid;
  const int nb = b.size();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < nb; ++j)
      p.carrier.push_back("(" + a.carrier[i] + "," + b.carrier[j] + ")");
  const int ngens = a.monoid.generator_count();
  p.left.assign(ngens, Endo(p.carrier.size()));
  p.right.assign(ngens, Endo(p.carrier.size()));
  for (int g = 0; g < ngens; ++g)
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < nb; ++j) {
        p.left[g][i * nb + j] = a.left[g][i] * nb + b.left[g][j];
        p.right[g][i * nb + j] = a.right[g][i] * nb + b.right[g][j];
      }
  return p;
}

FiniteBiAction coproduct(const FiniteBiAction& a, const FiniteBiAction& b) {
  require_same_monoid(a, b);
  FiniteBiAction c;
  c.monoid = a.monoid;
  for (const auto& s : a.carrier) c.carrier.push_back("0:" + s);
  for (const auto& s : b.carrier) c.carrier.push_back("1:" + s);
  const int na = a.size();
  const int ngens = a.monoid.generator_count();
  c.left.assign(ngens, Endo(c.carrier.size()));
  c.right.assign(ngens, Endo(c.carrier.size()));
  for (int g = 0; g < ngens; ++g) {
    for (int i = 0; i < na; ++i) {
      c.left[g][i] = a.left[g][i];
      c.right[g][i] = a.right[g][i];
    }
    for (int j = 0; j < b.size(); ++j) {
      c.left[g][na + j] = na + b.left[g][j];
      c.right[g][na + j] = na + b.right[g][j];
    }
  }
  return c;
}

std::uint64_t funcset_bound() {
  const char* env = std::getenv("REVCORE_MAX_FUNCSET");
  if (env == nullptr || *env == '\0') return 1000000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0')
    throw invalid_input("REVCORE_MAX_FUNCSET is not a number");
  return v;
}

FiniteBiAction function_set_action(const FiniteBiAction& a, const FiniteBiAction& b,
                                   std::optional<std::uint64_t> bound) {
  require_same_monoid(a, b);
  const std::uint64_t cap = bound.value_or(funcset_bound());
  const std::uint64_t count =
      checked_pow(static_cast<std::uint64_t>(b.size()),
                  static_cast<std::uint64_t>(a.size()), cap);
  if (count > cap)
    throw invalid_input("function set larger than the configured bound");

  const int na = a.size();
  const int nb = b.size();
  const int nf = static_cast<int>(count);

  // Function index <-> value tuple, f(a0) as the most significant digit.
  std::vector<std::vector<int>> vals(static_cast<std::size_t>(nf));
  {
    std::vector<int> cur(static_cast<std::size_t>(na), 0);
    for (int idx = 0; idx < nf; ++idx) {
      vals[idx] = cur;
      for (int pos = na - 1; pos >= 0; --pos) {
        if (++cur[pos] < nb) break;
        cur[pos] = 0;
      }
    }
  }
  auto index_of = [&](const std::vector<int>& v) {
    long long idx = 0;
    for (int x : v) idx = idx * nb + x;
    return static_cast<int>(idx);
  };

  FiniteBiAction fs;
  fs.monoid = a.monoid;
  for (int i = 0; i < nf; ++i) fs.carrier.push_back("f" + std::to_string(i));
  const int ngens = a.monoid.generator_count();
  fs.left.assign(ngens, Endo(static_cast<std::size_t>(nf)));
  fs.right.assign(ngens, Endo(static_cast<std::size_t>(nf)));
  std::vector<int> out(static_cast<std::size_t>(na));
  for (int g = 0; g < ngens; ++g)
    for (int i = 0; i < nf; ++i) {
      for (int s = 0; s < na; ++s) out[s] = b.left[g][vals[i][a.right[g][s]]];
      fs.left[g][i] = index_of(out);
      for (int s = 0; s < na; ++s) out[s] = b.right[g][vals[i][a.left[g][s]]];
      fs.right[g][i] = index_of(out);
    }
  return fs;
}

std::vector<int> centralizer(const FiniteBiAction& a) {
  JointTransitionMonoid jm = biaction_monoid(a);
  std::vector<int> result;
  for (int s = 0; s < a.size(); ++s) {
    bool central = true;
    for (const auto& e : jm.elements)
      if (e[1][s] != e[0][s]) {
        central = false;
        break;
      }
    if (central) result.push_back(s);
  }
  return result;
}

std::vector<EquivariantMap> enumerate_equivariant_maps(
    const FiniteBiAction& a, const FiniteBiAction& b,
    std::optional<std::uint64_t> bound) {
  require_same_monoid(a, b);
  const std::uint64_t cap = bound.value_or(funcset_bound());
  const std::uint64_t count =
      checked_pow(static_cast<std::uint64_t>(b.size()),
                  static_cast<std::uint64_t>(a.size()), cap);
  if (count > cap)
    throw invalid_input("function set larger than the configured bound");

  std::vector<EquivariantMap> result;
  if (a.size() == 0) {
    result.push_back(EquivariantMap{a, b, {}, true});
    return result;
  }
  if (b.size() == 0) return result;

  std::vector<int> f(static_cast<std::size_t>(a.size()), 0);
  for (std::uint64_t it = 0; it < count; ++it) {
    if (is_equivariant(f, a, b)) result.push_back(EquivariantMap{a, b, f, true});
    for (int pos = a.size() - 1; pos >= 0; --pos) {
      if (++f[pos] < b.size()) break;
      f[pos] = 0;
    }
  }
  return result;
}

std::vector<int> curry_map(const FiniteBiAction& a, const FiniteBiAction& b,
                           const FiniteBiAction& c, const std::vector<int>& f) {
  const int na = a.size();
  const int nb = b.size();
  const int nc = c.size();
  if (static_cast<int>(f.size()) != na * nb)
    throw invalid_input("map length does not match the product carrier");
  std::vector<int> g(static_cast<std::size_t>(na));
  for (int i = 0; i < na; ++i) {
    long long idx = 0;
    for (int j = 0; j < nb; ++j) {
      int v = f[i * nb + j];
      if (v < 0 || v >= nc) throw invalid_input("map target out of range");
      idx = idx * nc + v;
    }
    g[i] = static_cast<int>(idx);
  }
  return g;
}

std::vector<int> uncurry_map(const FiniteBiAction& a, const FiniteBiAction& b,
                             const FiniteBiAction& c, const std::vector<int>& g) {
  const int na = a.size();
  const int nb = b.size();
  const int nc = c.size();
  if (static_cast<int>(g.size()) != na)
    throw invalid_input("map length does not match the source carrier");
  std::vector<int> f(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na; ++i) {
    long long idx = g[i];
    for (int j = nb - 1; j >= 0; --j) {
      f[i * nb + j] = static_cast<int>(idx % nc);
      idx /= nc;
    }
    if (idx != 0) throw invalid_input("function index out of range");
  }
  return f;
}

FiniteBiAction group_collapse(const FiniteBiAction& a) {
  if (a.monoid.kind != MonoidKind::FiniteTable || !a.monoid.unit)
    throw invalid_input("group collapse needs a finite-table monoid with a unit");
  const int m = a.monoid.generator_count();
  const int e = a.monoid.identity_element();
  std::vector<int> inv(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      if (a.monoid.table[i][j] == e && a.monoid.table[j][i] == e) {
        inv[i] = j;
        break;
      }
    if (inv[i] < 0)
      throw invalid_input("element " + a.monoid.generators[i] + " has no inverse");
  }
  FiniteBiAction out = make_trivial_action(a.monoid, a.carrier);
  for (int g = 0; g < m; ++g) out.left[g] = compose(a.left[g], a.right[inv[g]]);
  return out;
}

}  // namespace revcore
