#ifndef REVCORE_TEST_HELPERS_HPP
#define REVCORE_TEST_HELPERS_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "revcore/action.hpp"

namespace fixtures {

using namespace revcore;

inline MonoidPresentation free_monoid(std::vector<std::string> gens, bool unit = true) {
  MonoidPresentation p;
  p.kind = MonoidKind::Free;
  p.generators = std::move(gens);
  p.unit = unit;
  return p;
}

inline MonoidPresentation free_commutative(std::vector<std::string> gens, bool unit = true) {
  MonoidPresentation p;
  p.kind = MonoidKind::FreeCommutative;
  p.generators = std::move(gens);
  p.unit = unit;
  return p;
}

inline MonoidPresentation cyclic_table(int n) {
  MonoidPresentation p;
  p.kind = MonoidKind::FiniteTable;
  for (int i = 0; i < n; ++i) p.generators.push_back("g" + std::to_string(i));
  p.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.table[i][j] = (i + j) % n;
  return p;
}

inline std::vector<std::string> state_names(int n, const std::string& prefix = "s") {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Left-only machine over a free monoid with generators g0, g1, ...
inline FiniteBiAction left_machine(std::vector<Endo> gens, bool unit = true,
                                   MonoidKind kind = MonoidKind::Free) {
  int n = gens.empty() ? 0 : static_cast<int>(gens[0].size());
  std::vector<std::string> gnames;
  for (std::size_t i = 0; i < gens.size(); ++i) gnames.push_back("g" + std::to_string(i));
  MonoidPresentation p;
  p.kind = kind;
  p.generators = std::move(gnames);
  p.unit = unit;
  return make_left_action(std::move(p), state_names(n), std::move(gens));
}

// The two worked machines: identity-and-swap on two states, and the machine
// that funnels x0 into the fixed state x1.
inline FiniteBiAction swap_machine() {
  return make_left_action(free_monoid({"i0", "i1"}), {"x0", "x1"}, {{0, 1}, {1, 0}});
}

inline FiniteBiAction sink_machine() {
  return make_left_action(free_monoid({"i"}), {"x0", "x1"}, {{1, 1}});
}

inline FiniteBiAction cycle_machine(int k, const std::string& gen = "i") {
  Endo f(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) f[i] = (i + 1) % k;
  return make_left_action(free_monoid({gen}), state_names(k, "c"), {std::move(f)});
}

inline FiniteBiAction cycle_with_tail() {
  return make_left_action(free_monoid({"i"}), {"s0", "s1", "s2", "s3"}, {{1, 2, 0, 0}});
}

inline FiniteBiAction singleton(const MonoidPresentation& p, const std::string& name = "pt") {
  return make_trivial_action(p, {name});
}

inline std::vector<Endo> all_endos(int n) {
  std::vector<Endo> out;
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= n;
  Endo f(static_cast<std::size_t>(n), 0);
  for (long long it = 0; it < count; ++it) {
    out.push_back(f);
    for (int pos = n - 1; pos >= 0; --pos) {
      if (++f[pos] < n) break;
      f[pos] = 0;
    }
  }
  return out;
}

inline Endo random_endo(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  Endo f(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f[i] = dist(rng);
  return f;
}

// Independent oracle: counts maps h from the transition monoid T (seen as the
// right-translation action on itself) into the carrier of a trivial-right
// machine, i.e. solutions of h(t) = left_g(h(t*g)) for every element t and
// generator g. Solved as a constraint problem by backtracking with forward
// propagation; never looks at orbits or injectivity.
inline long long count_maps_from_monoid(const FiniteBiAction& a) {
  TransitionMonoid tm = transition_monoid(a.left, a.monoid.unit);
  const int nt = static_cast<int>(tm.elements.size());
  const int ngens = static_cast<int>(a.left.size());
  const int n = a.size();

  std::map<Endo, int> index;
  for (int t = 0; t < nt; ++t) index[tm.elements[t]] = t;
  std::vector<std::vector<int>> step(static_cast<std::size_t>(nt),
                                     std::vector<int>(static_cast<std::size_t>(ngens)));
  std::vector<std::vector<std::pair<int, int>>> into(static_cast<std::size_t>(nt));
  for (int t = 0; t < nt; ++t)
    for (int g = 0; g < ngens; ++g) {
      int u = index.at(compose(tm.elements[t], a.left[g]));
      step[t][g] = u;
      into[u].emplace_back(t, g);
    }

  std::vector<int> h(static_cast<std::size_t>(nt), -1);
  std::vector<int> trail;

  auto propagate = [&](int seed) -> bool {
    std::size_t head = trail.size();
    trail.push_back(seed);
    while (head < trail.size()) {
      int u = trail[head++];
      for (int g = 0; g < ngens; ++g) {
        int w = step[u][g];
        if (h[w] >= 0 && h[u] != a.left[g][h[w]]) return false;
      }
      for (auto [t, g] : into[u]) {
        int forced = a.left[g][h[u]];
        if (h[t] < 0) {
          h[t] = forced;
          trail.push_back(t);
        } else if (h[t] != forced) {
          return false;
        }
      }
    }
    return true;
  };

  long long count = 0;
  auto solve = [&](auto&& self) -> void {
    int var = -1;
    for (int t = 0; t < nt; ++t)
      if (h[t] < 0) {
        var = t;
        break;
      }
    if (var < 0) {
      ++count;
      return;
    }
    for (int value = 0; value < n; ++value) {
      std::size_t mark = trail.size();
      h[var] = value;
      if (propagate(var)) self(self);
      while (trail.size() > mark) {
        h[trail.back()] = -1;
        trail.pop_back();
      }
      h[var] = -1;
    }
  };
  if (nt == 0) return 1;
  solve(solve);
  return count;
}

}  // namespace fixtures

#endif
