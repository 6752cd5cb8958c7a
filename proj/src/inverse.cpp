#include "revcore/inverse.hpp"

#include <algorithm>

namespace revcore {

namespace {

// Positions (not names) of the core inside the base carrier, for one family.
std::vector<int> core_of_family(const std::vector<Endo>& fam, int n, bool unit,
                                Side orientation) {
  JointTransitionMonoid jm = joint_transition_monoid({{fam, orientation}}, unit);
  std::vector<int> core;
  std::vector<char> in_orbit(static_cast<std::size_t>(n), 0);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    std::fill(in_orbit.begin(), in_orbit.end(), 0);
    std::vector<int> orbit;
    for (const auto& e : jm.elements) {
      int y = e[0][x];
      if (!in_orbit[y]) {
        in_orbit[y] = 1;
        orbit.push_back(y);
      }
    }
    bool ok = true;
    for (const auto& e : jm.elements) {
      std::fill(hit.begin(), hit.end(), 0);
      for (int y : orbit) {
        int z = e[0][y];
        if (hit[z]) {
          ok = false;
          break;
        }
        hit[z] = 1;
      }
      if (!ok) break;
    }
    if (ok) core.push_back(x);
  }
  return core;
}

Endo restrict_to_core(const Endo& f, const std::vector<int>& core,
                      const std::vector<int>& position) {
  Endo r(core.size());
  for (std::size_t p = 0; p < core.size(); ++p) {
    int image = f[core[p]];
    if (position[image] < 0)
      throw std::logic_error("generator does not map the reversible core onto itself");
    r[p] = position[image];
  }
  if (!is_bijection(r))
    throw std::logic_error("generator is not a bijection of the reversible core");
  return r;
}

}  // namespace

std::vector<int> reversible_core(const FiniteBiAction& a, Side side) {
  if (side == Side::Left) {
    if (!a.right_trivial())
      throw invalid_input("left core needs a trivial right side");
    return core_of_family(a.left, a.size(), a.monoid.unit, Side::Left);
  }
  if (!a.left_trivial())
    throw invalid_input("right core needs a trivial left side");
  return core_of_family(a.right, a.size(), a.monoid.unit, Side::Right);
}

InvertedAction invert(const FiniteBiAction& a, Side side) {
  InvertedAction out;
  out.base = a;
  out.side = side == Side::Left ? InvKind::LeftToRight : InvKind::RightToLeft;
  out.core = reversible_core(a, side);

  std::vector<int> position(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t p = 0; p < out.core.size(); ++p) position[out.core[p]] = static_cast<int>(p);

  std::vector<std::string> names;
  names.reserve(out.core.size());
  for (int x : out.core) names.push_back(a.carrier[x]);

  const std::vector<Endo>& fam = side == Side::Left ? a.left : a.right;
  std::vector<Endo> inverted;
  inverted.reserve(fam.size());
  for (const Endo& f : fam)
    inverted.push_back(inverse_endo(restrict_to_core(f, out.core, position)));

  out.action = side == Side::Left
                   ? make_right_action(a.monoid, std::move(names), std::move(inverted))
                   : make_left_action(a.monoid, std::move(names), std::move(inverted));
  return out;
}

EquivariantMap invert_map(const EquivariantMap& f, Side side) {
  InvertedAction va = invert(f.source, side);
  InvertedAction vb = invert(f.target, side);
  std::vector<int> position(static_cast<std::size_t>(f.target.size()), -1);
  for (std::size_t p = 0; p < vb.core.size(); ++p) position[vb.core[p]] = static_cast<int>(p);
  std::vector<int> restricted(va.core.size());
  for (std::size_t p = 0; p < va.core.size(); ++p) {
    int image = f.map[va.core[p]];
    if (position[image] < 0)
      throw invalid_input("restriction leaves the target core; the input map was not a valid certificate");
    restricted[p] = position[image];
  }
  if (!is_equivariant(restricted, va.action, vb.action))
    throw std::logic_error("core restriction of an equivariant map is not equivariant");
  return EquivariantMap{va.action, vb.action, std::move(restricted), true};
}

InvertedAction inv_total(const FiniteBiAction& m) {
  if (m.right_trivial()) {
    // The right-to-left pass is the identity here: a map from the monoid with
    // trivial-left self-action is freely determined by its value at 1, so the
    // realized carrier and left action are unchanged.
    InvertedAction out = invert(m, Side::Left);
    out.side = InvKind::Total;
    return out;
  }
  if (m.left_trivial()) {
    InvertedAction first = invert(m, Side::Right);
    InvertedAction second = invert(first.action, Side::Left);
    InvertedAction out;
    out.base = m;
    out.side = InvKind::Total;
    out.core.reserve(second.core.size());
    for (int p : second.core) out.core.push_back(first.core[p]);
    out.action = second.action;
    return out;
  }
  throw invalid_input("total inversion needs a one-sided action");
}

EquivariantMap evaluate(const InvertedAction& v) {
  if (!v.base.monoid.unit)
    throw invalid_input("evaluation needs a unit in the monoid");
  if (!is_equivariant(v.core, v.action, v.base))
    throw std::logic_error("core inclusion is not equivariant");
  return EquivariantMap{v.action, v.base, v.core, true};
}

}  // namespace revcore
