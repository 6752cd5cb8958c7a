#ifndef REVCORE_INVERSE_HPP
#define REVCORE_INVERSE_HPP

#include "revcore/action.hpp"

namespace revcore {

enum class InvKind { LeftToRight, RightToLeft, Total };

// The reversible core of a one-sided action together with the induced action
// on it. Inverting from left to right keeps the core subset, makes the left
// side trivial and lets each generator act on the right by the inverse of its
// restricted left bijection; right to left is the mirror image.
struct InvertedAction {
  FiniteBiAction base;
  InvKind side = InvKind::LeftToRight;
  std::vector<int> core;   // ascending indices into the base carrier
  FiniteBiAction action;   // induced action on the core
};

// side Left: requires trivial right side; returns
//   { x : every transition-monoid element restricted to the orbit of x is injective }.
// side Right is the mirror statement for the right family.
std::vector<int> reversible_core(const FiniteBiAction& a, Side side);

InvertedAction invert(const FiniteBiAction& a, Side side);

// Restriction of an equivariant map to the cores, as a map between the
// inverted actions. Throws when the restriction leaves the target core,
// which signals an input that was not actually equivariant.
EquivariantMap invert_map(const EquivariantMap& f, Side side);

// Inversion of a one-sided action (left-to-right composed with right-to-left).
// A trivial-right input is inverted in a single pass; a nontrivial right-only
// input is inverted right-to-left and the resulting bijective action is
// flipped back. The result always carries a bijective right family.
InvertedAction inv_total(const FiniteBiAction& m);

// The inclusion of the core into the base carrier, certified equivariant.
// Needs a unit in the monoid.
EquivariantMap evaluate(const InvertedAction& v);

}  // namespace revcore

#endif
