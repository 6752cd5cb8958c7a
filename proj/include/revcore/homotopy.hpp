#ifndef REVCORE_HOMOTOPY_HPP
#define REVCORE_HOMOTOPY_HPP

#include <optional>

#include "revcore/inverse.hpp"

namespace revcore {

struct WeakEquivalenceCertificate {
  EquivariantMap map;
  // Position in the source core -> position in the target core.
  std::vector<int> core_restriction;
  bool verdict = false;
};

// A map between one-sided actions over a unital monoid is a weak equivalence
// when its restriction to the reversible cores is a bijection.
WeakEquivalenceCertificate is_weak_equivalence(const EquivariantMap& f);

// Backtracking search for a bijective equivariant map; returns the
// lexicographically least witness. Candidates are pruned by comparing the
// multisets of orbit sizes when both actions are one-sided on the same side.
std::optional<EquivariantMap> find_isomorphism(const FiniteBiAction& a,
                                               const FiniteBiAction& b);

// Pushout of  A' <-u- S -f-> B  for A', B with trivial right sides: the
// quotient of A' + B by the congruence generated by u(s) ~ f(s). Quotient
// blocks are ordered and named by their least member in the disjoint union.
struct PushoutResult {
  FiniteBiAction object;
  EquivariantMap f_prime;  // A' -> object
  EquivariantMap u_prime;  // B  -> object
};
PushoutResult pushout(const EquivariantMap& u, const EquivariantMap& f);

// Pullback of  X -g-> Y <-v- Y'  for left-only actions: pairs that agree in Y,
// in lexicographic order, with the componentwise action.
struct PullbackResult {
  FiniteBiAction object;
  EquivariantMap g_prime;  // object -> Y'
  EquivariantMap v_prime;  // object -> X
};
PullbackResult pullback(const EquivariantMap& g, const EquivariantMap& v);

struct Factorization {
  EquivariantMap u;  // injective weak equivalence
  EquivariantMap v;  // surjective weak equivalence
  bool composite_equals = false;
};

struct FactorizationResult {
  Factorization factorization;
  FiniteBiAction object;    // the middle object
  EquivariantMap u_tilde;   // injective corner from the target into the middle
};

// Factors a weak equivalence w : M -> N (both with trivial right sides) as
// w = v o u through the pushout of the core inclusion against w restricted
// to the core.
FactorizationResult factorize_weq(const EquivariantMap& w);

}  // namespace revcore

#endif
