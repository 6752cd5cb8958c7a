#ifndef REVCORE_ACTION_HPP
#define REVCORE_ACTION_HPP

#include <cstdint>
#include <optional>

#include "revcore/monoid.hpp"

namespace revcore {

// A finite carrier together with commuting left and right generator families.
// `left[g]` and `right[g]` are endofunctions on the carrier; a side with all
// identities is "trivial". A state machine in the classical sense is a
// biaction with trivial right side.
struct FiniteBiAction {
  MonoidPresentation monoid;
  std::vector<std::string> carrier;
  std::vector<Endo> left;
  std::vector<Endo> right;

  bool operator==(const FiniteBiAction&) const = default;

  int size() const { return static_cast<int>(carrier.size()); }
  bool left_trivial() const;
  bool right_trivial() const;
  int state_index(const std::string& name) const;  // -1 when unknown
};

FiniteBiAction make_trivial_action(MonoidPresentation m, std::vector<std::string> carrier);
FiniteBiAction make_left_action(MonoidPresentation m, std::vector<std::string> carrier,
                                std::vector<Endo> left);
FiniteBiAction make_right_action(MonoidPresentation m, std::vector<std::string> carrier,
                                 std::vector<Endo> right);
FiniteBiAction make_biaction(MonoidPresentation m, std::vector<std::string> carrier,
                             std::vector<Endo> left, std::vector<Endo> right);

// Whether, element by element of the induced transition monoid, the left
// family / right family / at least one of the two acts by bijections.
struct SubActionFlags {
  bool semi_invertible = false;
  bool invertible_left = false;
  bool invertible_right = false;
};

// Checks all structural invariants (relations per side, left/right
// commutation, ranges) and computes the invertibility flags. Throws
// invalid_input with the offending generator pair and state on violation.
SubActionFlags validate_biaction(const FiniteBiAction& a);

// The image of the monoid inside End(A) x End(A): track 0 carries the left
// family, track 1 the right family.
JointTransitionMonoid biaction_monoid(const FiniteBiAction& a);

struct EquivariantMap {
  FiniteBiAction source;
  FiniteBiAction target;
  std::vector<int> map;
  bool verified = false;
};

// Twisted equivariance on generators: for every generator i and state a,
//   B.right[i][ f[A.left[i][a]] ] == B.left[i][ f[A.right[i][a]] ].
// Checking generators suffices for valid biactions; is_equivariant_full
// quantifies over the joint transition monoid of both actions instead and is
// used to test that meta-invariant.
bool is_equivariant(const std::vector<int>& f, const FiniteBiAction& a,
                    const FiniteBiAction& b);
bool is_equivariant_full(const std::vector<int>& f, const FiniteBiAction& a,
                         const FiniteBiAction& b);

EquivariantMap make_equivariant_map(const FiniteBiAction& a, const FiniteBiAction& b,
                                    std::vector<int> f);
EquivariantMap identity_map(const FiniteBiAction& a);
EquivariantMap compose_maps(const EquivariantMap& g, const EquivariantMap& f);  // g after f

// Componentwise action on ordered pairs; carrier in lexicographic order with
// names "(a,b)".
FiniteBiAction product(const FiniteBiAction& a, const FiniteBiAction& b);
// Tagged disjoint union; names "0:a" and "1:b".
FiniteBiAction coproduct(const FiniteBiAction& a, const FiniteBiAction& b);

// Size bound for materialized function sets; REVCORE_MAX_FUNCSET overrides
// the default of 10^6.
std::uint64_t funcset_bound();

// The induced action on the set of all functions A -> B, enumerated in
// lexicographic order of value tuples and named "f0", "f1", ...
// Left action of i sends f to  b_left(i) o f o a_right(i);
// right action of i sends f to b_right(i) o f o a_left(i).
FiniteBiAction function_set_action(const FiniteBiAction& a, const FiniteBiAction& b,
                                   std::optional<std::uint64_t> bound = std::nullopt);

// { a : right(i)(a) == left(i)(a) for every transition-monoid element i }.
// For a one-sided action this is the set of fixed states.
std::vector<int> centralizer(const FiniteBiAction& a);

// All equivariant maps A -> B in lexicographic order. The project-wide
// brute-force oracle.
std::vector<EquivariantMap> enumerate_equivariant_maps(
    const FiniteBiAction& a, const FiniteBiAction& b,
    std::optional<std::uint64_t> bound = std::nullopt);

// curry: a map on the product carrier of A x B into C becomes a map from A
// into the function-set carrier of [B,C]; uncurry inverts it exactly.
std::vector<int> curry_map(const FiniteBiAction& a, const FiniteBiAction& b,
                           const FiniteBiAction& c, const std::vector<int>& f);
std::vector<int> uncurry_map(const FiniteBiAction& a, const FiniteBiAction& b,
                             const FiniteBiAction& c, const std::vector<int>& g);

// For a finite-table group: the equivalent left-only action
//   mu(g)(a) = left(g)( right(g^{-1})(a) ).
// Throws when some element has no inverse.
FiniteBiAction group_collapse(const FiniteBiAction& a);

}  // namespace revcore

#endif
