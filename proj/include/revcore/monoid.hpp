#ifndef REVCORE_MONOID_HPP
#define REVCORE_MONOID_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace revcore {

// An endofunction on {0,...,n-1}; f[a] is the image of a.
using Endo = std::vector<int>;

enum class Side { Left, Right };
enum class MonoidKind { Free, FreeCommutative, FiniteTable };

// Contract violation in user-supplied data. The CLI maps this to exit code 2.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Endo identity_endo(int n);
bool is_identity_endo(const Endo& f);
bool is_bijection(const Endo& f);

// compose(f, g)[a] = f[g[a]]  (g applied first).
Endo compose(const Endo& f, const Endo& g);
Endo inverse_endo(const Endo& f);  // f must be a bijection

// A finitely generated monoid or semigroup.
//
// Free / FreeCommutative: `generators` are free letters and `table` is empty.
// FiniteTable: the element set is `generators` itself and `table` holds the
// full multiplication law, table[i][j] = i*j. `unit` distinguishes monoids
// from semigroups; a FiniteTable monoid must contain a two-sided identity.
//
// Composition conventions used throughout the project, for a word
// w = g1 g2 ... gk over the generators:
//   left families:  L(w) = L(g1) o L(g2) o ... o L(gk)   (L(gk) applied first)
//   right families: (a)R(w) applies R(g1) first, then R(g2), ...
// Extending a word on the right by a letter g therefore acts as
//   left track:  compose(elem, L(g))
//   right track: compose(R(g), elem)
struct MonoidPresentation {
  MonoidKind kind = MonoidKind::Free;
  std::vector<std::string> generators;
  std::vector<std::vector<int>> table;
  bool unit = true;

  bool operator==(const MonoidPresentation&) const = default;

  int generator_count() const { return static_cast<int>(generators.size()); }
  int generator_index(const std::string& name) const;  // -1 when unknown
  // FiniteTable with unit: index of the two-sided identity element.
  int identity_element() const;
};

// Checks generator-name and table invariants; throws invalid_input.
void validate_presentation(const MonoidPresentation& p);

// Canonical form of a word over a presentation. Exactly one of the three
// payloads is meaningful, selected by `kind`.
struct Word {
  MonoidKind kind = MonoidKind::Free;
  std::vector<int> letters;    // Free: generator indices
  std::vector<int> exponents;  // FreeCommutative: one count per generator
  int element = -1;            // FiniteTable: element index

  bool operator==(const Word&) const = default;
};

Word reduce_word(const MonoidPresentation& p, const std::vector<std::string>& letters);

// A raw spelling of a canonical word (used to test reduction idempotence).
std::vector<std::string> word_letters(const MonoidPresentation& p, const Word& w);

// The closure of a family of endofunctions under composition: the image of
// the generated monoid/semigroup inside End(carrier). Elements are stored in
// breadth-first discovery order (the identity first when `unit` is set, then
// generators in declared order, then longer products).
struct TransitionMonoid {
  std::vector<Endo> elements;
  std::vector<int> generator_of;  // generator index -> element index
  bool closed = true;
};

TransitionMonoid transition_monoid(const std::vector<Endo>& gens, bool unit_flag);

// True iff assigning gens[i] to generator i extends to a homomorphism into
// End(carrier) on the given side. Free: always. FreeCommutative: all
// generator pairs commute. FiniteTable: the full table is respected, and the
// identity element maps to the identity function when `unit` is set.
bool check_relations(const MonoidPresentation& p, const std::vector<Endo>& gens, Side side);

// Joint closure of several parallel generator families ("tracks"): element k
// of the result is the tuple of endofunctions induced by one monoid element
// on every track at once. This is the finite quantification domain for every
// "for all i in I" condition downstream.
struct TrackFamily {
  std::vector<Endo> gens;
  Side side = Side::Left;
};

struct JointTransitionMonoid {
  std::vector<std::vector<Endo>> elements;  // [element][track]
  std::vector<int> generator_of;
};

JointTransitionMonoid joint_transition_monoid(const std::vector<TrackFamily>& tracks,
                                              bool unit_flag);

}  // namespace revcore

#endif
