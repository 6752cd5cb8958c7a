#ifndef REVCORE_ATTRACTOR_HPP
#define REVCORE_ATTRACTOR_HPP

#include "revcore/action.hpp"

namespace revcore {

// Basin membership: a state must reach every component (All) or at least one
// component (Any).
enum class ReachMode { All, Any };

struct AttractorDecomposition {
  std::vector<std::vector<int>> components;  // ordered by least state, members ascending
  std::vector<int> basin;                    // ascending
  std::vector<FiniteBiAction> component_actions;
  std::vector<bool> periodic;
};

// Minimal nonempty forward-invariant subsets of a left-only machine over a
// free (or free commutative) monoid: the sink components of the transition
// graph, plus the basin of states that can be driven into them.
AttractorDecomposition attractor_decomposition(const FiniteBiAction& a,
                                               ReachMode mode = ReachMode::All);

// A component is periodic when its reversible core is the whole component,
// i.e. every generator acts on it bijectively. A double-inversion isomorphism
// witness is computed as an independent certificate and cross-checked.
bool is_periodic(const FiniteBiAction& component_action);

}  // namespace revcore

#endif
