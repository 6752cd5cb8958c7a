#include "revcore/attractor.hpp"

#include <algorithm>

#include "revcore/homotopy.hpp"
#include "revcore/inverse.hpp"

namespace revcore {

namespace {

// Tarjan strongly connected components over the union of all generator edges.
// Returns the component id per state; ids are renumbered so that components
// are ordered by their least state.
std::vector<int> scc_ids(const FiniteBiAction& a, int& count) {
  const int n = a.size();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next_index = 0;
  int raw_count = 0;

  struct Frame {
    int state;
    int gen;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& fr = call.back();
      if (fr.gen < static_cast<int>(a.left.size())) {
        int t = a.left[fr.gen][fr.state];
        ++fr.gen;
        if (index[t] < 0) {
          index[t] = low[t] = next_index++;
          stack.push_back(t);
          on_stack[t] = 1;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[fr.state] = std::min(low[fr.state], index[t]);
        }
      } else {
        int s = fr.state;
        call.pop_back();
        if (!call.empty())
          low[call.back().state] = std::min(low[call.back().state], low[s]);
        if (low[s] == index[s]) {
          for (;;) {
            int t = stack.back();
            stack.pop_back();
            on_stack[t] = 0;
            comp[t] = raw_count;
            if (t == s) break;
          }
          ++raw_count;
        }
      }
    }
  }

  // Renumber by least state.
  std::vector<int> renumber(static_cast<std::size_t>(raw_count), -1);
  count = 0;
  for (int s = 0; s < n; ++s)
    if (renumber[comp[s]] < 0) renumber[comp[s]] = count++;
  for (int s = 0; s < n; ++s) comp[s] = renumber[comp[s]];
  return comp;
}

}  // namespace

AttractorDecomposition attractor_decomposition(const FiniteBiAction& a, ReachMode mode) {
  if (a.monoid.kind == MonoidKind::FiniteTable)
    throw invalid_input("attractors need a free or free commutative monoid");
  if (!a.right_trivial()) throw invalid_input("attractors need a trivial right side");

  const int n = a.size();
  int ncomp = 0;
  std::vector<int> comp = scc_ids(a, ncomp);

  std::vector<char> is_sink(static_cast<std::size_t>(ncomp), 1);
  for (const Endo& f : a.left)
    for (int s = 0; s < n; ++s)
      if (comp[f[s]] != comp[s]) is_sink[comp[s]] = 0;

  AttractorDecomposition out;
  std::vector<int> sink_of_comp(static_cast<std::size_t>(ncomp), -1);
  for (int c = 0; c < ncomp; ++c)
    if (is_sink[c]) {
      sink_of_comp[c] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
  for (int s = 0; s < n; ++s)
    if (sink_of_comp[comp[s]] >= 0) out.components[sink_of_comp[comp[s]]].push_back(s);

  // Backward reachability from every attractor component.
  std::vector<std::vector<int>> preimages(static_cast<std::size_t>(n));
  for (const Endo& f : a.left)
    for (int s = 0; s < n; ++s) preimages[f[s]].push_back(s);
  std::vector<int> reach_count(static_cast<std::size_t>(n), 0);
  for (const auto& component : out.components) {
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int s : component) {
      reached[s] = 1;
      queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int p : preimages[queue[head]])
        if (!reached[p]) {
          reached[p] = 1;
          queue.push_back(p);
        }
    for (int s = 0; s < n; ++s)
      if (reached[s]) ++reach_count[s];
  }
  for (int s = 0; s < n; ++s) {
    bool in_basin = mode == ReachMode::All
                        ? reach_count[s] == static_cast<int>(out.components.size())
                        : reach_count[s] > 0;
    if (in_basin && !out.components.empty()) out.basin.push_back(s);
  }

  for (const auto& component : out.components) {
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < component.size(); ++p)
      position[component[p]] = static_cast<int>(p);
    std::vector<std::string> names;
    for (int s : component) names.push_back(a.carrier[s]);
    std::vector<Endo> left(a.left.size());
    for (std::size_t g = 0; g < a.left.size(); ++g) {
      left[g].resize(component.size());
      for (std::size_t p = 0; p < component.size(); ++p)
        left[g][p] = position[a.left[g][component[p]]];
    }
    out.component_actions.push_back(
        make_left_action(a.monoid, std::move(names), std::move(left)));
    out.periodic.push_back(is_periodic(out.component_actions.back()));
  }
  return out;
}

bool is_periodic(const FiniteBiAction& component_action) {
  std::vector<int> core = reversible_core(component_action, Side::Left);
  bool whole = static_cast<int>(core.size()) == component_action.size();

  InvertedAction once = inv_total(component_action);
  InvertedAction twice = inv_total(once.action);
  bool witness = find_isomorphism(component_action, twice.action).has_value();
  if (witness != whole)
    throw std::logic_error("double-inversion certificate disagrees with the core test");
  return whole;
}

}  // namespace revcore
