#include "revcore/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace revcore {

namespace {

Side nontrivial_side(const FiniteBiAction& a) {
  if (a.right_trivial()) return Side::Left;
  if (a.left_trivial()) return Side::Right;
  throw invalid_input("a one-sided action is required");
}

std::vector<int> sorted_component_sizes(const FiniteBiAction& a, Side side) {
  const std::vector<Endo>& fam = side == Side::Left ? a.left : a.right;
  std::vector<int> parent(static_cast<std::size_t>(a.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Endo& f : fam)
    for (int s = 0; s < a.size(); ++s) {
      int ra = find(s), rb = find(f[s]);
      if (ra != rb) parent[ra] = rb;
    }
  std::vector<int> count(static_cast<std::size_t>(a.size()), 0);
  for (int s = 0; s < a.size(); ++s) ++count[find(s)];
  std::vector<int> sizes;
  for (int c : count)
    if (c > 0) sizes.push_back(c);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

WeakEquivalenceCertificate is_weak_equivalence(const EquivariantMap& f) {
  if (!f.source.monoid.unit)
    throw invalid_input("weak equivalences need a unit in the monoid");
  Side sa = nontrivial_side(f.source);
  Side sb = nontrivial_side(f.target);
  std::vector<int> core_a = reversible_core(f.source, sa);
  std::vector<int> core_b = reversible_core(f.target, sb);

  std::vector<int> position(static_cast<std::size_t>(f.target.size()), -1);
  for (std::size_t p = 0; p < core_b.size(); ++p) position[core_b[p]] = static_cast<int>(p);

  WeakEquivalenceCertificate cert;
  cert.map = f;
  cert.core_restriction.resize(core_a.size());
  for (std::size_t p = 0; p < core_a.size(); ++p) {
    int image = f.map[core_a[p]];
    if (position[image] < 0)
      throw std::logic_error("equivariant map leaves the target core");
    cert.core_restriction[p] = position[image];
  }
  cert.verdict = core_a.size() == core_b.size() && is_bijection(cert.core_restriction);
  return cert;
}

std::optional<EquivariantMap> find_isomorphism(const FiniteBiAction& a,
                                               const FiniteBiAction& b) {
  if (!(a.monoid == b.monoid)) throw invalid_input("actions live over different monoids");
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n == 0) return EquivariantMap{a, b, {}, true};

  bool both_left = a.right_trivial() && b.right_trivial();
  bool both_right = a.left_trivial() && b.left_trivial();
  if (both_left || both_right) {
    Side side = both_left ? Side::Left : Side::Right;
    if (sorted_component_sizes(a, side) != sorted_component_sizes(b, side))
      return std::nullopt;
  }

  const int ngens = a.monoid.generator_count();
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  // All twisted-equivariance constraints whose three source states are
  // assigned must hold for the partial map.
  auto consistent = [&]() {
    for (int g = 0; g < ngens; ++g)
      for (int s = 0; s < n; ++s) {
        int xl = f[a.left[g][s]];
        int xr = f[a.right[g][s]];
        if (xl < 0 || xr < 0) continue;
        if (b.right[g][xl] != b.left[g][xr]) return false;
      }
    return true;
  };

  auto search = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      f[pos] = t;
      used[t] = 1;
      if (consistent() && self(self, pos + 1)) return true;
      used[t] = 0;
      f[pos] = -1;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  if (!is_equivariant(f, a, b))
    throw std::logic_error("isomorphism search produced a non-equivariant witness");
  return EquivariantMap{a, b, std::move(f), true};
}

PushoutResult pushout(const EquivariantMap& u, const EquivariantMap& f) {
  if (!(u.source == f.source)) throw invalid_input("pushout legs must share their source");
  const FiniteBiAction& ap = u.target;
  const FiniteBiAction& bp = f.target;
  if (!(ap.monoid == bp.monoid) || !(ap.monoid == u.source.monoid))
    throw invalid_input("actions live over different monoids");
  if (!ap.right_trivial() || !bp.right_trivial())
    throw invalid_input("pushout corners need trivial right sides");

  const int na = ap.size();
  const int total = na + bp.size();
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    return true;
  };

  for (int s = 0; s < u.source.size(); ++s) unite(u.map[s], na + f.map[s]);

  const int ngens = ap.monoid.generator_count();
  auto step = [&](int g, int x) {
    return x < na ? ap.left[g][x] : na + bp.left[g][x - na];
  };

  // Congruence closure: identified states must keep identified images.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g = 0; g < ngens; ++g)
      for (int x = 0; x < total; ++x) {
        int r = find(x);
        if (r != x && unite(step(g, x), step(g, r))) changed = true;
      }
  }

  std::vector<int> block(static_cast<std::size_t>(total), -1);
  std::vector<int> least;
  for (int x = 0; x < total; ++x) {
    int r = find(x);
    if (block[r] < 0) {
      block[r] = static_cast<int>(least.size());
      least.push_back(r);
    }
    block[x] = block[r];
  }

  FiniteBiAction obj;
  obj.monoid = ap.monoid;
  for (int r : least)
    obj.carrier.push_back(r < na ? "0:" + ap.carrier[r] : "1:" + bp.carrier[r - na]);
  const int nblocks = static_cast<int>(least.size());
  obj.left.assign(ngens, Endo(static_cast<std::size_t>(nblocks)));
  obj.right.assign(ngens, identity_endo(nblocks));
  for (int g = 0; g < ngens; ++g) {
    for (int bidx = 0; bidx < nblocks; ++bidx)
      obj.left[g][bidx] = block[step(g, least[bidx])];
    for (int x = 0; x < total; ++x)
      if (obj.left[g][block[x]] != block[step(g, x)])
        throw std::logic_error("quotient action is not well defined after closure");
  }

  std::vector<int> fp(static_cast<std::size_t>(na));
  for (int x = 0; x < na; ++x) fp[x] = block[x];
  std::vector<int> up(static_cast<std::size_t>(bp.size()));
  for (int x = 0; x < bp.size(); ++x) up[x] = block[na + x];

  PushoutResult out{obj, make_equivariant_map(ap, obj, std::move(fp)),
                    make_equivariant_map(bp, obj, std::move(up))};
  return out;
}

PullbackResult pullback(const EquivariantMap& g, const EquivariantMap& v) {
  const FiniteBiAction& x = g.source;
  const FiniteBiAction& yp = v.source;
  if (!(g.target == v.target)) throw invalid_input("pullback legs must share their target");
  if (!(x.monoid == yp.monoid))
    throw invalid_input("actions live over different monoids");
  if (!x.right_trivial() || !yp.right_trivial() || !g.target.right_trivial())
    throw invalid_input("pullback corners need trivial right sides");

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < yp.size(); ++j)
      if (g.map[i] == v.map[j]) pairs.emplace_back(i, j);

  FiniteBiAction obj;
  obj.monoid = x.monoid;
  for (auto [i, j] : pairs)
    obj.carrier.push_back("(" + x.carrier[i] + "," + yp.carrier[j] + ")");
  auto pair_index = [&](int i, int j) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(i, j));
    return static_cast<int>(it - pairs.begin());
  };
  const int ngens = x.monoid.generator_count();
  obj.left.assign(ngens, Endo(pairs.size()));
  obj.right.assign(ngens, identity_endo(static_cast<int>(pairs.size())));
  for (int gi = 0; gi < ngens; ++gi)
    for (std::size_t p = 0; p < pairs.size(); ++p)
      obj.left[gi][p] = pair_index(x.left[gi][pairs[p].first], yp.left[gi][pairs[p].second]);

  std::vector<int> gp(pairs.size()), vp(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    gp[p] = pairs[p].second;
    vp[p] = pairs[p].first;
  }
  return PullbackResult{obj, make_equivariant_map(obj, yp, std::move(gp)),
                        make_equivariant_map(obj, x, std::move(vp))};
}

FactorizationResult factorize_weq(const EquivariantMap& w) {
  if (!w.source.right_trivial() || !w.target.right_trivial())
    throw invalid_input("factorization needs actions with trivial right sides");
  WeakEquivalenceCertificate cert = is_weak_equivalence(w);
  if (!cert.verdict) throw invalid_input("map is not a weak equivalence");

  InvertedAction vm = inv_total(w.source);
  EquivariantMap ev = evaluate(vm);
  EquivariantMap wev = compose_maps(w, ev);

  PushoutResult po = pushout(ev, wev);
  const EquivariantMap& u = po.f_prime;        // M -> M'
  const EquivariantMap& u_tilde = po.u_prime;  // N -> M'

  auto injective = [](const std::vector<int>& m, int target_size) {
    std::vector<char> seen(static_cast<std::size_t>(target_size), 0);
    for (int v : m) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  if (!injective(u.map, po.object.size()) || !injective(u_tilde.map, po.object.size()))
    throw std::logic_error("pushout along an injective weak equivalence lost injectivity");

  // v sends a block to the image of any member under (w on M, identity on N);
  // the congruence preserves that value, which we re-check here.
  std::vector<int> vmap(static_cast<std::size_t>(po.object.size()), -1);
  auto assign = [&](int blockidx, int value) {
    if (vmap[blockidx] >= 0 && vmap[blockidx] != value)
      throw std::logic_error("pushout blocks are not constant under the factoring map");
    vmap[blockidx] = value;
  };
  for (int s = 0; s < w.source.size(); ++s) assign(u.map[s], w.map[s]);
  for (int t = 0; t < w.target.size(); ++t) assign(u_tilde.map[t], t);
  for (int v : vmap)
    if (v < 0) throw std::logic_error("pushout block missed by the factoring map");

  EquivariantMap vq = make_equivariant_map(po.object, w.target, std::move(vmap));

  EquivariantMap vu = compose_maps(vq, u);
  Factorization fact{u, vq, vu.map == w.map};
  if (!fact.composite_equals) throw std::logic_error("factorization does not compose to the input");
  if (!is_weak_equivalence(fact.u).verdict || !is_weak_equivalence(fact.v).verdict)
    throw std::logic_error("factorization legs are not weak equivalences");
  return FactorizationResult{std::move(fact), po.object, u_tilde};
}

}  // namespace revcore
