#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "revcore/action.hpp"

using namespace revcore;
using namespace fixtures;

namespace {

// Valid one-generator biactions on n states: commuting (left, right) pairs.
std::vector<FiniteBiAction> one_generator_biactions(int n) {
  std::vector<FiniteBiAction> out;
  for (const Endo& l : all_endos(n))
    for (const Endo& r : all_endos(n)) {
      if (compose(l, r) != compose(r, l)) continue;
      out.push_back(make_biaction(free_monoid({"g"}), state_names(n), {l}, {r}));
    }
  return out;
}

bool is_bijective_map(const std::vector<int>& f, int target_size) {
  if (static_cast<int>(f.size()) != target_size) return false;
  std::vector<char> seen(f.size(), 0);
  for (int v : f) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

TEST_CASE("biaction validation and invertibility flags") {
  SUBCASE("swap is invertible on both sides") {
    FiniteBiAction a = make_left_action(free_monoid({"g"}), {"s0", "s1"}, {{1, 0}});
    SubActionFlags flags = validate_biaction(a);
    CHECK(flags.semi_invertible);
    CHECK(flags.invertible_left);
    CHECK(flags.invertible_right);
  }
  SUBCASE("the sink machine is semi-invertible through its trivial side") {
    SubActionFlags flags = validate_biaction(sink_machine());
    CHECK(flags.semi_invertible);
    CHECK_FALSE(flags.invertible_left);
    CHECK(flags.invertible_right);
  }
  SUBCASE("non-commuting sides are rejected") {
    FiniteBiAction a = make_biaction(free_monoid({"a"}), state_names(3),
                                     {{1, 2, 0}}, {{1, 0, 2}});
    CHECK_THROWS_AS(validate_biaction(a), invalid_input);
  }
  SUBCASE("range errors carry the state name") {
    FiniteBiAction a = make_left_action(free_monoid({"a"}), {"s0", "s1"}, {{1, 5}});
    CHECK_THROWS_WITH_AS(validate_biaction(a), doctest::Contains("s1"), invalid_input);
  }
}

TEST_CASE("semi-invertibility is a transition-monoid condition, not a generator one") {
  // States are pairs (x,y) indexed 2x+y. Generator a swaps x on the left and
  // collapses y on the right; generator b collapses x on the left and swaps y
  // on the right. Each generator is bijective on one side, but the product ab
  // is bijective on neither.
  FiniteBiAction a = make_biaction(free_monoid({"a", "b"}), state_names(4),
                                   {{2, 3, 0, 1}, {0, 1, 0, 1}},
                                   {{0, 0, 2, 2}, {1, 0, 3, 2}});
  SubActionFlags flags = validate_biaction(a);
  CHECK_FALSE(flags.semi_invertible);
}

TEST_CASE("twisted equivariance") {
  FiniteBiAction tail = cycle_with_tail();
  FiniteBiAction c3 = cycle_machine(3, "i");

  CHECK(is_equivariant(identity_endo(4), tail, tail));
  CHECK(is_equivariant({0, 1, 2, 2}, tail, c3));
  CHECK_FALSE(is_equivariant({0, 1, 2, 1}, tail, c3));

  CHECK_THROWS_AS(is_equivariant({0, 1, 2}, tail, c3), invalid_input);
  FiniteBiAction other = cycle_machine(3, "j");
  CHECK_THROWS_AS(is_equivariant({0, 1, 2, 2}, tail, other), invalid_input);
}

TEST_CASE("equivariance on generators agrees with the full transition monoid") {
  SUBCASE("exhaustive on two-state one-generator biactions") {
    std::vector<FiniteBiAction> pool = one_generator_biactions(2);
    for (const auto& a : pool)
      for (const auto& b : pool)
        for (const Endo& f : all_endos(2))
          CHECK(is_equivariant(f, a, b) == is_equivariant_full(f, a, b));
  }
  SUBCASE("random biactions with two generators and up to four states") {
    std::mt19937 rng(20240811);
    int done = 0;
    while (done < 60) {
      std::uniform_int_distribution<int> size_dist(1, 4);
      int n = size_dist(rng);
      FiniteBiAction a = make_biaction(free_monoid({"a", "b"}), state_names(n),
                                       {random_endo(rng, n), random_endo(rng, n)},
                                       {random_endo(rng, n), random_endo(rng, n)});
      FiniteBiAction b = make_biaction(free_monoid({"a", "b"}), state_names(n),
                                       {random_endo(rng, n), random_endo(rng, n)},
                                       {random_endo(rng, n), random_endo(rng, n)});
      try {
        validate_biaction(a);
        validate_biaction(b);
      } catch (const invalid_input&) {
        continue;
      }
      ++done;
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> f(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) f[i] = random_endo(rng, n)[0];
        CHECK(is_equivariant(f, a, b) == is_equivariant_full(f, a, b));
      }
    }
  }
}

TEST_CASE("products and coproducts") {
  SUBCASE("product with a point is the identity up to renaming") {
    FiniteBiAction a = swap_machine();
    FiniteBiAction one = singleton(a.monoid);
    FiniteBiAction p = product(a, one);
    REQUIRE(p.size() == a.size());
    CHECK(p.left == a.left);
    CHECK(p.right == a.right);
  }
  SUBCASE("C2 x C3 is a six-cycle") {
    FiniteBiAction p = product(cycle_machine(2), cycle_machine(3));
    REQUIRE(p.size() == 6);
    // the orbit of state 0 exhausts the carrier
    std::vector<char> seen(6, 0);
    int s = 0;
    for (int steps = 0; steps < 6; ++steps) {
      CHECK_FALSE(seen[s]);
      seen[s] = 1;
      s = p.left[0][s];
    }
    CHECK(s == 0);
  }
  SUBCASE("C2 + C1") {
    FiniteBiAction c = coproduct(cycle_machine(2), cycle_machine(1));
    REQUIRE(c.size() == 3);
    CHECK(c.left[0] == Endo{1, 0, 2});
  }
  SUBCASE("monoid mismatch") {
    CHECK_THROWS_AS(product(cycle_machine(2, "i"), cycle_machine(2, "j")), invalid_input);
  }
}

TEST_CASE("function-set actions") {
  FiniteBiAction m = sink_machine();
  FiniteBiAction fs = function_set_action(m, m);
  REQUIRE(fs.size() == 4);
  CHECK(validate_biaction(fs).semi_invertible == false);

  SUBCASE("the centralizer of [A,B] is the set of equivariant maps") {
    std::vector<int> fixed = centralizer(fs);
    std::vector<EquivariantMap> maps = enumerate_equivariant_maps(m, m);
    REQUIRE(maps.size() == 2);
    REQUIRE(fixed.size() == 2);
    // function index encodes the value tuple base |B|
    for (std::size_t i = 0; i < maps.size(); ++i) {
      int idx = maps[i].map[0] * 2 + maps[i].map[1];
      CHECK(fixed[i] == idx);
    }
  }
  SUBCASE("size bound") {
    CHECK_THROWS_AS(function_set_action(m, m, 3), invalid_input);
  }
}

TEST_CASE("centralizers") {
  MonoidPresentation p = free_monoid({"i"});
  CHECK(centralizer(make_trivial_action(p, state_names(3))) == std::vector<int>{0, 1, 2});
  CHECK(centralizer(sink_machine()) == std::vector<int>{1});
  CHECK(centralizer(swap_machine()) == std::vector<int>{});
}

TEST_CASE("equivariant map enumeration") {
  SUBCASE("self-maps of a three-cycle are its rotations") {
    FiniteBiAction c3 = cycle_machine(3);
    std::vector<EquivariantMap> maps = enumerate_equivariant_maps(c3, c3);
    REQUIRE(maps.size() == 3);
    for (const auto& m : maps) CHECK(is_bijective_map(m.map, 3));
  }
  SUBCASE("no maps from C2 to C3") {
    FiniteBiAction c2 = cycle_machine(2);
    FiniteBiAction c3 = cycle_machine(3);
    c3.monoid = c2.monoid;
    CHECK(enumerate_equivariant_maps(c2, c3).empty());
  }
  SUBCASE("maps from a point match the centralizer") {
    FiniteBiAction b = sink_machine();
    FiniteBiAction pt = singleton(b.monoid);
    std::vector<EquivariantMap> maps = enumerate_equivariant_maps(pt, b);
    std::vector<int> fix = centralizer(b);
    REQUIRE(maps.size() == fix.size());
    for (std::size_t i = 0; i < maps.size(); ++i) CHECK(maps[i].map[0] == fix[i]);
  }
}

TEST_CASE("degenerate carriers") {
  MonoidPresentation p = free_monoid({"i"});
  FiniteBiAction empty = make_left_action(p, {}, {Endo{}});
  FiniteBiAction b = sink_machine();
  validate_biaction(empty);
  CHECK(enumerate_equivariant_maps(empty, b).size() == 1);
  CHECK(enumerate_equivariant_maps(b, empty).empty());
  CHECK(enumerate_equivariant_maps(empty, empty).size() == 1);
  CHECK(function_set_action(b, empty).size() == 0);
}

TEST_CASE("currying") {
  SUBCASE("singletons") {
    MonoidPresentation p = free_monoid({"i"});
    FiniteBiAction one = singleton(p);
    std::vector<int> f = {0};
    CHECK(curry_map(one, one, one, f) == std::vector<int>{0});
    CHECK(uncurry_map(one, one, one, {0}) == f);
  }
  SUBCASE("round trip on random maps") {
    std::mt19937 rng(77);
    MonoidPresentation p = free_monoid({"i"});
    FiniteBiAction a = make_trivial_action(p, state_names(2, "a"));
    FiniteBiAction b = make_trivial_action(p, state_names(2, "b"));
    FiniteBiAction c = make_trivial_action(p, state_names(3, "c"));
    std::uniform_int_distribution<int> dist(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> f(4);
      for (auto& v : f) v = dist(rng);
      CHECK(uncurry_map(a, b, c, curry_map(a, b, c, f)) == f);
    }
  }
  SUBCASE("curry preserves the number of equivariant maps") {
    FiniteBiAction m = sink_machine();
    FiniteBiAction prod = product(m, m);
    FiniteBiAction fs = function_set_action(m, m);
    std::vector<EquivariantMap> direct = enumerate_equivariant_maps(prod, m);
    std::vector<EquivariantMap> curried = enumerate_equivariant_maps(m, fs);
    CHECK(direct.size() == curried.size());
    // curry sends equivariant maps to equivariant maps and back
    for (const auto& f : direct)
      CHECK(is_equivariant(curry_map(m, m, m, f.map), m, fs));
    for (const auto& g : curried)
      CHECK(is_equivariant(uncurry_map(m, m, m, g.map), prod, m));
  }
}

TEST_CASE("group collapse") {
  MonoidPresentation z2 = cyclic_table(2);
  SUBCASE("trivial right side leaves the left action alone") {
    FiniteBiAction a = make_left_action(z2, {"s0", "s1"}, {{0, 1}, {1, 0}});
    FiniteBiAction mu = group_collapse(a);
    CHECK(mu.left == a.left);
    CHECK(mu.right_trivial());
  }
  SUBCASE("right regular action becomes a left action") {
    FiniteBiAction a = make_right_action(z2, {"e", "g"}, {{0, 1}, {1, 0}});
    FiniteBiAction mu = group_collapse(a);
    CHECK(validate_biaction(mu).invertible_left);
    CHECK(mu.left[1] == Endo{1, 0});
  }
  SUBCASE("swap against swap cancels") {
    FiniteBiAction a = make_biaction(z2, {"s0", "s1"}, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
    FiniteBiAction mu = group_collapse(a);
    CHECK(mu.left[1] == Endo{0, 1});
  }
  SUBCASE("non-groups are rejected") {
    MonoidPresentation m2;
    m2.kind = MonoidKind::FiniteTable;
    m2.generators = {"e", "t"};
    m2.table = {{0, 1}, {1, 1}};  // t has no inverse
    FiniteBiAction a = make_left_action(m2, {"s0", "s1"}, {{0, 1}, {1, 1}});
    CHECK_THROWS_AS(group_collapse(a), invalid_input);
  }
}

TEST_CASE("composites through a semi-invertible middle stay equivariant") {
  std::vector<FiniteBiAction> pool = one_generator_biactions(2);
  std::vector<FiniteBiAction> semi;
  for (const auto& b : pool)
    if (validate_biaction(b).semi_invertible) semi.push_back(b);
  for (const auto& a : pool)
    for (const auto& b : semi)
      for (const auto& c : pool)
        for (const auto& f : enumerate_equivariant_maps(a, b))
          for (const auto& g : enumerate_equivariant_maps(b, c)) {
            EquivariantMap gf = compose_maps(g, f);
            CHECK(gf.verified);
          }
}

TEST_CASE("bijective equivariant maps between semi-invertible actions invert") {
  std::vector<FiniteBiAction> semi;
  for (const auto& b : one_generator_biactions(3))
    if (validate_biaction(b).semi_invertible) semi.push_back(b);
  std::mt19937 rng(404);
  std::uniform_int_distribution<std::size_t> pick(0, semi.size() - 1);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const FiniteBiAction& a = semi[pick(rng)];
    const FiniteBiAction& b = semi[pick(rng)];
    for (const auto& f : enumerate_equivariant_maps(a, b)) {
      if (!is_bijective_map(f.map, b.size())) continue;
      std::vector<int> inv(f.map.size());
      for (int s = 0; s < a.size(); ++s) inv[f.map[s]] = s;
      CHECK(is_equivariant(inv, b, a));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("induced function-set maps of equivariant maps are equivariant") {
  FiniteBiAction m = sink_machine();
  std::vector<EquivariantMap> self_maps = enumerate_equivariant_maps(m, m);
  FiniteBiAction fs = function_set_action(m, m);
  REQUIRE(self_maps.size() == 2);
  for (const auto& f : self_maps)
    for (const auto& h : self_maps) {
      // g |-> h o g o f on the materialized function carrier
      std::vector<int> induced(static_cast<std::size_t>(fs.size()));
      for (int gi = 0; gi < fs.size(); ++gi) {
        std::vector<int> g = {gi / 2, gi % 2};
        induced[gi] = h.map[g[f.map[0]]] * 2 + h.map[g[f.map[1]]];
      }
      CHECK(is_equivariant(induced, fs, fs));
    }
}
