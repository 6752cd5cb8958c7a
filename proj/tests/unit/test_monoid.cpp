#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "revcore/monoid.hpp"

using namespace revcore;
using namespace fixtures;

TEST_CASE("word reduction to canonical forms") {
  MonoidPresentation fr = free_monoid({"a", "b"});
  Word w = reduce_word(fr, {"a", "b"});
  CHECK(w.letters == std::vector<int>{0, 1});

  MonoidPresentation fc = free_commutative({"a", "b"});
  Word v = reduce_word(fc, {"b", "a", "b"});
  CHECK(v.exponents == std::vector<int>{1, 2});

  MonoidPresentation z2 = cyclic_table(2);
  Word u = reduce_word(z2, {"g1", "g1"});
  CHECK(u.element == 0);

  CHECK_THROWS_AS(reduce_word(fr, {"c"}), invalid_input);
}

TEST_CASE("word reduction is idempotent") {
  for (const MonoidPresentation& p :
       {free_monoid({"a", "b"}), free_commutative({"a", "b"})}) {
    std::vector<std::vector<std::string>> raws = {
        {}, {"a"}, {"b", "a"}, {"a", "b", "b", "a"}, {"b", "b", "b"}};
    for (const auto& raw : raws) {
      Word once = reduce_word(p, raw);
      CHECK(reduce_word(p, word_letters(p, once)) == once);
    }
  }
  MonoidPresentation z3 = cyclic_table(3);
  Word once = reduce_word(z3, {"g1", "g2", "g1"});
  CHECK(reduce_word(z3, word_letters(z3, once)) == once);
}

TEST_CASE("commutative reduction ignores letter order") {
  MonoidPresentation fc = free_commutative({"a", "b"});
  std::vector<std::string> alphabet = {"a", "b"};
  // all word pairs up to length 4 over two generators
  for (int len = 0; len <= 4; ++len) {
    long long count = 1;
    for (int i = 0; i < len; ++i) count *= 2;
    for (long long u = 0; u < count; ++u)
      for (long long v = 0; v < count; ++v) {
        std::vector<std::string> uv, vu;
        for (int i = 0; i < len; ++i) uv.push_back(alphabet[(u >> i) & 1]);
        for (int i = 0; i < len; ++i) uv.push_back(alphabet[(v >> i) & 1]);
        for (int i = 0; i < len; ++i) vu.push_back(alphabet[(v >> i) & 1]);
        for (int i = 0; i < len; ++i) vu.push_back(alphabet[(u >> i) & 1]);
        CHECK(reduce_word(fc, uv) == reduce_word(fc, vu));
      }
  }
}

TEST_CASE("transition monoid closure") {
  SUBCASE("an involution generates a two-element monoid") {
    TransitionMonoid tm = transition_monoid({{1, 0}}, true);
    REQUIRE(tm.elements.size() == 2);
    CHECK(tm.elements[0] == Endo{0, 1});
    CHECK(tm.elements[1] == Endo{1, 0});
  }
  SUBCASE("a sink map generates an idempotent") {
    TransitionMonoid tm = transition_monoid({{1, 1}}, true);
    REQUIRE(tm.elements.size() == 2);
    Endo t = tm.elements[1];
    CHECK(compose(t, t) == t);
  }
  SUBCASE("powers of a three-cycle") {
    TransitionMonoid tm = transition_monoid({{1, 2, 0}}, true);
    CHECK(tm.elements.size() == 3);
  }
  SUBCASE("semigroup closure omits the unseeded identity") {
    TransitionMonoid tm = transition_monoid({{1, 1}}, false);
    CHECK(tm.elements.size() == 1);
  }
}

TEST_CASE("transition monoid is closed under composition") {
  for (const std::vector<Endo>& gens :
       {std::vector<Endo>{{1, 2, 0, 0}}, std::vector<Endo>{{1, 0, 2}, {0, 0, 1}},
        std::vector<Endo>{{1, 1}, {0, 0}}}) {
    TransitionMonoid tm = transition_monoid(gens, true);
    for (const Endo& x : tm.elements)
      for (const Endo& y : tm.elements) {
        Endo xy = compose(x, y);
        CHECK(std::find(tm.elements.begin(), tm.elements.end(), xy) != tm.elements.end());
      }
  }
}

TEST_CASE("transition monoid size ignores generator order") {
  std::vector<Endo> gens = {{1, 2, 0}, {1, 0, 2}, {0, 0, 0}};
  std::vector<Endo> permuted = {gens[2], gens[0], gens[1]};
  CHECK(transition_monoid(gens, true).elements.size() ==
        transition_monoid(permuted, true).elements.size());
}

TEST_CASE("relation checking per presentation kind") {
  MonoidPresentation fr = free_monoid({"a", "b"});
  CHECK(check_relations(fr, {{1, 2, 0}, {1, 0, 2}}, Side::Left));

  MonoidPresentation fc = free_commutative({"a", "b"});
  CHECK_FALSE(check_relations(fc, {{1, 2, 0}, {1, 0, 2}}, Side::Left));
  CHECK(check_relations(fc, {{1, 2, 0}, {2, 0, 1}}, Side::Left));

  MonoidPresentation z2 = cyclic_table(2);
  CHECK(check_relations(z2, {{0, 1}, {1, 0}}, Side::Left));
  CHECK(check_relations(z2, {{0, 1}, {1, 0}}, Side::Right));
  CHECK_FALSE(check_relations(z2, {{1, 0}, {0, 1}}, Side::Left));

  CHECK_THROWS_AS(check_relations(fr, {{0, 1}}, Side::Left), invalid_input);
}

TEST_CASE("finite table validation") {
  MonoidPresentation z3 = cyclic_table(3);
  validate_presentation(z3);

  MonoidPresentation bad = z3;
  bad.table[1][2] = 1;  // breaks associativity
  CHECK_THROWS_AS(validate_presentation(bad), invalid_input);

  MonoidPresentation no_unit = cyclic_table(2);
  no_unit.table = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(validate_presentation(no_unit), invalid_input);
  no_unit.unit = false;
  validate_presentation(no_unit);

  MonoidPresentation dup = free_monoid({"a", "a"});
  CHECK_THROWS_AS(validate_presentation(dup), invalid_input);
}

TEST_CASE("joint closure tracks left and right orientations") {
  // One generator acting by a cycle on the left and a sink on the right.
  JointTransitionMonoid jm = joint_transition_monoid(
      {{{{1, 2, 0}}, Side::Left}, {{{1, 1, 1}}, Side::Right}}, true);
  for (const auto& e : jm.elements) {
    REQUIRE(e.size() == 2);
    CHECK(e[0].size() == 3);
  }
  // left track closes into the 3 cycle powers; right track into {id, sink, const}
  CHECK(jm.elements.size() >= 3);
  CHECK(jm.generator_of == std::vector<int>{1});
}
