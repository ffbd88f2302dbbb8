#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "semiconv/semiconv.hpp"

using namespace semiconv;

namespace {

  CorpusSpec spec(CorpusKind k, std::vector<long long> p) {
    CorpusSpec c;
    c.kind   = k;
    c.params = std::move(p);
    return c;
  }

  Semigroup left_zero2() {
    return validate_cayley({"a", "b"}, {{0, 0}, {1, 1}});
  }
  Semigroup z(long long n) {
    return build(spec(CorpusKind::cyclic, {n}));
  }
  Semigroup t2() {
    return build(spec(CorpusKind::full_transformation, {2}));
  }
  Semigroup rect22() {
    return build(spec(CorpusKind::rectangular_band, {2, 2}));
  }
  // {1, a, b} with a, b left zeros and 1 the identity.
  Semigroup monoid_1ab() {
    return build(spec(CorpusKind::left_zero, {2, 1}));
  }

  std::set<std::string> labels_of(ElementSet const& A) {
    auto l = A.labels();
    return {l.begin(), l.end()};
  }

}  // namespace

TEST_CASE("validate_cayley accepts semigroups and reports the first bad triple") {
  CHECK(left_zero2().order() == 2);
  CHECK(z(3).product(1, 2) == 0);

  try {
    validate_cayley({"a", "b"}, {{0, 2}, {1, 0}});
    FAIL("expected IndexOutOfRange");
  } catch (IndexOutOfRange const& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 1);
    CHECK(e.value == 2);
  }

  // (aa)b = bb = a but a(ab) = aa = b.
  try {
    validate_cayley({"a", "b"}, {{1, 0}, {0, 0}});
    FAIL("expected NonAssociative");
  } catch (NonAssociative const& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 0);
    CHECK(e.c == 1);
  }

  CHECK_THROWS_AS(validate_cayley({"a", "a"}, {{0, 0}, {1, 1}}), DuplicateLabel);
  CHECK_THROWS_AS(validate_cayley({"a", "b"}, {{0, 0}}), MalformedTable);
  CHECK_THROWS_AS(validate_cayley({}, {}), MalformedTable);
  CHECK_THROWS_AS(validate_cayley({"a", "b"}, {{0, 0}, {1, 1}}, 1), OrderCapExceeded);
}

TEST_CASE("element sets") {
  Semigroup  s = z(5);
  ElementSet A(s, {0, 3});
  CHECK(A.size() == 2);
  CHECK(A.contains(3));
  CHECK_FALSE(A.contains(1));
  CHECK(A.first() == 0);
  CHECK_THROWS_AS(ElementSet(s).first(), EmptySet);
  CHECK_THROWS(A.insert(5));
  ElementSet B(s, {3, 4});
  CHECK((A | B).size() == 3);
  CHECK((A & B).members() == std::vector<Element>{3});
  CHECK((A - B).members() == std::vector<Element>{0});
  CHECK(ElementSet(s, {3}).is_subset_of(A));
  CHECK_THROWS_AS(A | ElementSet(z(5)), MismatchedParent);
}

TEST_CASE("product_sets") {
  Semigroup lz = left_zero2();
  CHECK(product_sets(lz.all(), lz.singleton(0)) == lz.all());
  Semigroup z3 = z(3);
  CHECK(product_sets(z3.singleton(1), z3.singleton(2)) == z3.singleton(0));
  Semigroup rb = rect22();
  CHECK(labels_of(product_sets(rb.all(), rb.singleton(rb.element("(0,0)"))))
        == std::set<std::string>{"(0,0)", "(1,0)"});
  CHECK(product_sets(rb.all(), rb.none()).empty());
  CHECK_THROWS_AS(product_sets(rb.all(), z3.all()), MismatchedParent);
}

TEST_CASE("idempotents") {
  Semigroup lz = left_zero2();
  CHECK(idempotents(lz) == lz.all());
  Semigroup z3 = z(3);
  CHECK(idempotents(z3) == z3.singleton(0));
  CHECK(labels_of(idempotents(t2())) == std::set<std::string>{"11", "12", "22"});
}

TEST_CASE("generated_subsemigroup") {
  Semigroup z6 = z(6);
  CHECK(generated_subsemigroup(z6.singleton(2)) == ElementSet(z6, {0, 2, 4}));
  Semigroup t3 = build(spec(CorpusKind::full_transformation, {3}));
  CHECK(labels_of(generated_subsemigroup(t3.singleton(t3.element("231"))))
        == std::set<std::string>{"123", "231", "312"});
  Semigroup lz = left_zero2();
  CHECK(generated_subsemigroup(lz.singleton(0)) == lz.singleton(0));
  CHECK_THROWS_AS(generated_subsemigroup(lz.none()), EmptyGenerators);
}

TEST_CASE("quotients") {
  Semigroup z3 = z(3);
  CHECK(left_quotient(1, z3.singleton(0)) == z3.singleton(2));
  CHECK(right_quotient(z3.singleton(0), 1) == z3.singleton(2));
  Semigroup lz = left_zero2();
  CHECK(left_quotient(0, lz.singleton(1)).empty());
  Semigroup rb = rect22();
  CHECK(labels_of(left_quotient(rb.element("(0,0)"), rb.singleton(rb.element("(0,1)"))))
        == std::set<std::string>{"(0,1)", "(1,1)"});
}

TEST_CASE("ideal predicates") {
  Semigroup s = t2();
  CHECK(is_ideal(ElementSet(s, {s.element("11"), s.element("22")})));
  Semigroup z3 = z(3);
  CHECK_FALSE(is_ideal(z3.singleton(0)));
  Semigroup lz = left_zero2();
  CHECK(is_right_ideal(lz.singleton(0)));
  CHECK_FALSE(is_left_ideal(lz.singleton(0)));
  CHECK_THROWS_AS(is_left_ideal(lz.none()), EmptySet);
}

TEST_CASE("simplicity") {
  CHECK(is_left_simple(left_zero2()));
  CHECK_FALSE(is_right_simple(left_zero2()));
  CHECK(is_left_simple(z(3)));
  CHECK(is_simple(z(3)));
  CHECK_FALSE(is_simple(t2()));
  Semigroup s = t2();
  // 21 21 = 12 falls outside.
  CHECK_THROWS_AS(is_left_simple(ElementSet(s, {s.element("11"), s.element("21")})),
                  NotASubsemigroup);
}

TEST_CASE("minimal one-sided ideals and the kernel on the examples") {
  Semigroup lz = left_zero2();
  REQUIRE(minimal_left_ideals(lz).size() == 1);
  CHECK(minimal_left_ideals(lz)[0] == lz.all());

  Semigroup s = t2();
  REQUIRE(minimal_left_ideals(s).size() == 1);
  CHECK(labels_of(minimal_left_ideals(s)[0]) == std::set<std::string>{"11", "22"});
  CHECK(labels_of(kernel(s)) == std::set<std::string>{"11", "22"});

  Semigroup rb = rect22();
  auto      L  = minimal_left_ideals(rb);
  REQUIRE(L.size() == 2);
  CHECK(labels_of(L[0]) == std::set<std::string>{"(0,0)", "(1,0)"});
  CHECK(labels_of(L[1]) == std::set<std::string>{"(0,1)", "(1,1)"});

  Semigroup z3 = z(3);
  CHECK(kernel(z3) == z3.all());
  Semigroup m = monoid_1ab();
  CHECK(labels_of(kernel(m)) == std::set<std::string>{"a", "b"});
}

TEST_CASE("minimal ideals match exhaustive subset enumeration") {
  auto check = [](std::string const& name, Semigroup const& s) {
    INFO(name);
    CHECK(oracle::masks(minimal_left_ideals(s)) == oracle::sorted(oracle::minimal_left_ideals(s)));
    CHECK(oracle::masks(minimal_right_ideals(s))
          == oracle::sorted(oracle::minimal_right_ideals(s)));
    auto K = oracle::minimal_ideals(s);
    REQUIRE(K.size() == 1);
    CHECK(oracle::mask(kernel(s)) == K[0]);
  };
  auto corpus = oracle::small_corpus();
  CHECK(corpus.size() >= 20);
  for (auto const& [name, s] : corpus) {
    check(name, s);
  }
  // Every semigroup table of order at most three.
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : oracle::all_semigroups(n)) {
      check("table of order " + std::to_string(n), s);
      ++count;
    }
  }
  CHECK(count == 1 + 8 + 113);
}

TEST_CASE("group_structure") {
  Semigroup      z4 = z(4);
  GroupStructure G  = group_structure(z4);
  CHECK(G.identity() == 0);
  CHECK(G.inverse(1) == 3);
  CHECK(G.power(1, 4) == 0);

  try {
    group_structure(left_zero2());
    FAIL("expected NotAGroup");
  } catch (NotAGroup const& e) {
    CHECK(e.witness == 0);
  }

  Semigroup        s  = t2();
  Element const    c1 = s.element("11");
  ElementSet const eSe = product_sets(s.singleton(c1), s.all(), s.singleton(c1));
  GroupStructure   H   = group_structure(eSe);
  CHECK(H.order() == 1);
  CHECK(H.identity() == c1);
}

TEST_CASE("structural lemmas on all small tables") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : oracle::all_semigroups(n)) {
      ElementSet const K = kernel(s);
      CHECK(is_ideal(K));
      CHECK(is_simple(K));
      K.for_each([&](Element z) {
        CHECK(product_sets(s.all(), s.singleton(z), s.all()) == K);
      });
      for (auto const& A : minimal_left_ideals(s)) {
        for (auto const& B : minimal_right_ideals(s)) {
          CHECK_NOTHROW(group_structure(product_sets(B, A)));
        }
        // Minimal left ideals are left simple; their idempotents are right
        // identities.
        CHECK(is_left_simple(A));
        idempotents(A).for_each([&](Element e) {
          A.for_each([&](Element x) { CHECK(s.product(x, e) == x); });
        });
      }
    }
  }
}
