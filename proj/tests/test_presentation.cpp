#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "devissage/abelian.hpp"
#include "devissage/presentation.hpp"

using namespace devissage;

TEST_CASE("surface groups") {
  FpPresentation s0 = surface_group(0);
  CHECK(s0.rank() == 0);
  CHECK(s0.relators().empty());

  FpPresentation s2 = surface_group(2);
  CHECK(s2.rank() == 4);
  REQUIRE(s2.relators().size() == 1);
  CHECK(s2.relators()[0] == parse_word(4, "a b A B c d C D"));
  CHECK(s2.relators()[0].size() == 8);  // 4 letters per commutator, g of them
}

TEST_CASE("punctured curve groups") {
  FpPresentation p03 = punctured_curve_group(0, 3);
  CHECK(p03.rank() == 2);
  CHECK(p03.relators().empty());
  REQUIRE(p03.ramification().size() == 3);
  CHECK(*p03.ramification_word("p1") == parse_word(2, "a"));
  CHECK(*p03.ramification_word("p2") == parse_word(2, "b"));
  CHECK(*p03.ramification_word("p3") == parse_word(2, "B A"));

  FpPresentation p11 = punctured_curve_group(1, 1);
  CHECK(p11.rank() == 2);
  CHECK(*p11.ramification_word("p1") == parse_word(2, "b a B A"));

  FpPresentation p01 = punctured_curve_group(0, 1);
  CHECK(p01.rank() == 0);
  CHECK(p01.ramification_word("p1")->empty());

  FpPresentation p22 = punctured_curve_group(2, 2);
  CHECK(p22.rank() == 5);
  CHECK(*p22.ramification_word("p1") == parse_word(5, "e"));
  CHECK(*p22.ramification_word("p2") == parse_word(5, "E d c D C b a B A"));

  CHECK_THROWS_AS(punctured_curve_group(1, 0), std::invalid_argument);
}

TEST_CASE("filling punctures") {
  FpPresentation p = punctured_curve_group(0, 3);
  FpPresentation q = fill_puncture(p, "p3");
  REQUIRE(q.relators().size() == 1);
  CHECK(q.relators()[0] == parse_word(2, "B A"));
  CHECK(q.ramification().size() == 2);
  CHECK(q.ramification_word("p3") == nullptr);
  CHECK_THROWS_AS(fill_puncture(p, "p9"), std::invalid_argument);
  // A filled puncture cannot be filled again.
  CHECK_THROWS_AS(fill_puncture(q, "p3"), std::invalid_argument);
}

TEST_CASE("tietze elimination") {
  // <a, b | b> = <a>.
  FpPresentation p(2, {parse_word(2, "b")});
  FpPresentation q = tietze_eliminate(p);
  CHECK(q.rank() == 1);
  CHECK(q.relators().empty());

  // <a, b, c | c (ab)^-1> = <a, b>: c was redundant.
  FpPresentation r(3, {parse_word(3, "c B A")});
  FpPresentation s = tietze_eliminate(r);
  CHECK(s.rank() == 2);
  CHECK(s.relators().empty());

  // The surface relator has every generator twice: nothing to eliminate.
  CHECK(tietze_eliminate(surface_group(2)) == surface_group(2));

  // Filling every puncture of the 3-punctured sphere collapses everything.
  FpPresentation sphere = punctured_curve_group(0, 3);
  for (const char* label : {"p1", "p2", "p3"})
    sphere = fill_puncture(sphere, label);
  FpPresentation t = tietze_eliminate(sphere);
  CHECK(t.rank() == 0);
  CHECK(t.relators().empty());

  // Ramification words are rewritten through eliminations.
  FpPresentation u(2, {parse_word(2, "b A A")},
                   {{"q", parse_word(2, "b a")}});
  FpPresentation v = tietze_eliminate(u);  // b = a^2
  CHECK(v.rank() == 1);
  CHECK(*v.ramification_word("q") == parse_word(1, "a a a"));
}

TEST_CASE("smith diagonal") {
  using M = std::vector<std::vector<bigint>>;
  CHECK(smith_diagonal(M{{2, 0}, {0, 3}}) == std::vector<bigint>{1, 6});
  CHECK(smith_diagonal(M{{4, 0}, {0, 6}}) == std::vector<bigint>{2, 12});
  CHECK(smith_diagonal(M{{1, 2}, {3, 4}}) == std::vector<bigint>{1, 2});
  CHECK(smith_diagonal(M{{2, 4}, {1, 2}}) == std::vector<bigint>{1, 0});
  CHECK(smith_diagonal(M{{0, 0}}) == std::vector<bigint>{0});
  CHECK(smith_diagonal(M{}) == std::vector<bigint>{});
}

TEST_CASE("abelianization") {
  CHECK(abelian_invariants(surface_group(3)) ==
        AbelianInvariants{6, {}});
  CHECK(abelian_invariants(punctured_curve_group(2, 3)) ==
        AbelianInvariants{6, {}});

  // <a | a^6> = Z/6.
  FpPresentation c6(1, {power(parse_word(1, "a"), 6)});
  CHECK(abelian_invariants(c6) == AbelianInvariants{0, {6}});

  // Klein bottle <a, b | a^2 b^2> abelianizes to Z x Z/2.
  FpPresentation klein(2, {parse_word(2, "a a b b")});
  CHECK(abelian_invariants(klein) == AbelianInvariants{1, {2}});

  // <a, b | a^2, b^4, [a,b]> = Z/2 x Z/4.
  FpPresentation ab(2, {parse_word(2, "a a"), parse_word(2, "b b b b"),
                        parse_word(2, "a b A B")});
  CHECK(abelian_invariants(ab) == AbelianInvariants{0, {2, 4}});

  CHECK(to_text(AbelianInvariants{2, {}}) == "Z^2");
  CHECK(to_text(AbelianInvariants{1, {2, 6}}) == "Z x Z/2 x Z/6");
  CHECK(to_text(AbelianInvariants{0, {}}) == "0");
}

TEST_CASE("filling punctures one at a time reaches the closed surface") {
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 3; ++n) {
      FpPresentation p = punctured_curve_group(g, n);
      CHECK(abelian_invariants(p) == AbelianInvariants{2 * g + n - 1, {}});
      for (int i = 1; i <= n; ++i)
        p = fill_puncture(p, "p" + std::to_string(i));
      CHECK(abelian_invariants(p) == AbelianInvariants{2 * g, {}});
    }
  }
}

TEST_CASE("presentation text format") {
  FpPresentation p = punctured_curve_group(1, 2);
  FpPresentation q = parse_presentation(to_text(p));
  CHECK(p == q);

  FpPresentation r = parse_presentation(
      "# a comment\n"
      "gens: 2\n"
      "rel: a b A B\n"
      "ram: p1 a\n");
  CHECK(r.rank() == 2);
  CHECK(r.relators().size() == 1);
  CHECK(*r.ramification_word("p1") == parse_word(2, "a"));

  CHECK_THROWS_AS(parse_presentation("rel: a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("gens: 2\nbogus: x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("gens: 1\nrel: b"), std::out_of_range);
}

TEST_CASE("presentation invariants") {
  // Trivial relators are dropped, duplicate labels rejected.
  FpPresentation p(2, {Word(2), parse_word(2, "a A b"), Word(2)});
  CHECK(p.relators().size() == 1);
  CHECK(p.relators()[0] == parse_word(2, "b"));
  CHECK_THROWS_AS(FpPresentation(1, {}, {{"x", Word(1)}, {"x", Word(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FpPresentation(1, {Word(2)}), std::invalid_argument);
}
