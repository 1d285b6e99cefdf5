#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>

#include "devissage/completion.hpp"
#include "devissage/group_spec.hpp"

using namespace devissage;

TEST_CASE("class specs") {
  CHECK(GroupClass::parse("sol").kind == GroupClass::Kind::solvable);
  CHECK(GroupClass::parse("nil").kind == GroupClass::Kind::nilpotent);
  CHECK(GroupClass::parse("ell:2") == GroupClass{GroupClass::Kind::ell, 2});
  CHECK(GroupClass::parse("prime-to:3") ==
        GroupClass{GroupClass::Kind::prime_to, 3});
  for (const char* s : {"sol", "nil", "ell:5", "prime-to:7"})
    CHECK(GroupClass::parse(s).to_string() == s);
  CHECK_THROWS_AS(GroupClass::parse("ell:4"), std::invalid_argument);
  CHECK_THROWS_AS(GroupClass::parse("prime-to:1"), std::invalid_argument);
  CHECK_THROWS_AS(GroupClass::parse("solvable"), std::invalid_argument);
  CHECK(!GroupClass::parse("nil").extension_closed());
  CHECK(GroupClass::parse("sol").extension_closed());
}

TEST_CASE("class membership") {
  CHECK(class_membership(parse_group_spec("S3"), GroupClass::parse("sol")));
  CHECK(!class_membership(parse_group_spec("S3"), GroupClass::parse("nil")));
  CHECK(class_membership(parse_group_spec("C8"), GroupClass::parse("ell:2")));
  CHECK(!class_membership(parse_group_spec("C6"), GroupClass::parse("ell:2")));
  CHECK(class_membership(parse_group_spec("S3"), GroupClass::parse("prime-to:5")));
  CHECK(!class_membership(parse_group_spec("S3"), GroupClass::parse("prime-to:3")));
  CHECK(!class_membership(parse_group_spec("A5"), GroupClass::parse("sol")));
}

TEST_CASE("maximal class quotients") {
  FiniteGroup s3 = parse_group_spec("S3");
  CHECK(max_class_quotient(s3, GroupClass::parse("sol")).quotient.order() == 6);
  CHECK(max_class_quotient(s3, GroupClass::parse("nil")).quotient.order() == 2);
  CHECK(max_class_quotient(s3, GroupClass::parse("ell:2")).quotient.order() == 2);
  CHECK(max_class_quotient(s3, GroupClass::parse("ell:3")).quotient.order() == 1);
  CHECK(max_class_quotient(s3, GroupClass::parse("prime-to:3")).quotient.order() == 2);
  CHECK(max_class_quotient(s3, GroupClass::parse("prime-to:2")).quotient.order() == 1);

  // The case that catches a wrong ell fast path: the maximal 2-quotient of
  // C6 is C2 with kernel C3, not the trivial group.
  FiniteGroup c6 = parse_group_spec("C6");
  ClassQuotient q = max_class_quotient(c6, GroupClass::parse("ell:2"));
  CHECK(q.quotient.order() == 2);
  CHECK(q.kernel == ElementSet{0, 2, 4});

  CHECK(max_class_quotient(parse_group_spec("C12"), GroupClass::parse("ell:2"))
            .quotient.order() == 4);
  CHECK(max_class_quotient(parse_group_spec("Q8"), GroupClass::parse("ell:2"))
            .quotient.order() == 8);
  CHECK(max_class_quotient(parse_group_spec("A4"), GroupClass::parse("prime-to:2"))
            .quotient.order() == 3);
  CHECK(max_class_quotient(parse_group_spec("A4"), GroupClass::parse("prime-to:3"))
            .quotient.order() == 1);
  // A5 is its own obstruction: every proper quotient is trivial.
  CHECK(max_class_quotient(parse_group_spec("A5"), GroupClass::parse("sol"))
            .quotient.order() == 1);
}

TEST_CASE("fast paths agree with the intersection oracle") {
  for (const char* spec : {"C6", "C12", "S3", "S4", "A4", "D6", "Q8", "C2xC6"}) {
    FiniteGroup g = parse_group_spec(spec);
    for (const char* cls :
         {"sol", "nil", "ell:2", "ell:3", "prime-to:2", "prime-to:3",
          "prime-to:5"}) {
      GroupClass c = GroupClass::parse(cls);
      CAPTURE(spec);
      CAPTURE(cls);
      CHECK(max_class_quotient(g, c).kernel == class_kernel_oracle(g, c));
    }
  }
}

TEST_CASE("projection works as advertised") {
  FiniteGroup s3 = parse_group_spec("S3");
  ClassQuotient q = max_class_quotient(s3, GroupClass::parse("nil"));
  for (int a = 0; a < s3.order(); ++a)
    for (int b = 0; b < s3.order(); ++b)
      CHECK(q.projection[s3.mul(a, b)] ==
            q.quotient.mul(q.projection[a], q.projection[b]));
}

TEST_CASE("exactness of completion") {
  FiniteGroup s3 = parse_group_spec("S3");
  ElementSet a3 = max_class_quotient(s3, GroupClass::parse("nil")).kernel;

  // Solvable class: extension-closed, sequence exact.
  ExactnessReport sol = verify_completion_exactness(s3, a3, GroupClass::parse("sol"));
  CHECK(sol.hypothesis_ok);
  CHECK(sol.exact());
  CHECK(sol.sub_completion_order == 3);
  CHECK(sol.completion_order == 6);

  // Nilpotent class: hypothesis holds (S3/A3 = C2 is nilpotent) but the
  // sequence fails on the left: A3^nil = C3 dies inside S3^nil = C2.
  ExactnessReport nil = verify_completion_exactness(s3, a3, GroupClass::parse("nil"));
  CHECK(nil.hypothesis_ok);
  CHECK(!nil.injective);
  CHECK(!nil.exact());
  CHECK(nil.sub_completion_order == 3);
  CHECK(nil.completion_order == 2);
  CHECK(nil.middle_exact);  // failure is exactly at injectivity
  CHECK(nil.surjective);

  FiniteGroup c6 = parse_group_spec("C6");
  ExactnessReport ell2 =
      verify_completion_exactness(c6, {0, 2, 4}, GroupClass::parse("ell:2"));
  CHECK(ell2.exact());

  // Right exactness holds even in the nilpotent case.
  CHECK(verify_right_exactness(s3, a3, GroupClass::parse("nil")).exact());
  CHECK(verify_right_exactness(s3, a3, GroupClass::parse("sol")).exact());
  CHECK(verify_right_exactness(c6, {0, 2, 4}, GroupClass::parse("ell:2")).exact());
}

TEST_CASE("extension closure spot checks") {
  // N in c and G/N in c imply G in c for the extension-closed classes.
  FiniteGroup s3 = parse_group_spec("S3");
  ElementSet a3 = {0, 1, 2};
  // Find A3 properly: kernel of the nilpotent quotient.
  a3 = max_class_quotient(s3, GroupClass::parse("nil")).kernel;
  GroupClass sol = GroupClass::parse("sol");
  CHECK(class_membership(subgroup_group(s3, a3).group, sol));
  CHECK(class_membership(quotient_group(s3, a3).group, sol));
  CHECK(class_membership(s3, sol));
  // The nilpotent class is famously not extension-closed: same N, same G.
  GroupClass nil = GroupClass::parse("nil");
  CHECK(class_membership(subgroup_group(s3, a3).group, nil));
  CHECK(class_membership(quotient_group(s3, a3).group, nil));
  CHECK(!class_membership(s3, nil));
}

TEST_CASE("nilpotent Sylow decomposition") {
  SylowDecomposition c12 = nilpotent_sylow_decomposition(parse_group_spec("C12"));
  REQUIRE(c12.factors.size() == 2);
  CHECK(c12.factors[0].first == 2);
  CHECK(c12.factors[0].second.size() == 4);
  CHECK(c12.factors[1].first == 3);
  CHECK(c12.factors[1].second.size() == 3);
  CHECK(c12.verified);

  CHECK(nilpotent_sylow_decomposition(parse_group_spec("D4")).verified);
  CHECK(nilpotent_sylow_decomposition(parse_group_spec("Q8")).verified);
  CHECK(nilpotent_sylow_decomposition(parse_group_spec("C2xC2xC3")).verified);
  CHECK(nilpotent_sylow_decomposition(FiniteGroup()).verified);
  CHECK_THROWS_AS(nilpotent_sylow_decomposition(parse_group_spec("S3")),
                  std::invalid_argument);
}

TEST_CASE("CRT generator lifting") {
  FiniteGroup c6 = parse_group_spec("C6");
  // Sylow_2(C6) = {0, 3}, Sylow_3(C6) = {0, 2, 4}.
  std::vector<int> lifted = crt_lift_generators(c6, {{2, {3}}, {3, {2}}});
  REQUIRE(lifted.size() == 1);
  CHECK(c6.element_order(lifted[0]) == 6);
  CHECK(closure(c6, lifted) == all_elements(c6));

  FiniteGroup c12 = parse_group_spec("C12");
  auto sylows2 = sylow_subgroup(c12, 2);
  auto sylows3 = sylow_subgroup(c12, 3);
  std::vector<int> gens2, gens3;
  for (int x : sylows2)
    if (c12.element_order(x) == 4) {
      gens2 = {x};
      break;
    }
  for (int x : sylows3)
    if (c12.element_order(x) == 3) {
      gens3 = {x};
      break;
    }
  std::vector<int> lifted12 = crt_lift_generators(c12, {{2, gens2}, {3, gens3}});
  CHECK(closure(c12, lifted12) == all_elements(c12));

  CHECK_THROWS_AS(crt_lift_generators(c6, {{2, {3}}}), std::invalid_argument);
  CHECK_THROWS_AS(crt_lift_generators(c6, {{2, {3}}, {3, {0}}}),
                  std::invalid_argument);  // {0} does not generate Sylow_3
  CHECK_THROWS_AS(crt_lift_generators(c6, {{2, {3}}, {3, {2}}, {5, {0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(crt_lift_generators(parse_group_spec("S3"), {}),
                  std::invalid_argument);
}

TEST_CASE("nilpotent quotient is the product of the ell quotients") {
  for (const char* spec : {"S3", "C12", "D6", "A4", "C2xC6"}) {
    FiniteGroup g = parse_group_spec(spec);
    FiniteGroup nil_q = max_class_quotient(g, GroupClass::parse("nil")).quotient;
    FiniteGroup prod;  // trivial
    for (int p : {2, 3, 5, 7}) {
      if (g.order() % p != 0) continue;
      GroupClass c{GroupClass::Kind::ell, p};
      prod = direct_product(prod, max_class_quotient(g, c).quotient);
    }
    CAPTURE(spec);
    CHECK(find_isomorphism(nil_q, prod).has_value());
  }
}
