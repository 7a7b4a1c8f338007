#include "support.hpp"

#include <doctest.h>

using namespace omx;

TEST_SUITE("nps") {

TEST_CASE("matroid ideals of the worked examples") {
  using testing::formatted, testing::sorted;
  CHECK(formatted(matroid_ideal(testing::fixture("cm-arr-1"))) == sorted({"x1*x2", "x1*x3", "y2*x3", "y4"}));
  CHECK(formatted(matroid_ideal(testing::fixture("cm-arr-2"))) ==
        sorted({"x1*x4", "x1*y2", "x1*y3", "y2*x3", "y2*y4"}));
  CHECK(formatted(matroid_ideal(testing::fixture("nongp-cm-arr"))) == sorted({"x1", "x2"}));
  CHECK(matroid_ideal(testing::fixture("central-line")).is_unit());
  CHECK(formatted(specialize(matroid_ideal(testing::fixture("cm-arr-1")))) ==
        sorted({"x1*x2", "x1*x3", "x2*x3", "x4"}));
}

TEST_CASE("m and n monomials are complementary") {
  const auto m = testing::fixture("cm-arr-1");
  const auto vars = ring_variables(m);
  for (const auto& l : m.positive_part()) {
    const auto p = positive_monomial(m, l);
    const auto c = complement_monomial(m, l);
    CHECK((p.bits() & c.bits()) == 0);
    CHECK(lcm(p, c).degree() == vars.size());
  }
}

TEST_CASE("the resolution of cm-arr-1") {
  const auto res = cellular_resolution(testing::fixture("cm-arr-1"));
  CHECK(res.betti == std::vector<std::size_t>{1, 4, 5, 2});
  CHECK(check_faithful(res.complex).faithful);
  for (const auto& f : standard_fields())
    CHECK(check_acyclic(res.complex, f).ok);
  CHECK(is_cm_cellular(res.complex, Field::rationals()).ok);
  CHECK_THROWS(cellular_resolution(testing::fixture("central-line")));
}

TEST_CASE("adversarial labels break faithfulness and acyclicity") {
  const auto res = cellular_resolution(testing::fixture("segment"));
  REQUIRE(res.complex.size() == 4);
  const Monomial a(1), ab(3), abc(7);
  // both vertices carry the label of the edge: not injective
  const auto merged = res.complex.with_labels({Monomial{}, abc, abc, abc});
  const auto v = check_faithful(merged);
  CHECK_FALSE(v.faithful);
  CHECK(v.witness);
  // injective, but rho(v2) > rho(v1) without v2 > v1; X_{<=ab} is two points
  const auto skewed = res.complex.with_labels({Monomial{}, a, ab, abc});
  CHECK_FALSE(check_faithful(skewed).faithful);
  const auto sweep = check_acyclic(skewed, Field::rationals());
  CHECK_FALSE(sweep.ok);
  CHECK(sweep.witness == ab);
  CHECK(check_faithful(res.complex).faithful);
}

TEST_CASE("regularity preconditions") {
  const auto vars = VariableSet::xy({"1", "2"});
  const auto bad = SquarefreeMonomialIdeal::make(vars, {vars.parse("x1*y1")});
  const auto v = regularity_precondition_check(bad);
  CHECK_FALSE(v.no_xy_generator);
  CHECK_FALSE(v.ok());
  for (const auto& name : testing::fixture_names()) {
    const auto m = testing::fixture(name);
    CHECK(regularity_precondition_check(matroid_ideal(m)).ok());
  }
}

TEST_CASE("general position report on cm-arr-1") {
  const auto fields = standard_fields();
  const auto r = genpos_report(testing::fixture("cm-arr-1"), fields);
  CHECK(r.conditions() == std::vector<bool>(5, true));
  CHECK(r.all_agree());
  CHECK(r.findings.empty());
  CHECK(r.expected_dim == 5);
  CHECK(r.expected_dim_bar == 1);
  CHECK(r.krull_dim == 5);
  CHECK(r.krull_dim_bar == 1);
  CHECK_THROWS(genpos_report(testing::fixture("central-line"), fields));
}

TEST_CASE("ring verdicts at the edges") {
  CHECK_FALSE(ring_is_cm(testing::fixture("central-line"), Field::rationals()));
  const auto a = testing::make_arrangement({{1, 0}}, {0, 0});
  const AffineOM loop = om_from_vectors(a, true);
  CHECK(loop.g_is_loop());
  CHECK(matroid_ideal(loop).is_zero());
  CHECK(ring_is_cm(loop, Field::rationals()));
}

TEST_CASE("canonical ideal of the tetrahedron") {
  const auto m = testing::fixture("tetrahedron");
  CHECK(canonical_ideal(m).formatted() == std::vector<std::string>{"y1*y2*y3*x4"});
  const auto t = canonical_degree_table(m, Field::rationals());
  CHECK(t.degrees_match);
  CHECK(t.at_most_one);
  CHECK(t.facets_member);
  CHECK(t.findings.empty());
}

TEST_CASE("manifold report on the square is not asserted") {
  const auto r = manifold_report(testing::fixture("square"));
  CHECK_FALSE(r.asserted);
  CHECK(r.findings.empty());
}

}
