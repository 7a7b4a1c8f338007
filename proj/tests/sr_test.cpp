#include "support.hpp"

#include <doctest.h>

using namespace omx;

namespace {

Face bits(std::initializer_list<int> vs) {
  Face f = 0;
  for (int v : vs)
    f |= Face{1} << v;
  return f;
}

// Boundary of the (n-1)-simplex: a homology (n-2)-sphere.
SimplicialComplex sphere(std::size_t n) {
  std::vector<Face> gens;
  for (std::size_t v = 0; v < n; ++v)
    gens.push_back(((Face{1} << n) - 1) & ~(Face{1} << v));
  return SimplicialComplex::from_facets(n, gens);
}

// Independence complex of the matroid with the given circuits, by brute force.
SimplicialComplex independence_complex(std::size_t n, const std::vector<Face>& circuits) {
  std::vector<Face> faces;
  for (Face f = 0; f < (Face{1} << n); ++f)
    if (std::none_of(circuits.begin(), circuits.end(), [&](Face c) { return (c & ~f) == 0; }))
      faces.push_back(f);
  return SimplicialComplex::from_facets(n, faces);
}

}  // namespace

TEST_SUITE("sr") {

TEST_CASE("complex and ideal round trip") {
  const auto vars = VariableSet::x_only({"1", "2", "3", "4"});
  const auto ideal = SquarefreeMonomialIdeal::make(vars, {vars.parse("x1*x2"), vars.parse("x3*x4"), vars.parse("x1*x2*x3")});
  CHECK(ideal.formatted() == std::vector<std::string>{"x1*x2", "x3*x4"});
  const auto d = complex_from_ideal(ideal);
  CHECK(d.facets() == std::vector<Face>{bits({0, 2}), bits({1, 2}), bits({0, 3}), bits({1, 3})});
  CHECK(ideal_from_complex(d, vars) == ideal);
  CHECK(d.f_vector() == std::vector<std::size_t>{1, 4, 4});
  CHECK(d.euler_characteristic() == 0);  // a 4-cycle
}

TEST_CASE("unit and zero ideals") {
  const auto vars = VariableSet::x_only({"1", "2"});
  const auto unit = SquarefreeMonomialIdeal::make(vars, {Monomial{}});
  CHECK(unit.is_unit());
  CHECK(complex_from_ideal(unit).is_void());
  CHECK(complex_from_ideal(unit).dimension() == -2);
  const auto zero = SquarefreeMonomialIdeal::make(vars, {});
  CHECK(complex_from_ideal(zero) == SimplicialComplex::simplex(2));
  CHECK(SimplicialComplex::from_facets(3, {0}).dimension() == -1);
}

TEST_CASE("euler characteristic of spheres") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto s = sphere(n);
    const long d = static_cast<long>(n) - 2;
    CHECK(s.euler_characteristic() == 1 + (d % 2 == 0 ? 1 : -1));
    const auto h = reduced_cohomology(s, Field::rationals());
    for (std::size_t k = 0; k < h.size(); ++k)
      CHECK(h[k] == (static_cast<long>(k) - 1 == d ? 1u : 0u));
    CHECK(is_cm_reisner(s, Field::prime(2)));
  }
}

TEST_CASE("two disjoint edges") {
  const auto d = SimplicialComplex::from_facets(4, {bits({0, 1}), bits({2, 3})});
  CHECK(d.is_pure());
  const auto v = reisner_check(d, Field::rationals());
  CHECK_FALSE(v.cohen_macaulay);
  REQUIRE(v.witness);
  CHECK(*v.witness == 0);
  CHECK(v.degree == 0);
  Face witness = 0;
  CHECK_FALSE(is_matroid_complex(d, &witness));
  CHECK(face_size(witness) == 3);  // an edge plus a vertex of the other
}

TEST_CASE("links and restrictions") {
  const auto d = SimplicialComplex::from_facets(4, {bits({0, 1, 2}), bits({2, 3})});
  CHECK(link(d, bits({2})).facets() == std::vector<Face>{bits({3}), bits({0, 1})});
  CHECK(link(d, bits({0, 1})).facets() == std::vector<Face>{bits({2})});
  CHECK(link(d, 0) == d);
  CHECK_THROWS(link(d, bits({0, 3})));
  CHECK(restrict(d, bits({0, 3})).facets() == std::vector<Face>{bits({0}), bits({3})});
  CHECK_FALSE(d.is_pure());
}

TEST_CASE("matroid complexes from circuits") {
  const std::vector<Face> circuits{bits({0, 1}), bits({0, 2}), bits({1, 2}), bits({3})};
  const auto d = independence_complex(4, circuits);
  CHECK(d.facets() == std::vector<Face>{bits({0}), bits({1}), bits({2})});
  CHECK(is_matroid_complex(d));
  CHECK(is_cm_reisner(d, Field::rationals()));
  const auto uniform = independence_complex(5, {bits({0, 1, 2}), bits({0, 1, 3}), bits({0, 1, 4}), bits({0, 2, 3}),
                                                bits({0, 2, 4}), bits({0, 3, 4}), bits({1, 2, 3}), bits({1, 2, 4}),
                                                bits({1, 3, 4}), bits({2, 3, 4})});
  CHECK(is_matroid_complex(uniform));
  CHECK(is_cm_reisner(uniform, Field::prime(3)));
}

TEST_CASE("torsion is seen over Z and F2 but not Q") {
  // Six-vertex projective plane.
  const std::vector<Face> rp2{bits({0, 1, 2}), bits({0, 2, 3}), bits({0, 3, 4}), bits({0, 4, 5}), bits({0, 5, 1}),
                              bits({1, 2, 4}), bits({2, 3, 5}), bits({3, 4, 1}), bits({4, 5, 2}), bits({5, 1, 3})};
  const auto d = SimplicialComplex::from_facets(6, rp2);
  CHECK(d.euler_characteristic() == 1);
  const auto z = reduced_cohomology_integral(d);
  CHECK(z[2].str() == "0");
  CHECK(z[3].torsion == std::vector<Integer>{2});
  CHECK(reduced_cohomology(d, Field::rationals())[3] == 0);
  CHECK(reduced_cohomology(d, Field::prime(2))[3] == 1);
  CHECK(is_cm_reisner(d, Field::rationals()));
  CHECK_FALSE(is_cm_reisner(d, Field::prime(2)));
}

TEST_CASE("relative cohomology of a disk rel its boundary") {
  const auto disk = SimplicialComplex::from_facets(3, {bits({0, 1, 2})});
  const auto circle = sphere(3);
  int lo = 0;
  const auto h = relative_cohomology(disk, circle, Field::rationals(), &lo);
  CHECK(at_degree(h, lo, 2) == 1);
  CHECK(at_degree(h, lo, 1) == 0);
  CHECK(at_degree(h, lo, 0) == 0);
}

TEST_CASE("parallel reisner agrees with serial") {
  const auto s = sphere(6);
  CHECK(reisner_check(s, Field::rationals(), 3).cohen_macaulay);
  const auto d = SimplicialComplex::from_facets(6, {bits({0, 1, 2}), bits({2, 3, 4}), bits({4, 5, 0})});
  CHECK(reisner_check(d, Field::rationals(), 1).witness == reisner_check(d, Field::rationals(), 4).witness);
}

}
