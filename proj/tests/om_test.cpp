#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace omx;

namespace {

// Cone dimension of a covector of a central arrangement: r minus the rank of
// the rows it vanishes on.
int cone_dimension(const IntMatrix& rows, const SignVector& v) {
  std::vector<Integer> data;
  std::size_t count = 0;
  for (std::size_t e = 0; e < rows.rows(); ++e)
    if (v[e] == Sign::zero) {
      for (std::size_t j = 0; j < rows.cols(); ++j)
        data.push_back(rows(e, j));
      ++count;
    }
  const std::size_t r = rank(rows, Field::rationals());
  if (count == 0)
    return static_cast<int>(r);
  return static_cast<int>(r - rank(IntMatrix(count, rows.cols(), data), Field::rationals()));
}

std::vector<std::string> strs(const std::vector<SignVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs)
    out.push_back(v.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("om") {

TEST_CASE("axioms reject broken covector sets") {
  const std::vector<SignVector> missing_zero{SignVector::parse("+"), SignVector::parse("-")};
  CHECK(check_covector_axioms(missing_zero).axiom == "L0");
  const std::vector<SignVector> not_symmetric{SignVector::parse("0"), SignVector::parse("+")};
  CHECK(check_covector_axioms(not_symmetric).axiom == "L1");
  const std::vector<SignVector> not_closed{SignVector::parse("00"), SignVector::parse("+0"), SignVector::parse("-0"),
                                           SignVector::parse("0+"), SignVector::parse("0-")};
  CHECK(check_covector_axioms(not_closed).axiom == "L2");
  CHECK_THROWS_AS(OrientedMatroid::from_covectors({"a", "b"}, not_closed), InvalidOrientedMatroid);
}

TEST_CASE("uniform rank 2 on three elements") {
  const auto a = testing::make_arrangement({{1, 0}, {0, 1}}, {1, 1});
  const auto m = om_from_vectors(a);
  CHECK(m.om().rank() == 2);
  CHECK(m.om().cocircuits().size() == 6);
  CHECK(m.om().covectors().size() == 13);  // 0, 6 rays, 6 regions
  CHECK(check_covector_axioms(m.om().covectors()).ok);
  CHECK(m.om().loops().empty());
  CHECK(m.om().coloops().empty());
}

TEST_CASE("covector sets of arrangements are spheres") {
  std::mt19937_64 rng(11);
  for (std::size_t i = 0; i < 60; ++i) {
    const auto a = testing::random_arrangement(rng, i);
    const auto m = om_from_vectors(a, true);
    const auto rows = a.matrix();
    const int r = static_cast<int>(rank(rows, Field::rationals()));
    CHECK(static_cast<int>(m.om().rank()) == r);
    CHECK(chain_rank(m.om().covectors()) == r);
    long chi = 0;
    for (const auto& v : m.om().covectors())
      if (!v.is_zero())
        chi += (cone_dimension(rows, v) - 1) % 2 == 0 ? 1 : -1;
    CHECK(chi == 1 + ((r - 1) % 2 == 0 ? 1 : -1));
    std::uniform_int_distribution<int> coord(-7, 7);
    for (int k = 0; k < 20; ++k) {
      std::vector<Rational> p(a.dimension);
      for (auto& x : p)
        x = coord(rng);
      CHECK(m.om().contains(sign_vector_of_point(a, p)));
    }
  }
}

TEST_CASE("cocircuit round trip") {
  const auto m = testing::fixture("four-generic-lines");
  const auto& l = m.om().covectors();
  CHECK(cocircuits(l) == m.om().cocircuits());
  CHECK(minimal_by_order(l) == m.om().cocircuits());
  auto spanned = span_from_cocircuits(m.om().cocircuits());
  std::sort(spanned.begin(), spanned.end());
  CHECK(spanned == l);
}

TEST_CASE("restriction agrees with the sub-arrangement") {
  const auto a = testing::fixture_arrangement("cm-arr-1");
  const auto m = om_from_vectors(a);
  auto sub = a;
  sub.vectors = {a.vectors[0], a.vectors[2]};
  const auto ms = om_from_vectors(sub);
  const auto r = restriction(m.om(), ElementSet{0, 2, 4});
  CHECK(strs(r.covectors()) == strs(ms.om().covectors()));
}

TEST_CASE("contraction drops the rank by one") {
  const auto m = testing::fixture("cm-arr-1");
  for (std::size_t i = 0; i < 4; ++i) {
    const auto c = contraction(m.om(), ElementSet{i});
    CHECK(c.rank() + 1 == m.om().rank());
    CHECK(c.size() + 1 == m.om().size());
    const auto cm = contract_element(m, i);
    CHECK(cm.om().size() == c.size());
  }
}

TEST_CASE("general position on the worked examples") {
  CHECK(is_general_position(testing::fixture("cm-arr-1")));
  CHECK_FALSE(is_general_position(testing::fixture("cm-arr-2")));
  CHECK_FALSE(is_general_position(testing::fixture("nongp-cm-arr")));
  const auto coloop = testing::fixture("central-line");
  CHECK(coloop.g_is_coloop());
  CHECK_FALSE(is_general_position(coloop));
  CHECK(bounded_complex(coloop).empty());
}

TEST_CASE("bounded complex of a segment") {
  const auto m = testing::fixture("segment");
  CHECK(strs(bounded_complex(m)) == std::vector<std::string>{"+-+", "+0+", "0-+"});
  const auto info = full_rank_info(m);
  CHECK(info.full_rank);
  CHECK(info.bounded_rank == 1);
  const auto sv = full_rank_info(testing::fixture("single-vertex"));
  CHECK_FALSE(sv.full_rank);
  CHECK(sv.uncovered == ElementSet{0});
}

TEST_CASE("every cocircuit lies in B when positive on g") {
  const auto m = testing::fixture("square");
  const auto b = bounded_complex(m);
  for (const auto& c : m.om().cocircuits())
    if (c[m.g()] == Sign::plus)
      CHECK(std::binary_search(b.begin(), b.end(), c));
  for (const auto& v : b)
    for (const auto& w : m.om().covectors())
      if (!w.is_zero() && leq(w, v))
        CHECK(w[m.g()] == Sign::plus);
}

TEST_CASE("circuit axioms") {
  const CircuitFamily good{4, {ElementSet{0, 1}, ElementSet{0, 2}, ElementSet{1, 2}, ElementSet{3}}};
  CHECK(check_circuit_axioms(good).ok);
  CHECK(matroid_rank_from_circuits(good) == 1);
  const CircuitFamily bad{3, {ElementSet{0, 1}, ElementSet{1, 2}}};
  CHECK_FALSE(check_circuit_axioms(bad).ok);
  const CircuitFamily not_antichain{3, {ElementSet{0}, ElementSet{0, 1}}};
  CHECK_FALSE(check_circuit_axioms(not_antichain).ok);
  const CircuitFamily empty_member{2, {ElementSet{}}};
  CHECK_FALSE(check_circuit_axioms(empty_member).ok);
}

TEST_CASE("restricted circuit families on cm-arr-1") {
  const auto m = testing::fixture("cm-arr-1");
  const auto all = underlying_restricted_circuits(m, false);
  const auto positive = underlying_restricted_circuits(m, true);
  CHECK(all == positive);
  CHECK(check_circuit_axioms(all).ok);
  CHECK(matroid_rank_from_circuits(all) == m.n() - m.om().rank());
}

}
