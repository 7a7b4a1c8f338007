#include "support.hpp"

#include <doctest.h>

using namespace omx;

TEST_SUITE("exactla") {

TEST_CASE("smith form of a 2x2 matrix") {
  const IntMatrix m{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Integer>{2, 4});
  CHECK(testing::smith_by_minors(m) == s.diagonal);
  CHECK(s.torsion() == std::vector<Integer>{2, 4});
}

TEST_CASE("smith transforms are unimodular and diagonalize") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> side(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(side(rng), side(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    const auto d = s.left * m * s.right;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        CHECK(d(i, j) == (i == j ? s.diagonal[i] : Integer(0)));
    for (std::size_t i = 1; i < s.diagonal.size(); ++i)
      if (s.diagonal[i - 1] != 0)
        CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
    CHECK(testing::smith_by_minors(m) == s.diagonal);
    CHECK(smith_diagonal(m) == s.diagonal);
    CHECK(s.rank() == rank(m, Field::rationals()));
  }
}

TEST_CASE("rank depends on the characteristic") {
  const IntMatrix m{{1, 1}, {1, -1}};  // det -2
  CHECK(rank(m, Field::rationals()) == 2);
  CHECK(rank(m, Field::prime(2)) == 1);
  CHECK(rank(m, Field::prime(3)) == 2);
}

TEST_CASE("kernels") {
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  const auto k = kernel_basis(m);
  CHECK(k.size() == 2);
  for (const auto& v : k) {
    CHECK(m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2] == 0);
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    CHECK(*first > 0);
  }
  const auto z = integer_kernel_basis(IntMatrix{{2, 4}});
  REQUIRE(z.size() == 1);
  CHECK(abs(z[0][0]) == 2);
  CHECK(abs(z[0][1]) == 1);
}

TEST_CASE("determinant and fields") {
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}) == -5);
  CHECK_THROWS(determinant(IntMatrix{{1, 2}}));
  CHECK_THROWS(Field::prime(4));
  CHECK(parse_field("Q").is_rational());
  CHECK(parse_field("F3").characteristic == 3);
  CHECK(parse_field("2").characteristic == 2);
  CHECK(standard_fields().size() == 4);
  CHECK_THROWS(to_integer(RatMatrix{{Rational(1, 2)}}));
}

}
