#include "omx/realize.hpp"

#include <algorithm>
#include <unordered_set>

namespace omx {

namespace {

Sign sign_of(const Integer& x) { return x > 0 ? Sign::plus : x < 0 ? Sign::minus : Sign::zero; }
Sign sign_of(const Rational& x) { return x > 0 ? Sign::plus : x < 0 ? Sign::minus : Sign::zero; }

bool is_zero_vector(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

std::vector<std::string> Arrangement::element_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= vectors.size(); ++i)
    names.push_back(std::to_string(i));
  names.emplace_back("g");
  return names;
}

IntMatrix Arrangement::matrix() const {
  IntMatrix m(vectors.size() + 1, dimension);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dimension; ++j)
      m(i, j) = vectors[i][j];
  for (std::size_t j = 0; j < dimension; ++j)
    m(vectors.size(), j) = g[j];
  return m;
}

void Arrangement::validate() const {
  if (dimension == 0)
    throw std::invalid_argument("arrangement dimension must be positive");
  if (g.size() != dimension)
    throw std::invalid_argument("g has " + std::to_string(g.size()) + " coordinates, expected " +
                                std::to_string(dimension));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (vectors[i].size() != dimension)
      throw std::invalid_argument("vector " + std::to_string(i + 1) + " has " + std::to_string(vectors[i].size()) +
                                  " coordinates, expected " + std::to_string(dimension));
  if (vectors.size() + 1 > SignVector::max_size)
    throw std::length_error("too many hyperplanes");
}

SignVector sign_vector_of_point(const Arrangement& a, const std::vector<Rational>& v) {
  if (v.size() != a.dimension)
    throw std::invalid_argument("point has " + std::to_string(v.size()) + " coordinates, expected " +
                                std::to_string(a.dimension));
  SignVector out(a.vectors.size() + 1);
  auto inner = [&](const std::vector<Integer>& w) {
    Rational s = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      s += Rational(w[j]) * v[j];
    return s;
  };
  for (std::size_t i = 0; i < a.vectors.size(); ++i)
    out.set(i, sign_of(inner(a.vectors[i])));
  out.set(a.vectors.size(), sign_of(inner(a.g)));
  return out;
}

std::vector<SignVector> arrangement_cocircuits(const Arrangement& a) {
  a.validate();
  const IntMatrix v = a.matrix();
  const std::size_t m = v.rows();
  const std::size_t r = rank(v, Field::rationals());
  if (r == 0)
    throw std::invalid_argument("all vectors are zero; the row space is trivial");

  // Greedy basis of the row space. Working in coordinates of this basis
  // (gram = V B^T) makes the construction indifferent to whether the
  // arrangement is essential.
  std::vector<std::size_t> basis_rows;
  for (std::size_t i = 0; i < m && basis_rows.size() < r; ++i) {
    IntMatrix trial(basis_rows.size() + 1, v.cols());
    for (std::size_t k = 0; k < basis_rows.size(); ++k)
      for (std::size_t j = 0; j < v.cols(); ++j)
        trial(k, j) = v(basis_rows[k], j);
    for (std::size_t j = 0; j < v.cols(); ++j)
      trial(basis_rows.size(), j) = v(i, j);
    if (rank(trial, Field::rationals()) == basis_rows.size() + 1)
      basis_rows.push_back(i);
  }
  IntMatrix gram(m, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < v.cols(); ++j)
        gram(i, k) += v(i, j) * v(basis_rows[k], j);

  std::unordered_set<SignVector, SignVectorHash> seen;
  std::vector<SignVector> out;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t t = 0; t < subsets; ++t) {
    const auto rows = ElementSet(t).elements();
    IntMatrix sub(rows.size(), r);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < r; ++j)
        sub(k, j) = gram(rows[k], j);
    if (rank(sub, Field::rationals()) + 1 != r)
      continue;
    const auto kernel = kernel_basis(sub);
    const auto& c = kernel.front();
    SignVector lambda(m);
    for (std::size_t e = 0; e < m; ++e) {
      Integer s = 0;
      for (std::size_t j = 0; j < r; ++j)
        s += gram(e, j) * c[j];
      lambda.set(e, sign_of(s));
    }
    for (const auto& w : {lambda, -lambda})
      if (seen.insert(w).second)
        out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineOM om_from_vectors(const Arrangement& a, bool allow_loop_g) {
  a.validate();
  if (is_zero_vector(a.g) && !allow_loop_g)
    throw std::invalid_argument("g is the zero vector (a loop); pass the loop opt-in to allow it");
  auto cocircuit_set = arrangement_cocircuits(a);
  auto om = OrientedMatroid::from_cocircuits(a.element_names(), std::move(cocircuit_set), true);
  return AffineOM(std::move(om), a.vectors.size(), allow_loop_g);
}

}  // namespace omx
