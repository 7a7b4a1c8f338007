#include "omx/cochain.hpp"

#include <stdexcept>

namespace omx {

std::string AbelianGroup::str() const {
  if (is_zero())
    return "0";
  std::string s;
  if (rank > 0)
    s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty())
      s += "+";
    s += "Z/" + t.str();
  }
  return s;
}

std::size_t CochainComplex::dim_at(int degree) const { return at_degree(dims, min_degree, degree); }

void CochainComplex::verify() const {
  if (differentials.size() + 1 != dims.size() && !(dims.empty() && differentials.empty()))
    throw std::logic_error("cochain complex: differential count does not match degrees");
  for (std::size_t k = 0; k < differentials.size(); ++k)
    if (differentials[k].cols() != dims[k] || differentials[k].rows() != dims[k + 1])
      throw std::logic_error("cochain complex: differential has the wrong shape");
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    if (differentials[k].cols() == 0 || differentials[k + 1].rows() == 0)
      continue;
    const IntMatrix sq = differentials[k + 1] * differentials[k];
    for (std::size_t i = 0; i < sq.rows(); ++i)
      for (std::size_t j = 0; j < sq.cols(); ++j)
        if (sq(i, j) != 0)
          throw std::logic_error("cochain complex: d^2 != 0 at degree " + std::to_string(min_degree + static_cast<int>(k)));
  }
}

std::vector<std::size_t> cohomology(const CochainComplex& c, Field field) {
  std::vector<std::size_t> ranks(c.differentials.size());
  for (std::size_t k = 0; k < ranks.size(); ++k)
    ranks[k] = rank(c.differentials[k], field);
  std::vector<std::size_t> out(c.dims.size());
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const std::size_t outgoing = k < ranks.size() ? ranks[k] : 0;
    const std::size_t incoming = k > 0 ? ranks[k - 1] : 0;
    out[k] = c.dims[k] - outgoing - incoming;
  }
  return out;
}

std::vector<AbelianGroup> integral_cohomology(const CochainComplex& c) {
  std::vector<std::vector<Integer>> diagonals(c.differentials.size());
  std::vector<std::size_t> ranks(c.differentials.size());
  for (std::size_t k = 0; k < diagonals.size(); ++k) {
    diagonals[k] = smith_diagonal(c.differentials[k]);
    std::size_t r = 0;
    for (const auto& d : diagonals[k])
      if (d != 0)
        ++r;
    ranks[k] = r;
  }
  std::vector<AbelianGroup> out(c.dims.size());
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const std::size_t outgoing = k < ranks.size() ? ranks[k] : 0;
    const std::size_t incoming = k > 0 ? ranks[k - 1] : 0;
    out[k].rank = c.dims[k] - outgoing - incoming;
    if (k > 0)
      for (const auto& d : diagonals[k - 1])
        if (d > 1)
          out[k].torsion.push_back(d);
  }
  return out;
}

}  // namespace omx
