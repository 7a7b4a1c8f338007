#ifndef OMX_COCHAIN_HPP
#define OMX_COCHAIN_HPP

#include "omx/exactla.hpp"

#include <string>
#include <vector>

namespace omx {

/// A finitely generated abelian group Z^rank + sum Z/t.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool is_integers() const { return rank == 1 && torsion.empty(); }
  std::string str() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// C^{lo} -> C^{lo+1} -> ... with integer differentials.
/// differentials[k] maps degree lo+k to lo+k+1 (rows: target basis).
struct CochainComplex {
  int min_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> differentials;

  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim_at(int degree) const;
  /// Throws std::logic_error if some d^{k+1} d^k is nonzero.
  void verify() const;
};

/// Cohomology dimensions indexed like `dims`.
std::vector<std::size_t> cohomology(const CochainComplex& c, Field field);
std::vector<AbelianGroup> integral_cohomology(const CochainComplex& c);

/// Value at a degree of a list indexed from `min_degree`; zero outside.
template <class T>
T at_degree(const std::vector<T>& values, int min_degree, int degree) {
  const int k = degree - min_degree;
  if (k < 0 || k >= static_cast<int>(values.size()))
    return T{};
  return values[static_cast<std::size_t>(k)];
}

}  // namespace omx

#endif
