#ifndef OMX_REALIZE_HPP
#define OMX_REALIZE_HPP

#include "omx/exactla.hpp"
#include "omx/om.hpp"

#include <string>
#include <vector>

namespace omx {

/// Linear hyperplanes in Q^{dimension}, one normal vector per element, plus
/// the vector of g. The affine arrangement lives on <v, g> = 1.
struct Arrangement {
  std::string name;
  std::size_t dimension = 0;  // ambient, d + 1
  std::vector<std::vector<Integer>> vectors;
  std::vector<Integer> g;

  /// Element names "1".."n" followed by "g".
  std::vector<std::string> element_names() const;
  /// Rows v_1..v_n, v_g.
  IntMatrix matrix() const;
  /// Throws std::invalid_argument on shape errors or a zero g.
  void validate() const;
};

/// l_v(e) = sign <v_e, v>, in ground order 1..n, g.
SignVector sign_vector_of_point(const Arrangement& a, const std::vector<Rational>& v);

/// Cocircuits of the arrangement: for every T of rank r - 1, the line cut out
/// of the row space by the hyperplanes in T, taken with both orientations.
std::vector<SignVector> arrangement_cocircuits(const Arrangement& a);

/// The affine oriented matroid of the arrangement. `allow_loop_g` admits a
/// g whose vector is zero.
AffineOM om_from_vectors(const Arrangement& a, bool allow_loop_g = false);

}  // namespace omx

#endif
