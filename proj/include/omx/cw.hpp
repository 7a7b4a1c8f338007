#ifndef OMX_CW_HPP
#define OMX_CW_HPP

#include "omx/cochain.hpp"
#include "omx/monomial.hpp"
#include "omx/signvec.hpp"
#include "omx/sr.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace omx {

/// Raised when a poset is not the face poset of a regular CW complex.
class NotRegularCW : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Sorted list of cell indices.
using CellSet = std::vector<std::size_t>;

/// Face poset of a regular CW complex. Cell 0 is the empty cell, of
/// dimension -1; cells are numbered by increasing dimension.
class CellComplex {
public:
  /// Cells are the nonzero sign vectors of `poset`; the zero vector is
  /// supplied as the empty cell. Throws NotRegularCW if not graded.
  static CellComplex from_sign_vectors(std::span<const SignVector> poset);
  /// below[i] lists the cells covered by cell i of the input; input cell 0
  /// must be the empty cell and cover nothing. The order is the transitive
  /// closure. Input numbering is kept when it is already by dimension.
  static CellComplex from_covers(const std::vector<std::vector<std::size_t>>& below);

  std::size_t size() const { return dim_.size(); }
  int dim(std::size_t cell) const { return dim_[cell]; }
  /// Top cell dimension; -1 when only the empty cell exists.
  int dimension() const { return dim_.empty() ? -1 : dim_.back(); }
  /// Number of cells per dimension 0..dimension().
  std::vector<std::size_t> f_vector() const;
  /// Cells covered by `cell`, increasing.
  const std::vector<std::size_t>& facets_of(std::size_t cell) const { return down_[cell]; }
  /// Cells covering `cell`, increasing.
  const std::vector<std::size_t>& cofacets_of(std::size_t cell) const { return up_[cell]; }
  bool leq(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  bool covers(std::size_t upper, std::size_t lower) const;
  /// Cells below and including `cell`.
  CellSet closure(std::size_t cell) const;
  bool is_maximal(std::size_t cell) const { return up_[cell].empty(); }

  /// Sign vector of each cell, when built from sign vectors (cell 0 is 0).
  const std::vector<SignVector>& sign_vectors() const { return sign_vectors_; }
  std::optional<std::size_t> cell_of(const SignVector& v) const;

  bool has_incidence() const { return !incidence_.empty(); }
  /// [upper : lower]; 0 unless upper covers lower. Throws without incidence.
  int incidence(std::size_t upper, std::size_t lower) const;
  /// Copy with the orientation of one cell reversed.
  CellComplex reoriented(std::size_t cell) const;

  bool has_labels() const { return !labels_.empty(); }
  Monomial label(std::size_t cell) const { return labels_.at(cell); }
  const std::vector<Monomial>& labels() const { return labels_; }
  /// Copy carrying `labels`. Throws std::invalid_argument unless the label
  /// of the empty cell is 1 and the map is order preserving.
  CellComplex with_labels(std::vector<Monomial> labels) const;

private:
  friend CellComplex incidence_function(const CellComplex& x);
  static CellComplex from_relation(std::vector<boost::dynamic_bitset<>> below, std::vector<SignVector> svs);

  std::vector<int> dim_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<boost::dynamic_bitset<>> below_;  // below_[b][a] iff a <= b
  std::vector<SignVector> sign_vectors_;
  std::vector<std::vector<int>> incidence_;  // aligned with down_
  std::vector<Monomial> labels_;
};

/// Incidence function built cell by cell: the coefficients of a fundamental
/// cycle of the sphere ∂σ, with the first nonzero one positive. Throws
/// NotRegularCW when some ∂σ is not a homology sphere over Z.
CellComplex incidence_function(const CellComplex& x);

/// Incidence is ±1 exactly on covers and ∂∂ = 0.
bool check_incidence(const CellComplex& x);

struct Strata {
  std::vector<SignVector> topes;     // maximal elements of B
  std::vector<SignVector> subtopes;  // elements of B covered by a tope of B
  std::vector<SignVector> boundary;  // elements of B below some element of L \ B
};

/// Topes, subtopes and boundary of a bounded complex `b` inside the covector
/// set `l`. Each list is sorted canonically.
Strata strata(std::span<const SignVector> b, std::span<const SignVector> l);
/// Number of members of `topes` lying above `v`.
std::size_t topes_above(const SignVector& v, std::span<const SignVector> topes);

/// { σ : a divides ρ(σ) }; needs labels.
CellSet order_filter(const CellComplex& x, Monomial a);
/// { τ : τ >= σ }.
CellSet order_filter(const CellComplex& x, std::size_t sigma);
bool is_order_filter(const CellComplex& x, const CellSet& y);
bool is_subcomplex(const CellComplex& x, const CellSet& y);

/// C^•(Y) with C^i spanned by the i-cells of the order filter Y and
/// δσ = Σ [τ:σ] τ. Degrees run from -1 to dim X. Throws if Y is not a filter.
CochainComplex cochain_complex(const CellComplex& x, const CellSet& y);
/// The same construction on any cell set, unchecked; degrees -1..dim X.
CochainComplex cellular_cochains(const CellComplex& x, const CellSet& y);
/// The same construction on a subcomplex (a downward closed set); including
/// the empty cell gives reduced cohomology.
CochainComplex subcomplex_cochains(const CellComplex& x, const CellSet& y);

/// Order complex of X minus the empty cell, and the order complex of
/// A = { τ : τ not >= σ }. Vertex k of both is cell vertex_cells[k].
struct BarycentricPair {
  SimplicialComplex whole;
  SimplicialComplex away;
  std::vector<std::size_t> vertex_cells;
};
/// Throws std::invalid_argument for σ = the empty cell, and
/// std::length_error beyond 64 nonempty cells.
BarycentricPair barycentric_pair(const CellComplex& x, std::size_t sigma);

}  // namespace omx

#endif
