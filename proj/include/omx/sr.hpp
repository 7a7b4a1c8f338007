#ifndef OMX_SR_HPP
#define OMX_SR_HPP

#include "omx/cochain.hpp"
#include "omx/monomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace omx {

/// Vertex subset of a simplicial complex on at most 64 vertices.
using Face = std::uint64_t;

inline std::size_t face_size(Face f) { return static_cast<std::size_t>(std::popcount(f)); }

/// Simplicial complex on vertices 0..vertex_count-1, stored by its facets and
/// the full list of faces. The void complex (no faces at all) is distinct
/// from {∅}.
class SimplicialComplex {
public:
  /// The void complex on no vertices.
  SimplicialComplex() = default;
  /// Downward closure of `generators`; non-maximal generators are dropped.
  static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Face> generators);
  static SimplicialComplex void_complex(std::size_t vertex_count);
  static SimplicialComplex simplex(std::size_t vertex_count);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Sorted by (size, bits).
  const std::vector<Face>& facets() const { return facets_; }
  /// Sorted by (size, bits).
  const std::vector<Face>& faces() const { return faces_; }
  bool contains(Face f) const;
  bool is_void() const { return faces_.empty(); }
  /// max facet size - 1; -1 for {∅}, and -2 for the void complex.
  int dimension() const;
  bool is_pure() const;
  /// Vertices that are faces.
  Face vertex_support() const;
  /// f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const;
  /// Alternating sum of f_0, f_1, ... (unreduced).
  long euler_characteristic() const;
  /// Inclusion-minimal vertex subsets (within 0..vertex_count-1) that are
  /// not faces.
  std::vector<Face> minimal_nonfaces() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_count_ == o.vertex_count_ && faces_ == o.faces_;
  }

private:
  std::size_t vertex_count_ = 0;
  std::vector<Face> facets_;
  std::vector<Face> faces_;
};

/// Squarefree monomial ideal given by an inclusion-minimal generator list.
struct SquarefreeMonomialIdeal {
  VariableSet vars;
  std::vector<Monomial> generators;  // sorted in print order

  /// Minimalizes and sorts the generators.
  static SquarefreeMonomialIdeal make(VariableSet vars, std::vector<Monomial> gens);
  bool is_unit() const { return generators.size() == 1 && generators.front().is_one(); }
  bool is_zero() const { return generators.empty(); }
  bool contains(Monomial m) const;
  std::vector<std::string> formatted() const;
  bool operator==(const SquarefreeMonomialIdeal& o) const { return generators == o.generators; }
};

/// Drops non-minimal members and duplicates; keeps the input order otherwise.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Stanley-Reisner complex: faces are the variable sets containing no
/// generator. The unit ideal gives the void complex.
SimplicialComplex complex_from_ideal(const SquarefreeMonomialIdeal& ideal);
/// Stanley-Reisner ideal, generated by the minimal nonfaces.
SquarefreeMonomialIdeal ideal_from_complex(const SimplicialComplex& d, VariableSet vars);

/// lk F = { G : G ∩ F = ∅, G ∪ F ∈ Δ }. Throws if f is not a face.
SimplicialComplex link(const SimplicialComplex& d, Face f);
/// Δ|_F = { G ∈ Δ : G ⊆ F }, on the same vertex numbering.
SimplicialComplex restrict(const SimplicialComplex& d, Face vertices);

/// Augmented cochain complex, degrees -1..dim. Empty for the void complex.
CochainComplex augmented_cochains(const SimplicialComplex& d);
/// Cochains of the faces of `d` outside the subcomplex `a`, degrees 0..dim
/// (or -1..dim when `a` is void).
CochainComplex relative_cochains(const SimplicialComplex& d, const SimplicialComplex& a);

/// Reduced cohomology, index k holds degree k - 1.
std::vector<std::size_t> reduced_cohomology(const SimplicialComplex& d, Field field);
std::vector<AbelianGroup> reduced_cohomology_integral(const SimplicialComplex& d);
/// H^*(d, a), index k holds degree k + min_degree of relative_cochains.
std::vector<std::size_t> relative_cohomology(const SimplicialComplex& d, const SimplicialComplex& a, Field field,
                                             int* min_degree = nullptr);

struct ReisnerVerdict {
  bool cohen_macaulay = true;
  std::optional<Face> witness;  // a face whose link fails
  int degree = 0;               // offending cohomological degree
};

/// Reisner's link condition: H̃^i(lk F) = 0 for i < dim lk F, for every face
/// F including ∅. Faces are visited by increasing size; the first failure is
/// reported. `workers` > 1 splits each size class across threads.
ReisnerVerdict reisner_check(const SimplicialComplex& d, Field field, unsigned workers = 1);
inline bool is_cm_reisner(const SimplicialComplex& d, Field field, unsigned workers = 1) {
  return reisner_check(d, field, workers).cohen_macaulay;
}

/// Every restriction Δ|_F is pure. Reports a failing F through `witness`.
bool is_matroid_complex(const SimplicialComplex& d, Face* witness = nullptr);

}  // namespace omx

#endif
