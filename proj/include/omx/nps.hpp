#ifndef OMX_NPS_HPP
#define OMX_NPS_HPP

#include "omx/cw.hpp"
#include "omx/om.hpp"
#include "omx/sr.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace omx {

/// Ring variables x_i, y_i for the elements other than g.
VariableSet ring_variables(const AffineOM& m);
/// m_l = prod x_i over l(i) = +, times prod y_i over l(i) = -, i != g.
Monomial positive_monomial(const AffineOM& m, const SignVector& l);
/// n_l = (prod x_i y_i) / m_l.
Monomial complement_monomial(const AffineOM& m, const SignVector& l);

/// O_M = (m_l : l a cocircuit with l(g) = +). The unit ideal when g is a
/// coloop, the zero ideal when g is a loop.
SquarefreeMonomialIdeal matroid_ideal(const AffineOM& m);
/// Image under y_i -> x_i, minimalized, in the ring of the x variables.
SquarefreeMonomialIdeal specialize(const SquarefreeMonomialIdeal& ideal);

/// Cellular resolution supported on the bounded complex, ρ(l) = deg m_l.
struct LabeledResolution {
  CellComplex complex;              // incidence and labels set
  std::vector<std::size_t> betti;   // betti[i] = number of (i-1)-cells
  SquarefreeMonomialIdeal ideal;    // the ideal it resolves
};

/// Throws std::invalid_argument when the bounded complex is empty.
LabeledResolution cellular_resolution(const AffineOM& m);

struct FaithfulVerdict {
  bool faithful = true;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // cells
};
/// ρ injective, and ρ(σ) > ρ(τ) only when σ > τ.
FaithfulVerdict check_faithful(const CellComplex& labeled);

/// Outcome of a sweep over squarefree degrees a.
struct SweepVerdict {
  bool ok = true;
  std::optional<Monomial> witness;  // a failing degree
  int degree = 0;                   // offending cohomological degree
  std::size_t distinct_sets = 0;    // after deduplication
};

/// For every squarefree a, X_{<=a} = { σ : ρ(σ) | a } has zero reduced
/// cohomology whenever it contains a vertex.
SweepVerdict check_acyclic(const CellComplex& labeled, Field field, unsigned workers = 1);
/// For every squarefree a, H^i(C(X^{>=a})) = 0 for i != dim X.
SweepVerdict is_cm_cellular(const CellComplex& labeled, Field field, unsigned workers = 1);

struct FieldVerdicts {
  Field field;
  bool cellular = false;      // is_cm_cellular on the resolution
  bool reisner = false;       // Reisner on the complex of O_M
  bool reisner_bar = false;   // Reisner on the complex of the specialization
};

/// The five equivalent conditions of the general position theorem, each
/// computed on its own.
struct GenposReport {
  bool general_position = false;     // c1
  bool ring_cm = false;              // c2, over every field and both tests
  bool specialized_cm = false;       // c3, over every field
  bool matroid_circuits = false;     // c4
  bool circuit_equality = false;     // c5
  bool full_rank = false;
  std::size_t rank = 0;
  std::size_t n = 0;
  int expected_dim = 0;              // 2n - r
  int expected_dim_bar = 0;          // n - r
  int krull_dim = 0;                 // dim of the Stanley-Reisner complex + 1
  int krull_dim_bar = 0;
  std::vector<FieldVerdicts> by_field;
  std::vector<std::string> witnesses;  // why a condition is false
  std::vector<std::string> findings;   // contradictions with the theorem

  bool all_agree() const;
  std::vector<bool> conditions() const {
    return {general_position, ring_cm, specialized_cm, matroid_circuits, circuit_equality};
  }
};

/// Throws std::invalid_argument when g is a loop or a coloop.
GenposReport genpos_report(const AffineOM& m, std::span<const Field> fields, unsigned workers = 1);

/// Cohen-Macaulayness of the ring, by Reisner on the Stanley-Reisner complex.
/// A loop g gives a polynomial ring (true); a coloop the zero ring (false).
bool ring_is_cm(const AffineOM& m, Field field, unsigned workers = 1);

/// J_M = (n_l : l a tope of B), keeping only generators nonzero modulo O_M
/// and minimalizing. Throws when B is empty.
SquarefreeMonomialIdeal canonical_ideal(const AffineOM& m);

struct CanonicalRow {
  Face face;                  // over the 2n ring variables
  std::size_t link_dim = 0;   // dim H^{d-#F}(lk F), d = dim of the complex
  bool member = false;        // m_F in J_M + O_M
  bool facet = false;
};

struct CanonicalTable {
  std::vector<CanonicalRow> rows;
  bool degrees_match = true;        // link_dim == member for every row
  bool at_most_one = true;          // link_dim <= 1
  bool facets_member = true;        // facets have link_dim 1 and are members
  bool boundary_in_ideal = true;    // n_l in O_M for boundary cells l of B
  bool outside_in_ideal = true;     // n_l in O_M for l in L+ \ B
  std::vector<std::string> findings;
};

/// Degreewise comparison of J_M with the link cohomology of the
/// Stanley-Reisner complex.
CanonicalTable canonical_degree_table(const AffineOM& m, Field field, unsigned workers = 1);

struct CellCohomology {
  std::size_t cell = 0;
  SignVector covector;
  int dim = 0;
  std::vector<AbelianGroup> groups;  // degrees -1..dim X
  bool interior_pattern = false;     // Z in degree dim X, zero elsewhere
  bool zero_pattern = false;         // all zero
  bool combinatorial_boundary = false;
  bool omega_match = true;           // top rank equals dim [J_M] at deg n_l
};

struct ManifoldReport {
  bool asserted = false;             // ring CM and full rank
  std::vector<CellCohomology> cells;
  bool boundary_match = true;        // cohomological boundary == combinatorial
  bool interior_pattern = true;      // every cell is interior or zero pattern
  bool delta_manifold = false;
  std::optional<Face> delta_witness;
  bool delta_boundary_sphere = false;
  std::optional<Face> sphere_witness;
  bool boundary_x_manifold = false;  // ∂X a homology manifold without boundary
  bool boundary_x_sphere = false;    // empirical, never asserted
  std::vector<std::string> findings;  // empty unless asserted
};

ManifoldReport manifold_report(const AffineOM& m, unsigned workers = 1);

struct RegularityVerdict {
  bool no_xy_generator = true;       // no generator divisible by x_i y_i
  bool primes_avoid_pairs = true;    // each facet meets {x_i, y_i} for all i
  std::optional<Monomial> witness;   // generator or facet
  bool ok() const { return no_xy_generator && primes_avoid_pairs; }
};

/// The ideal lies in the family whose quotients have x_i - y_i as a regular
/// sequence: checked on the generators and on the facets of its complex.
RegularityVerdict regularity_precondition_check(const SquarefreeMonomialIdeal& ideal);

}  // namespace omx

#endif
