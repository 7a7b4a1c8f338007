#ifndef OMX_OM_HPP
#define OMX_OM_HPP

#include "omx/signvec.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace omx {

/// Raised when sign-vector data does not describe an oriented matroid.
class InvalidOrientedMatroid : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct AxiomVerdict {
  bool ok = true;
  std::string axiom;  // "L0".."L3" when !ok
  std::optional<SignVector> first;
  std::optional<SignVector> second;
  std::optional<std::size_t> element;

  std::string describe() const;
};

/// Covector axioms L0-L3. L3 is settled by exhaustive search for the
/// eliminating vector, so the cost is cubic in the number of vectors.
AxiomVerdict check_covector_axioms(std::span<const SignVector> vectors);

/// Support-inclusion minimal members (Min in the usual notation).
std::vector<SignVector> minimal_by_support(std::span<const SignVector> vectors);

/// Support-minimal nonzero covectors.
std::vector<SignVector> cocircuits(std::span<const SignVector> covectors);

/// Minimal nonzero elements in the conformal order. Agrees with
/// cocircuits() whenever the input is a covector set.
std::vector<SignVector> minimal_by_order(std::span<const SignVector> covectors);

/// {0} together with all compositions of the given cocircuits. With
/// `validate`, throws InvalidOrientedMatroid if the result breaks an axiom.
std::vector<SignVector> span_from_cocircuits(std::span<const SignVector> cocircuits, bool validate = true);

/// Length of the longest chain of nonzero elements under the conformal
/// order; -1 for an empty set. This is the poset rank of L for a covector set.
int chain_rank(std::span<const SignVector> vectors);

class OrientedMatroid {
public:
  /// `covectors` may contain duplicates; they are removed. With `validate`,
  /// the covector axioms are checked and a failure throws.
  static OrientedMatroid from_covectors(std::vector<std::string> names, std::vector<SignVector> covectors,
                                        bool validate = true);
  static OrientedMatroid from_cocircuits(std::vector<std::string> names, std::vector<SignVector> cocircuits,
                                         bool validate = true);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Sorted canonically.
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const std::vector<SignVector>& cocircuits() const { return cocircuits_; }
  std::size_t rank() const { return rank_; }
  ElementSet loops() const { return loops_; }
  ElementSet coloops() const { return coloops_; }
  bool contains(const SignVector& v) const { return lookup_.contains(v); }
  std::size_t index_of(const std::string& name) const;

private:
  OrientedMatroid() = default;

  std::vector<std::string> names_;
  std::vector<SignVector> covectors_;
  std::vector<SignVector> cocircuits_;
  std::unordered_set<SignVector, SignVectorHash> lookup_;
  std::size_t rank_ = 0;
  ElementSet loops_;
  ElementSet coloops_;
};

/// M|_F: covectors restricted to F.
OrientedMatroid restriction(const OrientedMatroid& m, ElementSet f);

/// M/A: covectors vanishing on A, viewed on E \ A.
OrientedMatroid contraction(const OrientedMatroid& m, ElementSet a);

/// C|_F = Min{ l|_F : l in C, F meets supp(l) }.
std::vector<SignVector> restricted_cocircuits(const OrientedMatroid& m, ElementSet f);

/// e is not a coloop and every cocircuit of M|_{E-e} is the restriction of a
/// cocircuit whose support contains e.
bool is_general_position(const OrientedMatroid& m, std::size_t e);

/// An oriented matroid with a distinguished element g.
class AffineOM {
public:
  /// A loop g is rejected unless `allow_loop_g`; then O_M = 0 and B_M is empty.
  AffineOM(OrientedMatroid om, std::size_t g, bool allow_loop_g = false);

  const OrientedMatroid& om() const { return om_; }
  std::size_t g() const { return g_; }
  /// Number of elements other than g.
  std::size_t n() const { return om_.size() - 1; }
  /// Positions of the elements other than g, in ground order. Variable i of
  /// the polynomial rings corresponds to finite_elements()[i].
  const std::vector<std::size_t>& finite_elements() const { return finite_; }
  ElementSet finite_set() const;

  bool g_is_loop() const { return om_.loops().contains(g_); }
  bool g_is_coloop() const { return om_.coloops().contains(g_); }

  /// L+ = covectors with l(g) = +.
  std::vector<SignVector> positive_part() const;

private:
  OrientedMatroid om_;
  std::size_t g_;
  std::vector<std::size_t> finite_;
};

bool is_general_position(const AffineOM& m);

/// B_M = { l in L+ : (0, l] is contained in L+ }, sorted canonically.
/// Empty when g is a coloop or a loop.
std::vector<SignVector> bounded_complex(const AffineOM& m);

struct FullRankInfo {
  bool full_rank = false;
  int bounded_rank = -1;  // chain rank of B_M; -1 when empty
  ElementSet uncovered;   // non-loops missing from every bounded support
};

FullRankInfo full_rank_info(const AffineOM& m);
inline bool is_full_rank(const AffineOM& m) { return full_rank_info(m).full_rank; }

/// Contraction by one element i != g. The result may have g as a loop.
AffineOM contract_element(const AffineOM& m, std::size_t i);

/// A family of subsets of {0..ground_size-1}; positions refer to
/// AffineOM::finite_elements() when produced from an affine OM.
struct CircuitFamily {
  std::size_t ground_size = 0;
  std::vector<ElementSet> circuits;  // sorted

  bool operator==(const CircuitFamily&) const = default;
};

/// Support family on [n]: with `positive_only`, { supp(l) & [n] : l in C and
/// l(g) = + } without minimalizing; otherwise the supports of C|_[n].
CircuitFamily underlying_restricted_circuits(const AffineOM& m, bool positive_only);

struct CircuitVerdict {
  bool ok = true;
  std::string reason;
};

/// Antichain of nonempty sets plus circuit elimination.
CircuitVerdict check_circuit_axioms(const CircuitFamily& c);

/// Largest subset containing no member of the family.
std::size_t matroid_rank_from_circuits(const CircuitFamily& c);

}  // namespace omx

#endif
