#include "omx/om.hpp"

#include <algorithm>
#include <unordered_map>

namespace omx {

namespace {

std::size_t common_size(std::span<const SignVector> vectors) {
  if (vectors.empty())
    return 0;
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n)
      throw std::invalid_argument("sign vectors live on different ground sets");
  return n;
}

std::vector<SignVector> sorted_unique(std::vector<SignVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::string AxiomVerdict::describe() const {
  if (ok)
    return "covector axioms hold";
  std::string s = axiom + " fails";
  if (first)
    s += " at " + first->str();
  if (second)
    s += ", " + second->str();
  if (element)
    s += " (element " + std::to_string(*element) + ")";
  return s;
}

AxiomVerdict check_covector_axioms(std::span<const SignVector> input) {
  const std::size_t n = common_size(input);
  const std::vector<SignVector> vectors = sorted_unique({input.begin(), input.end()});
  const std::unordered_set<SignVector, SignVectorHash> set(vectors.begin(), vectors.end());
  AxiomVerdict verdict;

  if (!set.contains(SignVector(n))) {
    verdict.ok = false;
    verdict.axiom = "L0";
    return verdict;
  }
  for (const auto& l : vectors)
    if (!set.contains(-l)) {
      verdict.ok = false;
      verdict.axiom = "L1";
      verdict.first = l;
      return verdict;
    }
  for (const auto& l : vectors)
    for (const auto& m : vectors)
      if (!set.contains(compose(l, m))) {
        verdict.ok = false;
        verdict.axiom = "L2";
        verdict.first = l;
        verdict.second = m;
        return verdict;
      }

  // L3. The condition is symmetric in (l, m), so unordered pairs suffice.
  // One sweep over nu collects every e in S(l, m) it eliminates.
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const auto& l = vectors[i];
      const auto& m = vectors[j];
      const std::uint64_t sep = separation(l, m).bits();
      if (sep == 0)
        continue;
      const std::uint64_t keep = ElementSet::range(n).bits() & ~sep;
      const SignVector target = compose(l, m);
      const std::uint64_t tp = target.plus_bits() & keep, tm = target.minus_bits() & keep;
      std::uint64_t eliminated = 0;
      for (const auto& nu : vectors) {
        if ((nu.plus_bits() & keep) != tp || (nu.minus_bits() & keep) != tm)
          continue;
        eliminated |= sep & ~(nu.plus_bits() | nu.minus_bits());
        if (eliminated == sep)
          break;
      }
      if (eliminated != sep) {
        verdict.ok = false;
        verdict.axiom = "L3";
        verdict.first = l;
        verdict.second = m;
        verdict.element = ElementSet(sep & ~eliminated).elements().front();
        return verdict;
      }
    }
  return verdict;
}

std::vector<SignVector> minimal_by_support(std::span<const SignVector> vectors) {
  std::vector<SignVector> out;
  for (const auto& v : vectors) {
    const ElementSet s = v.support();
    bool minimal = true;
    for (const auto& w : vectors) {
      const ElementSet t = w.support();
      if (t != s && t.is_subset_of(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.push_back(v);
  }
  return sorted_unique(std::move(out));
}

std::vector<SignVector> cocircuits(std::span<const SignVector> covectors) {
  std::vector<SignVector> nonzero;
  for (const auto& v : covectors)
    if (!v.is_zero())
      nonzero.push_back(v);
  return minimal_by_support(nonzero);
}

std::vector<SignVector> minimal_by_order(std::span<const SignVector> covectors) {
  std::vector<SignVector> out;
  for (const auto& v : covectors) {
    if (v.is_zero())
      continue;
    bool minimal = true;
    for (const auto& w : covectors)
      if (!w.is_zero() && less(w, v)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(v);
  }
  return sorted_unique(std::move(out));
}

std::vector<SignVector> span_from_cocircuits(std::span<const SignVector> cocircuit_set, bool validate) {
  const std::size_t n = common_size(cocircuit_set);
  std::unordered_set<SignVector, SignVectorHash> seen;
  std::vector<SignVector> order;
  auto push = [&](const SignVector& v) {
    if (seen.insert(v).second)
      order.push_back(v);
  };
  push(SignVector(n));
  for (const auto& c : cocircuit_set)
    push(c);
  // Every composition c_1 o ... o c_k arises by extending on the right.
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& c : cocircuit_set) {
      const SignVector v = order[k];
      push(compose(v, c));
    }
  std::vector<SignVector> out = sorted_unique(std::move(order));
  if (validate) {
    const AxiomVerdict verdict = check_covector_axioms(out);
    if (!verdict.ok)
      throw InvalidOrientedMatroid("composition closure of the cocircuits is not a covector set: " +
                                   verdict.describe());
  }
  return out;
}

int chain_rank(std::span<const SignVector> vectors) {
  std::vector<SignVector> v;
  for (const auto& x : vectors)
    if (!x.is_zero())
      v.push_back(x);
  if (v.empty())
    return -1;
  std::sort(v.begin(), v.end());  // support size is the primary key
  std::vector<int> length(v.size(), 1);
  int best = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (length[j] + 1 > length[i] && less(v[j], v[i]))
        length[i] = length[j] + 1;
    best = std::max(best, length[i]);
  }
  return best;
}

OrientedMatroid OrientedMatroid::from_covectors(std::vector<std::string> names, std::vector<SignVector> covectors,
                                                bool validate) {
  const std::size_t n = names.size();
  for (const auto& v : covectors)
    if (v.size() != n)
      throw std::invalid_argument("covector length " + std::to_string(v.size()) + " does not match " +
                                  std::to_string(n) + " elements");
  OrientedMatroid m;
  m.names_ = std::move(names);
  m.covectors_ = sorted_unique(std::move(covectors));
  if (m.covectors_.empty() || !m.covectors_.front().is_zero())
    m.covectors_.insert(m.covectors_.begin(), SignVector(n));
  if (validate) {
    const AxiomVerdict verdict = check_covector_axioms(m.covectors_);
    if (!verdict.ok)
      throw InvalidOrientedMatroid("not a covector set: " + verdict.describe());
  }
  m.lookup_ = {m.covectors_.begin(), m.covectors_.end()};
  m.cocircuits_ = omx::cocircuits(m.covectors_);
  m.rank_ = static_cast<std::size_t>(std::max(0, chain_rank(m.covectors_)));

  ElementSet used;
  for (const auto& v : m.covectors_) {
    used = used | v.support();
    if (v.support().size() == 1)
      m.coloops_ = m.coloops_ | v.support();
  }
  m.loops_ = ElementSet::range(n) - used;
  return m;
}

OrientedMatroid OrientedMatroid::from_cocircuits(std::vector<std::string> names, std::vector<SignVector> cocircuit_set,
                                                 bool validate) {
  for (const auto& c : cocircuit_set) {
    if (c.size() != names.size())
      throw std::invalid_argument("cocircuit " + c.str() + " does not match " + std::to_string(names.size()) +
                                  " elements");
    if (c.is_zero())
      throw InvalidOrientedMatroid("the zero vector is not a cocircuit");
  }
  auto covectors = span_from_cocircuits(cocircuit_set, validate);
  OrientedMatroid m = from_covectors(std::move(names), std::move(covectors), false);
  if (validate && m.cocircuits_ != sorted_unique(std::move(cocircuit_set)))
    throw InvalidOrientedMatroid("given cocircuits are not the minimal covectors of their span");
  return m;
}

std::size_t OrientedMatroid::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw std::invalid_argument("unknown element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

OrientedMatroid restriction(const OrientedMatroid& m, ElementSet f) {
  std::vector<std::string> names;
  for (auto e : f.elements()) {
    if (e >= m.size())
      throw std::invalid_argument("restriction: element outside the ground set");
    names.push_back(m.names()[e]);
  }
  std::vector<SignVector> covectors;
  covectors.reserve(m.covectors().size());
  for (const auto& v : m.covectors())
    covectors.push_back(restrict(v, f));
  return OrientedMatroid::from_covectors(std::move(names), std::move(covectors), false);
}

OrientedMatroid contraction(const OrientedMatroid& m, ElementSet a) {
  if (!a.is_subset_of(ElementSet::range(m.size())))
    throw std::invalid_argument("contraction: element outside the ground set");
  const ElementSet rest = ElementSet::range(m.size()) - a;
  std::vector<std::string> names;
  for (auto e : rest.elements())
    names.push_back(m.names()[e]);
  std::vector<SignVector> covectors;
  for (const auto& v : m.covectors())
    if ((v.support() & a).empty())
      covectors.push_back(restrict(v, rest));
  return OrientedMatroid::from_covectors(std::move(names), std::move(covectors), false);
}

std::vector<SignVector> restricted_cocircuits(const OrientedMatroid& m, ElementSet f) {
  std::vector<SignVector> r;
  for (const auto& c : m.cocircuits())
    if (!(c.support() & f).empty())
      r.push_back(restrict(c, f));
  return minimal_by_support(r);
}

bool is_general_position(const OrientedMatroid& m, std::size_t e) {
  if (e >= m.size())
    throw std::invalid_argument("is_general_position: element outside the ground set");
  if (m.coloops().contains(e))
    return false;
  const ElementSet rest = ElementSet::range(m.size()) - ElementSet{e};
  std::unordered_set<SignVector, SignVectorHash> through_e;
  for (const auto& c : m.cocircuits())
    if (c.support().contains(e))
      through_e.insert(restrict(c, rest));
  for (const auto& c : restricted_cocircuits(m, rest))
    if (!through_e.contains(c))
      return false;
  return true;
}

AffineOM::AffineOM(OrientedMatroid om, std::size_t g, bool allow_loop_g) : om_(std::move(om)), g_(g) {
  if (g_ >= om_.size())
    throw std::invalid_argument("distinguished element outside the ground set");
  if (g_is_loop() && !allow_loop_g)
    throw std::invalid_argument("distinguished element '" + om_.names()[g_] + "' is a loop");
  for (std::size_t e = 0; e < om_.size(); ++e)
    if (e != g_)
      finite_.push_back(e);
}

ElementSet AffineOM::finite_set() const { return ElementSet::range(om_.size()) - ElementSet{g_}; }

std::vector<SignVector> AffineOM::positive_part() const {
  std::vector<SignVector> out;
  for (const auto& v : om_.covectors())
    if (v[g_] == Sign::plus)
      out.push_back(v);
  return out;
}

bool is_general_position(const AffineOM& m) { return !m.g_is_loop() && is_general_position(m.om(), m.g()); }

std::vector<SignVector> bounded_complex(const AffineOM& m) {
  if (m.g_is_loop() || m.g_is_coloop())
    return {};
  // Every nonzero covector lies above some cocircuit, so (0, l] stays in L+
  // exactly when no cocircuit below l vanishes at g.
  std::vector<SignVector> out;
  for (const auto& l : m.om().covectors()) {
    if (l[m.g()] != Sign::plus)
      continue;
    bool bounded = true;
    for (const auto& c : m.om().cocircuits())
      if (c[m.g()] == Sign::zero && leq(c, l)) {
        bounded = false;
        break;
      }
    if (bounded)
      out.push_back(l);
  }
  return out;
}

FullRankInfo full_rank_info(const AffineOM& m) {
  FullRankInfo info;
  const auto bounded = bounded_complex(m);
  info.bounded_rank = bounded.empty() ? -1 : chain_rank(bounded) - 1;
  ElementSet covered;
  for (const auto& l : bounded)
    covered = covered | l.support();
  info.uncovered = ElementSet::range(m.om().size()) - m.om().loops() - covered;
  info.full_rank = !bounded.empty() && info.uncovered.empty();
  return info;
}

AffineOM contract_element(const AffineOM& m, std::size_t i) {
  if (i == m.g())
    throw std::invalid_argument("contract_element: cannot contract the distinguished element");
  OrientedMatroid c = contraction(m.om(), ElementSet{i});
  const std::size_t g = m.g() > i ? m.g() - 1 : m.g();
  return AffineOM(std::move(c), g, true);
}

CircuitFamily underlying_restricted_circuits(const AffineOM& m, bool positive_only) {
  const ElementSet finite = m.finite_set();
  std::vector<SignVector> restricted;
  if (positive_only) {
    for (const auto& c : m.om().cocircuits())
      if (c[m.g()] == Sign::plus)
        restricted.push_back(restrict(c, finite));
  } else {
    restricted = restricted_cocircuits(m.om(), finite);
  }
  std::vector<ElementSet> supports;
  for (const auto& v : restricted)
    supports.push_back(v.support());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  CircuitFamily family;
  family.ground_size = m.n();
  if (positive_only) {
    // Taken as is: whether this family is an antichain is part of what the
    // circuit test decides.
    family.circuits = std::move(supports);
    return family;
  }
  for (const auto& s : supports) {
    bool minimal = true;
    for (const auto& t : supports)
      if (t != s && t.is_subset_of(s)) {
        minimal = false;
        break;
      }
    if (minimal)
      family.circuits.push_back(s);
  }
  return family;
}

CircuitVerdict check_circuit_axioms(const CircuitFamily& c) {
  const ElementSet ground = ElementSet::range(c.ground_size);
  for (const auto& x : c.circuits) {
    if (x.empty())
      return {false, "the empty set is a member"};
    if (!x.is_subset_of(ground))
      return {false, "member outside the ground set"};
  }
  for (std::size_t i = 0; i < c.circuits.size(); ++i)
    for (std::size_t j = 0; j < c.circuits.size(); ++j)
      if (i != j && c.circuits[i].is_subset_of(c.circuits[j]))
        return {false, "member contained in another member"};
  for (std::size_t i = 0; i < c.circuits.size(); ++i)
    for (std::size_t j = i + 1; j < c.circuits.size(); ++j) {
      const ElementSet both = c.circuits[i] & c.circuits[j];
      for (auto e : both.elements()) {
        const ElementSet target = (c.circuits[i] | c.circuits[j]) - ElementSet{e};
        const bool found = std::any_of(c.circuits.begin(), c.circuits.end(),
                                       [&](const ElementSet& z) { return z.is_subset_of(target); });
        if (!found)
          return {false, "elimination fails for two members sharing element " + std::to_string(e)};
      }
    }
  return {};
}

std::size_t matroid_rank_from_circuits(const CircuitFamily& c) {
  if (c.ground_size > 24)
    throw std::length_error("matroid_rank_from_circuits: ground set too large for enumeration");
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << c.ground_size;
  for (std::uint64_t s = 0; s < limit; ++s) {
    const ElementSet set(s);
    if (set.size() <= best)
      continue;
    const bool independent = std::none_of(c.circuits.begin(), c.circuits.end(),
                                          [&](const ElementSet& z) { return z.is_subset_of(set); });
    if (independent)
      best = set.size();
  }
  return best;
}

}  // namespace omx
