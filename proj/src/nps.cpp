#include "omx/nps.hpp"

#include "omx/parallel.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace omx {

namespace {

std::uint64_t low_bits(std::size_t k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

bool sphere_like(const std::vector<AbelianGroup>& h, int min_degree, int top) {
  for (std::size_t k = 0; k < h.size(); ++k) {
    const int deg = min_degree + static_cast<int>(k);
    if (deg == top ? !h[k].is_integers() : !h[k].is_zero())
      return false;
  }
  // A top degree outside the computed range means the group there is zero.
  return top >= min_degree && top < min_degree + static_cast<int>(h.size());
}

bool all_zero(const std::vector<AbelianGroup>& h) {
  return std::all_of(h.begin(), h.end(), [](const AbelianGroup& g) { return g.is_zero(); });
}

/// Runs `fails` once per distinct cell set { σ : select(a, ρ(σ)) } over all
/// squarefree a in the variables used by the labels. Sets are visited in the
/// order of their first a; the first failure in that order is reported.
template <class Select, class Fails>
SweepVerdict sweep(const CellComplex& x, Select select, Fails fails, unsigned workers) {
  if (!x.has_labels())
    throw std::logic_error("degree sweeps need labels");
  std::uint64_t used = 0;
  for (auto l : x.labels())
    used |= l.bits();
  std::vector<std::pair<Monomial, CellSet>> work;
  std::unordered_set<std::string> seen;
  for (std::uint64_t a = used;; a = (a - 1) & used) {
    CellSet set;
    for (std::size_t s = 0; s < x.size(); ++s)
      if (select(Monomial(a), x.label(s)))
        set.push_back(s);
    std::string key(reinterpret_cast<const char*>(set.data()), set.size() * sizeof(std::size_t));
    if (seen.insert(std::move(key)).second)
      work.emplace_back(Monomial(a), std::move(set));
    if (a == 0)
      break;
  }
  std::vector<std::optional<int>> failure(work.size());
  parallel_for(work.size(), workers, [&](std::size_t i) { failure[i] = fails(work[i].second); });
  SweepVerdict v;
  v.distinct_sets = work.size();
  for (std::size_t i = 0; i < work.size(); ++i)
    if (failure[i]) {
      v.ok = false;
      v.witness = work[i].first;
      v.degree = *failure[i];
      break;
    }
  return v;
}

std::vector<SignVector> positive_cocircuits(const AffineOM& m) {
  std::vector<SignVector> out;
  for (const auto& c : m.om().cocircuits())
    if (c[m.g()] == Sign::plus)
      out.push_back(c);
  return out;
}

}  // namespace

VariableSet ring_variables(const AffineOM& m) {
  std::vector<std::string> names;
  for (auto e : m.finite_elements())
    names.push_back(m.om().names()[e]);
  return VariableSet::xy(names);
}

Monomial positive_monomial(const AffineOM& m, const SignVector& l) {
  const auto& fin = m.finite_elements();
  const std::size_t n = fin.size();
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Sign s = l[fin[i]];
    if (s == Sign::plus)
      bits |= std::uint64_t{1} << i;
    else if (s == Sign::minus)
      bits |= std::uint64_t{1} << (n + i);
  }
  return Monomial(bits);
}

Monomial complement_monomial(const AffineOM& m, const SignVector& l) {
  return Monomial(low_bits(2 * m.n()) & ~positive_monomial(m, l).bits());
}

SquarefreeMonomialIdeal matroid_ideal(const AffineOM& m) {
  std::vector<Monomial> gens;
  if (!m.g_is_loop())
    for (const auto& c : positive_cocircuits(m))
      gens.push_back(positive_monomial(m, c));
  return SquarefreeMonomialIdeal::make(ring_variables(m), std::move(gens));
}

SquarefreeMonomialIdeal specialize(const SquarefreeMonomialIdeal& ideal) {
  if (ideal.vars.size() % 2 != 0)
    throw std::invalid_argument("specialization needs paired x and y variables");
  const std::size_t n = ideal.vars.size() / 2;
  VariableSet x;
  for (std::size_t i = 0; i < n; ++i) {
    x.names.push_back(ideal.vars.names[i]);
    x.sort_keys.emplace_back(i, 0);
  }
  std::vector<Monomial> gens;
  for (auto g : ideal.generators)
    gens.emplace_back((g.bits() | (g.bits() >> n)) & low_bits(n));
  return SquarefreeMonomialIdeal::make(std::move(x), std::move(gens));
}

LabeledResolution cellular_resolution(const AffineOM& m) {
  const auto b = bounded_complex(m);
  if (b.empty())
    throw std::invalid_argument("the bounded complex is empty");
  auto x = incidence_function(CellComplex::from_sign_vectors(b));
  std::vector<Monomial> labels;
  for (const auto& v : x.sign_vectors())
    labels.push_back(positive_monomial(m, v));
  LabeledResolution r{x.with_labels(std::move(labels)), {}, matroid_ideal(m)};
  r.betti.push_back(1);
  for (auto f : r.complex.f_vector())
    r.betti.push_back(f);
  return r;
}

FaithfulVerdict check_faithful(const CellComplex& x) {
  if (!x.has_labels())
    return {false, "no labels", std::nullopt};
  for (std::size_t s = 0; s < x.size(); ++s)
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (s == t)
        continue;
      const Monomial a = x.label(s), b = x.label(t);
      if (a == b && s < t)
        return {false, "two cells share a label", std::make_pair(s, t)};
      if (b.divides(a) && a != b && !x.leq(t, s))
        return {false, "label order not reflected by the cell order", std::make_pair(s, t)};
    }
  return {};
}

SweepVerdict check_acyclic(const CellComplex& x, Field field, unsigned workers) {
  return sweep(
      x, [](Monomial a, Monomial label) { return label.divides(a); },
      [&](const CellSet& y) -> std::optional<int> {
        const bool has_vertex = std::any_of(y.begin(), y.end(), [&](std::size_t s) { return x.dim(s) == 0; });
        if (!has_vertex)
          return std::nullopt;
        const auto c = subcomplex_cochains(x, y);
        const auto h = cohomology(c, field);
        for (std::size_t k = 0; k < h.size(); ++k)
          if (h[k] != 0)
            return c.min_degree + static_cast<int>(k);
        return std::nullopt;
      },
      workers);
}

SweepVerdict is_cm_cellular(const CellComplex& x, Field field, unsigned workers) {
  const int top = x.dimension();
  return sweep(
      x, [](Monomial a, Monomial label) { return a.divides(label); },
      [&](const CellSet& y) -> std::optional<int> {
        const auto c = cochain_complex(x, y);
        const auto h = cohomology(c, field);
        for (std::size_t k = 0; k < h.size(); ++k) {
          const int deg = c.min_degree + static_cast<int>(k);
          if (deg != top && h[k] != 0)
            return deg;
        }
        return std::nullopt;
      },
      workers);
}

bool GenposReport::all_agree() const {
  const auto c = conditions();
  return std::all_of(c.begin(), c.end(), [&](bool v) { return v == c.front(); });
}

GenposReport genpos_report(const AffineOM& m, std::span<const Field> fields, unsigned workers) {
  if (m.g_is_loop() || m.g_is_coloop())
    throw std::invalid_argument("general position report needs g to be neither a loop nor a coloop");
  if (fields.empty())
    throw std::invalid_argument("at least one field is required");
  GenposReport r;
  r.n = m.n();
  r.rank = m.om().rank();
  r.expected_dim = static_cast<int>(2 * r.n) - static_cast<int>(r.rank);
  r.expected_dim_bar = static_cast<int>(r.n) - static_cast<int>(r.rank);
  r.full_rank = is_full_rank(m);

  r.general_position = is_general_position(m);

  const auto ideal = matroid_ideal(m);
  const auto delta = complex_from_ideal(ideal);
  const auto bar = specialize(ideal);
  const auto delta_bar = complex_from_ideal(bar);
  r.krull_dim = delta.dimension() + 1;
  r.krull_dim_bar = delta_bar.dimension() + 1;
  const auto resolution = cellular_resolution(m);

  r.ring_cm = true;
  r.specialized_cm = true;
  for (const auto& f : fields) {
    FieldVerdicts v{f};
    v.cellular = is_cm_cellular(resolution.complex, f, workers).ok;
    v.reisner = is_cm_reisner(delta, f, workers);
    v.reisner_bar = is_cm_reisner(delta_bar, f, workers);
    if (v.cellular != v.reisner)
      r.findings.push_back("cellular and Reisner Cohen-Macaulay tests disagree over " + f.name());
    r.ring_cm = r.ring_cm && v.cellular && v.reisner;
    r.specialized_cm = r.specialized_cm && v.reisner_bar;
    r.by_field.push_back(v);
  }
  for (const auto& v : r.by_field) {
    const auto& first = r.by_field.front();
    if (v.cellular != first.cellular || v.reisner != first.reisner || v.reisner_bar != first.reisner_bar)
      r.findings.push_back("Cohen-Macaulay verdict over " + v.field.name() + " differs from " + first.field.name());
  }

  const auto positive = underlying_restricted_circuits(m, true);
  const auto all = underlying_restricted_circuits(m, false);
  const auto axioms = check_circuit_axioms(positive);
  const std::size_t matroid_rank = axioms.ok ? matroid_rank_from_circuits(positive) : 0;
  r.matroid_circuits = axioms.ok && r.rank <= r.n && matroid_rank == r.n - r.rank;
  if (!axioms.ok)
    r.witnesses.push_back("c4: positive restricted supports are not circuits: " + axioms.reason);
  else if (!r.matroid_circuits)
    r.witnesses.push_back("c4: positive restricted supports form a matroid of rank " + std::to_string(matroid_rank) +
                         ", expected " + std::to_string(r.n - std::min(r.n, r.rank)));
  r.circuit_equality = positive == all;
  if (!r.circuit_equality)
    r.witnesses.push_back("c5: positive restricted supports differ from the restricted cocircuit supports");
  if (!r.general_position)
    r.witnesses.push_back("c1: some restricted cocircuit does not extend through a cocircuit meeting g");
  for (const auto& v : r.by_field) {
    if (!v.cellular || !v.reisner)
      r.witnesses.push_back("c2: not Cohen-Macaulay over " + v.field.name());
    if (!v.reisner_bar)
      r.witnesses.push_back("c3: specialization not Cohen-Macaulay over " + v.field.name());
  }

  // The dimension formulas are part of the theorem, so they are only
  // checked under its hypotheses.
  if (r.full_rank && r.ring_cm && r.krull_dim != r.expected_dim)
    r.findings.push_back("Krull dimension " + std::to_string(r.krull_dim) + " differs from 2n - r = " +
                         std::to_string(r.expected_dim));
  if (r.full_rank && r.specialized_cm && r.krull_dim_bar != r.expected_dim_bar)
    r.findings.push_back("Krull dimension of the specialization " + std::to_string(r.krull_dim_bar) +
                         " differs from n - r = " + std::to_string(r.expected_dim_bar));
  if (r.full_rank && !r.all_agree())
    r.findings.push_back("full rank, yet the five general position conditions disagree");
  return r;
}

bool ring_is_cm(const AffineOM& m, Field field, unsigned workers) {
  if (m.g_is_loop())
    return true;
  if (m.g_is_coloop())
    return false;
  return is_cm_reisner(complex_from_ideal(matroid_ideal(m)), field, workers);
}

SquarefreeMonomialIdeal canonical_ideal(const AffineOM& m) {
  const auto b = bounded_complex(m);
  if (b.empty())
    throw std::invalid_argument("the bounded complex is empty");
  const auto o = matroid_ideal(m);
  const auto st = strata(b, m.om().covectors());
  std::vector<Monomial> gens;
  for (const auto& t : st.topes) {
    const Monomial n = complement_monomial(m, t);
    if (!o.contains(n))
      gens.push_back(n);
  }
  return SquarefreeMonomialIdeal::make(ring_variables(m), std::move(gens));
}

CanonicalTable canonical_degree_table(const AffineOM& m, Field field, unsigned workers) {
  CanonicalTable t;
  const auto o = matroid_ideal(m);
  const auto j = canonical_ideal(m);
  const auto delta = complex_from_ideal(o);
  const int d = delta.dimension();
  const auto& faces = delta.faces();
  t.rows.resize(faces.size());
  parallel_for(faces.size(), workers, [&](std::size_t i) {
    const Face f = faces[i];
    const auto h = reduced_cohomology(link(delta, f), field);
    auto& row = t.rows[i];
    row.face = f;
    row.link_dim = at_degree(h, -1, d - static_cast<int>(face_size(f)));
    row.member = j.contains(Monomial(f)) || o.contains(Monomial(f));
    row.facet = std::find(delta.facets().begin(), delta.facets().end(), f) != delta.facets().end();
  });
  for (const auto& row : t.rows) {
    if (row.link_dim != (row.member ? 1u : 0u))
      t.degrees_match = false;
    if (row.link_dim > 1)
      t.at_most_one = false;
    if (row.facet && !(row.link_dim == 1 && row.member))
      t.facets_member = false;
  }
  const auto b = bounded_complex(m);
  const auto st = strata(b, m.om().covectors());
  for (const auto& l : st.boundary)
    if (!o.contains(complement_monomial(m, l)))
      t.boundary_in_ideal = false;
  const std::unordered_set<SignVector, SignVectorHash> in_b(b.begin(), b.end());
  for (const auto& l : m.positive_part())
    if (!in_b.contains(l) && !o.contains(complement_monomial(m, l)))
      t.outside_in_ideal = false;
  if (!t.degrees_match)
    t.findings.push_back("link cohomology and canonical ideal disagree in some squarefree degree");
  if (!t.at_most_one)
    t.findings.push_back("some link has top cohomology of dimension above 1");
  if (!t.facets_member)
    t.findings.push_back("some facet is not a degree of the canonical ideal");
  if (!t.boundary_in_ideal)
    t.findings.push_back("a boundary cell has its complementary monomial outside O_M");
  if (!t.outside_in_ideal)
    t.findings.push_back("an unbounded positive covector has its complementary monomial outside O_M");
  return t;
}

ManifoldReport manifold_report(const AffineOM& m, unsigned workers) {
  ManifoldReport r;
  const auto o = matroid_ideal(m);
  const auto delta = complex_from_ideal(o);
  const bool cm = ring_is_cm(m, Field::rationals(), workers);
  r.asserted = cm && is_full_rank(m);

  const auto res = cellular_resolution(m);
  const auto& x = res.complex;
  const int top = x.dimension();
  const auto b = bounded_complex(m);
  const auto st = strata(b, m.om().covectors());
  const std::unordered_set<SignVector, SignVectorHash> boundary(st.boundary.begin(), st.boundary.end());
  const auto j = canonical_ideal(m);

  r.cells.resize(x.size() - 1);
  parallel_for(x.size() - 1, workers, [&](std::size_t i) {
    const std::size_t s = i + 1;
    auto& row = r.cells[i];
    row.cell = s;
    row.covector = x.sign_vectors()[s];
    row.dim = x.dim(s);
    const auto c = cochain_complex(x, order_filter(x, s));
    row.groups = integral_cohomology(c);
    row.interior_pattern = sphere_like(row.groups, c.min_degree, top);
    row.zero_pattern = all_zero(row.groups);
    row.combinatorial_boundary = boundary.contains(row.covector);
    const Monomial n = complement_monomial(m, row.covector);
    const std::size_t omega = j.contains(n) && !o.contains(n) ? 1 : 0;
    row.omega_match = at_degree(row.groups, c.min_degree, top).rank == omega;
  });
  for (const auto& row : r.cells) {
    if (!row.interior_pattern && !row.zero_pattern)
      r.interior_pattern = false;
    if (row.interior_pattern == row.combinatorial_boundary)
      r.boundary_match = false;
  }
  if (!r.interior_pattern)
    r.findings.push_back("some cell has local cohomology that is neither Z in the top degree nor zero");
  if (!r.boundary_match)
    r.findings.push_back("cohomological and combinatorial boundaries of the bounded complex differ");
  if (std::any_of(r.cells.begin(), r.cells.end(), [](const CellCohomology& c) { return !c.omega_match; }))
    r.findings.push_back("top local cohomology and the canonical ideal disagree at some cell");

  // Δ_M as a homology manifold with boundary over Z.
  const int d = delta.dimension();
  const auto& faces = delta.faces();
  std::vector<char> ok(faces.size(), 1);
  parallel_for(faces.size(), workers, [&](std::size_t i) {
    const Face f = faces[i];
    if (f == 0)
      return;
    const auto h = reduced_cohomology_integral(link(delta, f));
    const int deg = d - static_cast<int>(face_size(f));
    ok[i] = sphere_like(h, -1, deg) || all_zero(h);
  });
  r.delta_manifold = !delta.is_void();
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (!ok[i]) {
      r.delta_manifold = false;
      r.delta_witness = faces[i];
      break;
    }
  if (!r.delta_manifold)
    r.findings.push_back("the Stanley-Reisner complex is not a homology manifold over Z");

  // ∂Δ_M = { F : m_F not in J_M }, tested as a homology sphere.
  std::vector<Face> boundary_faces;
  for (Face f : faces)
    if (!j.contains(Monomial(f)))
      boundary_faces.push_back(f);
  const auto sigma = SimplicialComplex::from_facets(delta.vertex_count(), boundary_faces);
  r.delta_boundary_sphere = sigma.faces().size() == boundary_faces.size() && sigma.dimension() == d - 1;
  if (!r.delta_boundary_sphere)
    r.findings.push_back("the faces outside the canonical ideal do not form a complex of dimension one less");
  if (r.delta_boundary_sphere) {
    const auto& sf = sigma.faces();
    std::vector<char> sphere_ok(sf.size(), 1);
    parallel_for(sf.size(), workers, [&](std::size_t i) {
      const auto h = reduced_cohomology_integral(link(sigma, sf[i]));
      sphere_ok[i] = sphere_like(h, -1, sigma.dimension() - static_cast<int>(face_size(sf[i])));
    });
    for (std::size_t i = 0; i < sf.size(); ++i)
      if (!sphere_ok[i]) {
        r.delta_boundary_sphere = false;
        r.sphere_witness = sf[i];
        break;
      }
    if (!r.delta_boundary_sphere)
      r.findings.push_back("the boundary of the Stanley-Reisner complex is not a homology sphere over Z");
  }

  // ∂X: manifold without boundary at every cell, and (empirically) a sphere.
  CellSet dx{0};
  for (std::size_t s = 1; s < x.size(); ++s)
    if (boundary.contains(x.sign_vectors()[s]))
      dx.push_back(s);
  const int dx_dim = top - 1;
  r.boundary_x_manifold = true;
  for (std::size_t k = 1; k < dx.size(); ++k) {
    CellSet above;
    for (std::size_t s : dx)
      if (x.leq(dx[k], s))
        above.push_back(s);
    const auto c = cellular_cochains(x, above);
    if (!sphere_like(integral_cohomology(c), c.min_degree, dx_dim)) {
      r.boundary_x_manifold = false;
      break;
    }
  }
  {
    const auto c = subcomplex_cochains(x, dx);
    r.boundary_x_sphere = sphere_like(integral_cohomology(c), c.min_degree, dx_dim);
  }
  if (!r.boundary_x_manifold)
    r.findings.push_back("the boundary of the bounded complex is not a homology manifold without boundary");
  // Outside CM and full rank nothing above is claimed; failures are just data.
  if (!r.asserted)
    r.findings.clear();
  return r;
}

RegularityVerdict regularity_precondition_check(const SquarefreeMonomialIdeal& ideal) {
  RegularityVerdict v;
  if (ideal.vars.size() % 2 != 0)
    throw std::invalid_argument("regularity check needs paired x and y variables");
  const std::size_t n = ideal.vars.size() / 2;
  const std::uint64_t xs = low_bits(n);
  for (auto g : ideal.generators)
    if ((g.bits() & (g.bits() >> n) & xs) != 0) {
      v.no_xy_generator = false;
      v.witness = g;
      return v;
    }
  const auto delta = complex_from_ideal(ideal);
  for (Face f : delta.facets())
    if (((f | (f >> n)) & xs) != xs) {
      v.primes_avoid_pairs = false;
      v.witness = Monomial(f);
      return v;
    }
  return v;
}

}  // namespace omx
