// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace omx;

namespace {

/// Collects failed expectations with a short reason each.
class Ledger {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok)
      failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

const std::vector<Field> kFields = standard_fields();

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

void worked_example_one(Ledger& l) {
  const auto m = testing::fixture("cm-arr-1");
  l.expect(as_set(matroid_ideal(m).formatted()) == as_set({"x1*x2", "x1*x3", "y2*x3", "y4"}), "O_M generators");
  l.expect(is_general_position(m), "general position");
  const auto r = genpos_report(m, kFields);
  l.expect(r.conditions() == std::vector<bool>(5, true), "all five conditions true");
  l.expect(r.expected_dim == 5 && r.expected_dim_bar == 1, "dims (2n-r, n-r) = (5, 1)");
  l.expect(r.krull_dim == 5 && r.krull_dim_bar == 1, "Krull dimensions of both quotients");
  l.expect(r.findings.empty(), "no findings");
}

void worked_example_two(Ledger& l) {
  const auto m = testing::fixture("cm-arr-2");
  l.expect(as_set(matroid_ideal(m).formatted()) == as_set({"x1*x4", "x1*y2", "x1*y3", "y2*x3", "y2*y4"}),
           "O_M generators");
  l.expect(!is_general_position(m), "general position false");
  const auto r = genpos_report(m, kFields);
  l.expect(r.full_rank, "full rank");
  l.expect(r.conditions() == std::vector<bool>(5, false), "all five conditions false");
  l.expect(r.findings.empty(), "no findings");
}

void nongeneric_example(Ledger& l) {
  const auto m = testing::fixture("nongp-cm-arr");
  l.expect(as_set(matroid_ideal(m).formatted()) == as_set({"x1", "x2"}), "O_M = (x1, x2)");
  l.expect(!is_general_position(m), "general position false");
  const auto res = cellular_resolution(m);
  const auto d = complex_from_ideal(matroid_ideal(m));
  for (const auto& f : kFields) {
    l.expect(is_cm_cellular(res.complex, f).ok, "cellular CM over " + f.name());
    l.expect(is_cm_reisner(d, f), "Reisner CM over " + f.name());
  }
  l.expect(!is_full_rank(m), "full rank false");
}

void square_example(Ledger& l) {
  const auto m = testing::fixture("square");
  const auto bar = specialize(matroid_ideal(m));
  l.expect(as_set(bar.formatted()) == as_set({"x1*x3", "x1*x4", "x2*x3", "x2*x4"}), "specialized generators");
  const auto d = complex_from_ideal(bar);
  l.expect(d.facets() == std::vector<Face>{0b0011, 0b1100}, "two disjoint edges");
  const auto res = cellular_resolution(m);
  const auto subdivision = barycentric_pair(res.complex, 1).whole;
  for (const auto& f : kFields) {
    l.expect(!is_cm_reisner(d, f), "S/O-bar not CM over " + f.name());
    l.expect(!ring_is_cm(m, f), "S~/O not CM over " + f.name());
    l.expect(!is_cm_cellular(res.complex, f).ok, "cellular criterion agrees over " + f.name());
    l.expect(is_cm_reisner(subdivision, f), "X(B) CM over " + f.name());
  }
}

void four_lines(Ledger& l) {
  const auto m = testing::fixture("four-generic-lines");
  const auto res = cellular_resolution(m);
  l.expect(res.betti == std::vector<std::size_t>{1, 6, 8, 3}, "Betti numbers 1, 6, 8, 3");
  l.expect(check_faithful(res.complex).faithful, "faithful");
  for (const auto& f : kFields)
    l.expect(check_acyclic(res.complex, f).ok, "acyclic over " + f.name());
  l.expect(strata(bounded_complex(m), m.om().covectors()).topes.size() == 3, "3 topes");
}

struct BatteryTally {
  std::size_t arrangements = 0;
  std::size_t full_rank = 0;
  std::size_t cm = 0;
  std::size_t contractions = 0;
};

void battery_case(const Arrangement& a, Ledger& l, BatteryTally& t) {
  const auto m = om_from_vectors(a);
  const std::string tag = a.name + ": ";
  ++t.arrangements;
  const auto& cov = m.om().covectors();
  l.expect(check_covector_axioms(cov).ok, tag + "covector axioms");
  auto respanned = span_from_cocircuits(cocircuits(cov));
  std::sort(respanned.begin(), respanned.end());
  l.expect(respanned == cov, tag + "span of cocircuits");
  l.expect(cocircuits(span_from_cocircuits(m.om().cocircuits())) == m.om().cocircuits(), tag + "cocircuits of span");

  const auto res = cellular_resolution(m);
  CellSet all(res.complex.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto h = integral_cohomology(subcomplex_cochains(res.complex, all));
  l.expect(std::all_of(h.begin(), h.end(), [](const AbelianGroup& g) { return g.is_zero(); }),
           tag + "X(B) has zero reduced integral cohomology");

  const auto r = genpos_report(m, kFields);
  if (r.full_rank) {
    ++t.full_rank;
    l.expect(r.all_agree(), tag + "conditions agree under full rank");
  }
  l.expect(r.findings.empty(), tag + "no contradictions: " + (r.findings.empty() ? "" : r.findings.front()));
  for (const auto& v : r.by_field) {
    const auto& q = r.by_field.front();
    l.expect(v.cellular == q.cellular && v.reisner == q.reisner && v.reisner_bar == q.reisner_bar,
             tag + "CM verdict over " + v.field.name() + " matches Q");
  }

  const bool cm = r.ring_cm;
  if (cm) {
    ++t.cm;
    const auto bar = complex_from_ideal(specialize(matroid_ideal(m)));
    l.expect(is_matroid_complex(bar), tag + "Delta(O-bar) is a matroid complex");
    const auto b = bounded_complex(m);
    ElementSet used;
    for (const auto& v : b)
      used = used | v.support();
    for (std::size_t i : (used & m.finite_set()).elements()) {
      const auto c = contract_element(m, i);
      ++t.contractions;
      l.expect(c.om().rank() + 1 == m.om().rank(), tag + "contraction drops the rank");
      for (const auto& f : kFields)
        l.expect(ring_is_cm(c, f), tag + "CM after contracting " + m.om().names()[i] + " over " + f.name());
    }
  }
  const auto reg = regularity_precondition_check(matroid_ideal(m));
  l.expect(reg.ok(), tag + "regular sequence preconditions");
}

void random_battery(Ledger& l, std::string& note) {
  std::mt19937_64 rng(20240611);
  BatteryTally t;
  std::size_t index = 0;
  while (t.arrangements < 240) {
    auto a = testing::random_arrangement(rng, index++);
    const auto probe = om_from_vectors(a, true);
    if (probe.g_is_coloop() || probe.g_is_loop())
      continue;
    try {
      battery_case(a, l, t);
    } catch (const std::exception& e) {
      l.expect(false, a.name + ": threw " + e.what());
    }
  }
  std::ostringstream s;
  s << t.arrangements << " arrangements, " << t.full_rank << " full rank, " << t.cm << " CM, " << t.contractions
    << " contractions";
  note = s.str();
}

void cross_validate(const AffineOM& m, const std::string& name, Ledger& l, std::size_t& cells) {
  const auto res = cellular_resolution(m);
  const auto& x = res.complex;
  for (std::size_t s = 1; s < x.size(); ++s) {
    const auto bp = barycentric_pair(x, s);
    for (const auto& f : {Field::rationals(), Field::prime(2)}) {
      int lo = 0;
      const auto rel = relative_cohomology(bp.whole, bp.away, f, &lo);
      const auto cell = cohomology(cochain_complex(x, order_filter(x, s)), f);
      bool same = true;
      for (int d = -1; d <= x.dimension() + 1; ++d)
        same = same && at_degree(rel, lo, d) == at_degree(cell, -1, d);
      l.expect(same, name + " cell " + std::to_string(s) + " over " + f.name());
    }
    ++cells;
  }
}

void cohomology_cross_validation(Ledger& l, std::string& note) {
  std::size_t cells = 0;
  for (const auto& name : testing::fixture_names()) {
    const auto m = testing::fixture(name);
    if (bounded_complex(m).empty())
      continue;
    cross_validate(m, name, l, cells);
  }
  std::mt19937_64 rng(99);
  std::size_t extra = 0;
  for (std::size_t i = 0; extra < 40; ++i) {
    const auto a = testing::random_arrangement(rng, i);
    const auto m = om_from_vectors(a, true);
    if (m.g_is_coloop() || m.g_is_loop() || bounded_complex(m).size() > 60)
      continue;
    cross_validate(m, a.name, l, cells);
    ++extra;
  }
  note = std::to_string(cells) + " cells";
}

void manifold_diagnostics(Ledger& l, std::string& note) {
  std::vector<std::string> asserted;
  for (const auto& name : testing::fixture_names()) {
    const auto m = testing::fixture(name);
    if (bounded_complex(m).empty())
      continue;
    const auto r = manifold_report(m);
    if (!r.asserted)
      continue;
    asserted.push_back(name);
    const std::string tag = name + ": ";
    for (const auto& c : r.cells) {
      l.expect(c.interior_pattern || c.zero_pattern, tag + "cell " + c.covector.str() + " pattern");
      l.expect(c.interior_pattern != c.combinatorial_boundary, tag + "cell " + c.covector.str() + " boundary");
      l.expect(c.omega_match, tag + "cell " + c.covector.str() + " canonical degree");
    }
    l.expect(r.boundary_match, tag + "cohomological boundary equals combinatorial boundary");
    l.expect(r.boundary_x_manifold, tag + "boundary of X is a homology manifold");
    l.expect(r.delta_manifold, tag + "Delta_M is a homology manifold over Z");
    l.expect(r.delta_boundary_sphere, tag + "boundary of Delta_M is a homology sphere");
    l.expect(r.findings.empty(), tag + "no manifold findings");
    for (const auto& f : kFields) {
      const auto t = canonical_degree_table(m, f);
      l.expect(t.degrees_match, tag + "canonical degrees over " + f.name());
      l.expect(t.at_most_one, tag + "canonical degrees at most one over " + f.name());
      l.expect(t.facets_member, tag + "facets give one over " + f.name());
      l.expect(t.boundary_in_ideal, tag + "boundary monomials in O_M");
      l.expect(t.outside_in_ideal, tag + "monomials outside B in O_M");
    }
  }
  const std::vector<std::string> expected{"cm-arr-1", "four-generic-lines", "tetrahedron", "segment"};
  l.expect(asserted == expected, "CM full-rank fixtures are exactly the expected ones");
  note = std::to_string(asserted.size()) + " CM fixtures";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Ledger&, std::string&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "worked example one: ideal, general position, five conditions, dims",
       [](Ledger& l, std::string&) { worked_example_one(l); }},
      {2, "worked example two: ideal, full rank, five conditions false",
       [](Ledger& l, std::string&) { worked_example_two(l); }},
      {3, "non-generic CM example without full rank", [](Ledger& l, std::string&) { nongeneric_example(l); }},
      {4, "square: converse failure", [](Ledger& l, std::string&) { square_example(l); }},
      {5, "four generic lines: Betti numbers, faithful, acyclic", [](Ledger& l, std::string&) { four_lines(l); }},
      {6, "randomized battery", random_battery},
      {7, "cellular vs barycentric cohomology", cohomology_cross_validation},
      {8, "interior, boundary, manifold and canonical diagnostics", manifold_diagnostics},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Ledger l;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(l, note);
    } catch (const std::exception& e) {
      l.expect(false, std::string("threw: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    all = all && l.ok();
    std::cout << (l.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << l.checks()
              << " checks";
    if (!note.empty())
      std::cout << "; " << note;
    std::cout << "; " << ms << " ms)\n";
    for (std::size_t i = 0; i < l.failures().size() && i < 10; ++i)
      std::cout << "    " << l.failures()[i] << "\n";
  }
  return all ? 0 : 1;
}
