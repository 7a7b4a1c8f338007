#include "omx/sr.hpp"

#include "omx/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace omx {

namespace {

bool face_less(Face a, Face b) {
  const auto sa = face_size(a), sb = face_size(b);
  return sa != sb ? sa < sb : a < b;
}

void sort_faces(std::vector<Face>& v) {
  std::sort(v.begin(), v.end(), face_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Face all_vertices(std::size_t n) { return n >= 64 ? ~Face{0} : (Face{1} << n) - 1; }

/// Vertex v's position among the vertices of f.
int position_in(Face f, std::size_t v) { return std::popcount(f & ((Face{1} << v) - 1)); }

/// Cochains on an explicit list of faces sorted by size; degree = size - 1.
CochainComplex cochains_on(const std::vector<Face>& faces, int min_degree, int max_degree) {
  CochainComplex c;
  c.min_degree = min_degree;
  if (max_degree < min_degree)
    return c;
  const auto levels = static_cast<std::size_t>(max_degree - min_degree + 1);
  std::vector<std::vector<Face>> by_level(levels);
  for (Face f : faces) {
    const int deg = static_cast<int>(face_size(f)) - 1;
    if (deg < min_degree || deg > max_degree)
      throw std::logic_error("cochains_on: face outside the degree range");
    by_level[static_cast<std::size_t>(deg - min_degree)].push_back(f);
  }
  std::vector<std::unordered_map<Face, std::size_t>> index(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    c.dims.push_back(by_level[k].size());
    for (std::size_t j = 0; j < by_level[k].size(); ++j)
      index[k].emplace(by_level[k][j], j);
  }
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    IntMatrix d(by_level[k + 1].size(), by_level[k].size());
    for (std::size_t row = 0; row < by_level[k + 1].size(); ++row) {
      const Face g = by_level[k + 1][row];
      for (Face b = g; b; b &= b - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(b));
        const auto it = index[k].find(g & ~(Face{1} << v));
        if (it == index[k].end())
          continue;  // facet of g lies in the removed subcomplex
        d(row, it->second) = position_in(g, v) % 2 == 0 ? 1 : -1;
      }
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, std::vector<Face> generators) {
  if (vertex_count > 64)
    throw std::length_error("simplicial complexes are limited to 64 vertices");
  const Face all = all_vertices(vertex_count);
  for (Face g : generators)
    if (g & ~all)
      throw std::invalid_argument("face uses a vertex beyond the vertex count");
  sort_faces(generators);
  SimplicialComplex d;
  d.vertex_count_ = vertex_count;
  // Larger faces come later, so a generator is maximal iff no later one
  // contains it.
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < generators.size() && maximal; ++j)
      if ((generators[i] & ~generators[j]) == 0)
        maximal = false;
    if (maximal)
      d.facets_.push_back(generators[i]);
  }
  std::unordered_set<Face> seen;
  for (Face f : d.facets_) {
    for (Face s = f;; s = (s - 1) & f) {
      if (seen.insert(s).second)
        d.faces_.push_back(s);
      if (s == 0)
        break;
    }
  }
  sort_faces(d.faces_);
  return d;
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
  SimplicialComplex d;
  d.vertex_count_ = vertex_count;
  return d;
}

SimplicialComplex SimplicialComplex::simplex(std::size_t vertex_count) {
  return from_facets(vertex_count, {all_vertices(vertex_count)});
}

bool SimplicialComplex::contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f, face_less); }

int SimplicialComplex::dimension() const {
  if (faces_.empty())
    return -2;
  return static_cast<int>(face_size(faces_.back())) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Face f) { return face_size(f) == face_size(facets_.back()); });
}

Face SimplicialComplex::vertex_support() const {
  Face out = 0;
  for (Face f : facets_)
    out |= f;
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(dimension() + 2));
  for (Face f : faces_)
    ++out[face_size(f)];
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (Face f : faces_)
    if (f != 0)
      chi += face_size(f) % 2 == 1 ? 1 : -1;
  return chi;
}

std::vector<Face> SimplicialComplex::minimal_nonfaces() const {
  if (faces_.empty())
    return {0};
  std::unordered_set<Face> faces(faces_.begin(), faces_.end());
  std::vector<Face> out;
  std::unordered_set<Face> seen;
  for (Face g : faces_) {
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      const Face bit = Face{1} << v;
      if (g & bit)
        continue;
      const Face f = g | bit;
      if (faces.contains(f) || !seen.insert(f).second)
        continue;
      bool minimal = true;
      for (Face b = f; b && minimal; b &= b - 1)
        minimal = faces.contains(f & ~(b & -b));
      if (minimal)
        out.push_back(f);
    }
  }
  sort_faces(out);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j)
        continue;
      if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i))
        keep = false;
    }
    if (keep)
      out.push_back(gens[i]);
  }
  return out;
}

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::make(VariableSet vars, std::vector<Monomial> gens) {
  const Face all = all_vertices(vars.size());
  for (auto m : gens)
    if (m.bits() & ~all)
      throw std::invalid_argument("monomial uses a variable outside the ring");
  SquarefreeMonomialIdeal ideal{std::move(vars), minimalize(std::move(gens))};
  std::sort(ideal.generators.begin(), ideal.generators.end(),
            [&](Monomial a, Monomial b) { return ideal.vars.print_less(a, b); });
  return ideal;
}

bool SquarefreeMonomialIdeal::contains(Monomial m) const {
  return std::any_of(generators.begin(), generators.end(), [&](Monomial g) { return g.divides(m); });
}

std::vector<std::string> SquarefreeMonomialIdeal::formatted() const {
  std::vector<std::string> out;
  for (auto g : generators)
    out.push_back(vars.format(g));
  return out;
}

SimplicialComplex complex_from_ideal(const SquarefreeMonomialIdeal& ideal) {
  const std::size_t n = ideal.vars.size();
  if (ideal.is_unit())
    return SimplicialComplex::void_complex(n);
  auto is_face = [&](Face f) { return !ideal.contains(Monomial(f)); };
  // Each face is reached once, from the face obtained by dropping its
  // largest vertex.
  std::vector<Face> maximal;
  std::vector<Face> stack{0};
  while (!stack.empty()) {
    const Face f = stack.back();
    stack.pop_back();
    bool extendable = false;
    for (std::size_t v = 0; v < n; ++v) {
      const Face bit = Face{1} << v;
      if (f & bit)
        continue;
      if (!is_face(f | bit))
        continue;
      extendable = true;
      if (f < bit)  // v is above every vertex of f
        stack.push_back(f | bit);
    }
    if (!extendable)
      maximal.push_back(f);
  }
  return SimplicialComplex::from_facets(n, std::move(maximal));
}

SquarefreeMonomialIdeal ideal_from_complex(const SimplicialComplex& d, VariableSet vars) {
  if (vars.size() != d.vertex_count())
    throw std::invalid_argument("variable count differs from the vertex count");
  std::vector<Monomial> gens;
  for (Face f : d.minimal_nonfaces())
    gens.emplace_back(f);
  return SquarefreeMonomialIdeal::make(std::move(vars), std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& d, Face f) {
  if (!d.contains(f))
    throw std::invalid_argument("link: not a face of the complex");
  std::vector<Face> gens;
  for (Face h : d.facets())
    if ((f & ~h) == 0)
      gens.push_back(h & ~f);
  return SimplicialComplex::from_facets(d.vertex_count(), std::move(gens));
}

SimplicialComplex restrict(const SimplicialComplex& d, Face vertices) {
  if (d.is_void())
    return d;
  std::vector<Face> gens;
  for (Face h : d.facets())
    gens.push_back(h & vertices);
  return SimplicialComplex::from_facets(d.vertex_count(), std::move(gens));
}

CochainComplex augmented_cochains(const SimplicialComplex& d) {
  return cochains_on(d.faces(), -1, d.dimension());
}

CochainComplex relative_cochains(const SimplicialComplex& d, const SimplicialComplex& a) {
  for (Face f : a.faces())
    if (!d.contains(f))
      throw std::invalid_argument("relative cochains: not a subcomplex");
  std::vector<Face> rest;
  for (Face f : d.faces())
    if (!a.contains(f))
      rest.push_back(f);
  return cochains_on(rest, a.is_void() ? -1 : 0, d.dimension());
}

std::vector<std::size_t> reduced_cohomology(const SimplicialComplex& d, Field field) {
  return cohomology(augmented_cochains(d), field);
}

std::vector<AbelianGroup> reduced_cohomology_integral(const SimplicialComplex& d) {
  return integral_cohomology(augmented_cochains(d));
}

std::vector<std::size_t> relative_cohomology(const SimplicialComplex& d, const SimplicialComplex& a, Field field,
                                             int* min_degree) {
  const auto c = relative_cochains(d, a);
  if (min_degree)
    *min_degree = c.min_degree;
  return cohomology(c, field);
}

ReisnerVerdict reisner_check(const SimplicialComplex& d, Field field, unsigned workers) {
  const auto& faces = d.faces();
  std::size_t begin = 0;
  while (begin < faces.size()) {
    std::size_t end = begin;
    while (end < faces.size() && face_size(faces[end]) == face_size(faces[begin]))
      ++end;
    // failing_degree[i]: lowest offending degree for face begin+i, or none.
    std::vector<std::optional<int>> failing(end - begin);
    parallel_for(end - begin, workers, [&](std::size_t i) {
      const auto lk = link(d, faces[begin + i]);
      const auto h = reduced_cohomology(lk, field);
      for (int deg = -1; deg < lk.dimension(); ++deg)
        if (at_degree(h, -1, deg) != 0) {
          failing[i] = deg;
          return;
        }
    });
    for (std::size_t i = 0; i < failing.size(); ++i)
      if (failing[i])
        return {false, faces[begin + i], *failing[i]};
    begin = end;
  }
  return {};
}

bool is_matroid_complex(const SimplicialComplex& d, Face* witness) {
  if (d.is_void())
    return true;
  const Face support = d.vertex_support();
  if (face_size(support) > 24)
    throw std::length_error("matroid complex test is limited to 24 vertices");
  for (Face f = support;; f = (f - 1) & support) {
    if (!restrict(d, f).is_pure()) {
      if (witness)
        *witness = f;
      return false;
    }
    if (f == 0)
      break;
  }
  return true;
}

}  // namespace omx
