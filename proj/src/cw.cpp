#include "omx/cw.hpp"

#include "omx/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace omx {

namespace {

using Bits = boost::dynamic_bitset<>;

bool sorted_contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

CellComplex CellComplex::from_relation(std::vector<Bits> below, std::vector<SignVector> svs) {
  const std::size_t n = below.size();
  if (n == 0)
    throw std::invalid_argument("a cell complex needs the empty cell");
  for (std::size_t i = 0; i < n; ++i) {
    if (!below[i].test(0))
      throw NotRegularCW("the empty cell is not below every cell");
    if (!below[i].test(i))
      throw std::logic_error("order relation is not reflexive");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = below[i].find_first(); j != Bits::npos; j = below[i].find_next(j))
      if (j != i && below[j].test(i))
        throw NotRegularCW("order relation is not antisymmetric");

  std::vector<Bits> above(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = below[i].find_first(); j != Bits::npos; j = below[i].find_next(j))
      above[j].set(i);

  // Strictly smaller elements have fewer elements below them.
  std::vector<std::size_t> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::stable_sort(topo.begin(), topo.end(),
                   [&](std::size_t a, std::size_t b) { return below[a].count() < below[b].count(); });
  std::vector<int> rank(n, 0);
  for (std::size_t i : topo)
    for (std::size_t j = below[i].find_first(); j != Bits::npos; j = below[i].find_next(j))
      if (j != i)
        rank[i] = std::max(rank[i], rank[j] + 1);

  std::vector<std::vector<std::size_t>> down(n);
  for (std::size_t s = 0; s < n; ++s) {
    Bits strict_below = below[s];
    strict_below.reset(s);
    for (std::size_t t = strict_below.find_first(); t != Bits::npos; t = strict_below.find_next(t)) {
      Bits strict_above = above[t];
      strict_above.reset(t);
      if (!(strict_above & strict_below).none())
        continue;
      if (rank[s] != rank[t] + 1)
        throw NotRegularCW("poset is not graded");
      down[s].push_back(t);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k)
    position[order[k]] = k;

  CellComplex x;
  x.dim_.resize(n);
  x.down_.resize(n);
  x.up_.resize(n);
  x.below_.assign(n, Bits(n));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t old = order[k];
    x.dim_[k] = rank[old] - 1;
    for (std::size_t t : down[old])
      x.down_[k].push_back(position[t]);
    std::sort(x.down_[k].begin(), x.down_[k].end());
    for (std::size_t j = below[old].find_first(); j != Bits::npos; j = below[old].find_next(j))
      x.below_[k].set(position[j]);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t : x.down_[k])
      x.up_[t].push_back(k);
  if (!svs.empty()) {
    x.sign_vectors_.resize(n);
    for (std::size_t k = 0; k < n; ++k)
      x.sign_vectors_[k] = svs[order[k]];
  }
  return x;
}

CellComplex CellComplex::from_sign_vectors(std::span<const SignVector> poset) {
  std::vector<SignVector> svs;
  std::size_t ground = poset.empty() ? 0 : poset.front().size();
  svs.emplace_back(ground);
  for (const auto& v : poset) {
    if (v.size() != ground)
      throw std::invalid_argument("sign vectors on different ground sets");
    if (!v.is_zero())
      svs.push_back(v);
  }
  std::sort(svs.begin() + 1, svs.end());
  svs.erase(std::unique(svs.begin() + 1, svs.end()), svs.end());
  const std::size_t n = svs.size();
  std::vector<Bits> below(n, Bits(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (omx::leq(svs[a], svs[b]))
        below[b].set(a);
  return from_relation(std::move(below), std::move(svs));
}

CellComplex CellComplex::from_covers(const std::vector<std::vector<std::size_t>>& covers_below) {
  const std::size_t n = covers_below.size();
  if (n == 0 || !covers_below[0].empty())
    throw std::invalid_argument("cell 0 must be the empty cell and cover nothing");
  std::vector<Bits> below(n, Bits(n));
  // Transitive closure by depth-first search from each cell.
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      if (below[s].test(c))
        continue;
      below[s].set(c);
      for (std::size_t t : covers_below[c]) {
        if (t >= n)
          throw std::invalid_argument("cover list names a cell out of range");
        stack.push_back(t);
      }
    }
  }
  return from_relation(std::move(below), {});
}

std::vector<std::size_t> CellComplex::f_vector() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(dimension() + 1));
  for (int d : dim_)
    if (d >= 0)
      ++out[static_cast<std::size_t>(d)];
  return out;
}

bool CellComplex::covers(std::size_t upper, std::size_t lower) const { return sorted_contains(down_[upper], lower); }

CellSet CellComplex::closure(std::size_t cell) const {
  CellSet out;
  for (std::size_t j = below_[cell].find_first(); j != Bits::npos; j = below_[cell].find_next(j))
    out.push_back(j);
  return out;
}

std::optional<std::size_t> CellComplex::cell_of(const SignVector& v) const {
  const auto it = std::find(sign_vectors_.begin(), sign_vectors_.end(), v);
  if (it == sign_vectors_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - sign_vectors_.begin());
}

int CellComplex::incidence(std::size_t upper, std::size_t lower) const {
  if (!has_incidence())
    throw std::logic_error("incidence function not constructed");
  const auto& d = down_[upper];
  const auto it = std::lower_bound(d.begin(), d.end(), lower);
  if (it == d.end() || *it != lower)
    return 0;
  return incidence_[upper][static_cast<std::size_t>(it - d.begin())];
}

CellComplex CellComplex::reoriented(std::size_t cell) const {
  if (!has_incidence())
    throw std::logic_error("incidence function not constructed");
  CellComplex out = *this;
  for (auto& v : out.incidence_[cell])
    v = -v;
  for (std::size_t u : up_[cell]) {
    const auto& d = down_[u];
    const auto k = static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), cell) - d.begin());
    out.incidence_[u][k] = -out.incidence_[u][k];
  }
  return out;
}

CellComplex CellComplex::with_labels(std::vector<Monomial> labels) const {
  if (labels.size() != size())
    throw std::invalid_argument("one label per cell is required");
  if (!labels[0].is_one())
    throw std::invalid_argument("the empty cell must carry the label 1");
  for (std::size_t s = 0; s < size(); ++s)
    for (std::size_t t : down_[s])
      if (!labels[t].divides(labels[s]))
        throw std::invalid_argument("labels are not order preserving");
  CellComplex out = *this;
  out.labels_ = std::move(labels);
  return out;
}

CellComplex incidence_function(const CellComplex& x) {
  CellComplex out = x;
  out.incidence_.assign(x.size(), {});
  for (std::size_t s = 0; s < x.size(); ++s) {
    const int k = x.dim(s);
    if (k < 0)
      continue;
    if (k == 0) {
      out.incidence_[s] = {1};
      continue;
    }
    // Cells of the boundary sphere, grouped by dimension -1..k-1.
    std::vector<std::vector<std::size_t>> level(static_cast<std::size_t>(k + 1));
    for (std::size_t t : x.closure(s))
      if (t != s)
        level[static_cast<std::size_t>(x.dim(t) + 1)].push_back(t);
    CochainComplex c;
    c.min_degree = -1;
    for (const auto& l : level)
      c.dims.push_back(l.size());
    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
      IntMatrix d(level[i + 1].size(), level[i].size());
      for (std::size_t r = 0; r < level[i + 1].size(); ++r)
        for (std::size_t q = 0; q < level[i].size(); ++q)
          d(r, q) = out.incidence(level[i + 1][r], level[i][q]);
      c.differentials.push_back(std::move(d));
    }
    const auto h = integral_cohomology(c);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const bool top = i + 1 == h.size();
      if (top ? !h[i].is_integers() : !h[i].is_zero())
        throw NotRegularCW("boundary of a " + std::to_string(k) + "-cell is not a homology sphere");
    }
    // Cycles of the top chain group are the kernel of the transposed top
    // coboundary.
    const auto kernel = integer_kernel_basis(transpose(c.differentials.back()));
    if (kernel.size() != 1)
      throw NotRegularCW("boundary sphere has no unique fundamental cycle");
    auto cycle = kernel.front();
    const auto first = std::find_if(cycle.begin(), cycle.end(), [](const Integer& v) { return v != 0; });
    if (first != cycle.end() && *first < 0)
      for (auto& v : cycle)
        v = -v;
    const auto& top = level.back();
    std::vector<int> inc;
    for (std::size_t t : x.facets_of(s)) {
      const auto pos = static_cast<std::size_t>(std::find(top.begin(), top.end(), t) - top.begin());
      const Integer& v = cycle[pos];
      if (v != 1 && v != -1)
        throw NotRegularCW("fundamental cycle has a coefficient other than ±1");
      inc.push_back(v == 1 ? 1 : -1);
    }
    out.incidence_[s] = std::move(inc);
  }
  return out;
}

bool check_incidence(const CellComplex& x) {
  if (!x.has_incidence())
    return false;
  for (std::size_t s = 0; s < x.size(); ++s) {
    for (std::size_t t : x.facets_of(s)) {
      const int v = x.incidence(s, t);
      if (v != 1 && v != -1)
        return false;
    }
    // ∂∂σ = 0: for each τ two levels down, sum over the cells in between.
    std::unordered_map<std::size_t, int> sums;
    for (std::size_t u : x.facets_of(s))
      for (std::size_t t : x.facets_of(u))
        sums[t] += x.incidence(s, u) * x.incidence(u, t);
    for (const auto& [t, v] : sums)
      if (v != 0)
        return false;
  }
  return true;
}

Strata strata(std::span<const SignVector> b, std::span<const SignVector> l) {
  const std::unordered_set<SignVector, SignVectorHash> in_b(b.begin(), b.end());
  Strata s;
  for (const auto& v : b) {
    const bool maximal = std::none_of(b.begin(), b.end(), [&](const SignVector& w) { return less(v, w); });
    if (maximal)
      s.topes.push_back(v);
    const bool on_boundary = std::any_of(l.begin(), l.end(), [&](const SignVector& w) {
      return !in_b.contains(w) && less(v, w);
    });
    if (on_boundary)
      s.boundary.push_back(v);
  }
  for (const auto& v : b) {
    // v is covered by tope t within B iff nothing of B lies strictly between.
    const bool covered = std::any_of(s.topes.begin(), s.topes.end(), [&](const SignVector& t) {
      if (!less(v, t))
        return false;
      return std::none_of(b.begin(), b.end(), [&](const SignVector& w) { return less(v, w) && less(w, t); });
    });
    if (covered)
      s.subtopes.push_back(v);
  }
  std::sort(s.topes.begin(), s.topes.end());
  std::sort(s.subtopes.begin(), s.subtopes.end());
  std::sort(s.boundary.begin(), s.boundary.end());
  return s;
}

std::size_t topes_above(const SignVector& v, std::span<const SignVector> topes) {
  return static_cast<std::size_t>(
      std::count_if(topes.begin(), topes.end(), [&](const SignVector& t) { return leq(v, t); }));
}

CellSet order_filter(const CellComplex& x, Monomial a) {
  if (!x.has_labels())
    throw std::logic_error("order filter by degree needs labels");
  CellSet out;
  for (std::size_t s = 0; s < x.size(); ++s)
    if (a.divides(x.label(s)))
      out.push_back(s);
  return out;
}

CellSet order_filter(const CellComplex& x, std::size_t sigma) {
  CellSet out;
  for (std::size_t s = 0; s < x.size(); ++s)
    if (x.leq(sigma, s))
      out.push_back(s);
  return out;
}

bool is_order_filter(const CellComplex& x, const CellSet& y) {
  return std::all_of(y.begin(), y.end(), [&](std::size_t s) {
    const auto& up = x.cofacets_of(s);
    return std::all_of(up.begin(), up.end(), [&](std::size_t u) { return sorted_contains(y, u); });
  });
}

bool is_subcomplex(const CellComplex& x, const CellSet& y) {
  return std::all_of(y.begin(), y.end(), [&](std::size_t s) {
    const auto& down = x.facets_of(s);
    return std::all_of(down.begin(), down.end(), [&](std::size_t t) { return sorted_contains(y, t); });
  });
}

CochainComplex cellular_cochains(const CellComplex& x, const CellSet& y) {
  CochainComplex c;
  c.min_degree = -1;
  const int top = x.dimension();
  std::vector<std::vector<std::size_t>> level(static_cast<std::size_t>(top + 2));
  for (std::size_t s : y)
    level[static_cast<std::size_t>(x.dim(s) + 1)].push_back(s);
  for (const auto& l : level)
    c.dims.push_back(l.size());
  for (std::size_t i = 0; i + 1 < level.size(); ++i) {
    IntMatrix d(level[i + 1].size(), level[i].size());
    for (std::size_t r = 0; r < level[i + 1].size(); ++r)
      for (std::size_t q = 0; q < level[i].size(); ++q)
        d(r, q) = x.incidence(level[i + 1][r], level[i][q]);
    c.differentials.push_back(std::move(d));
  }
  return c;
}

CochainComplex cochain_complex(const CellComplex& x, const CellSet& y) {
  if (!std::is_sorted(y.begin(), y.end()) || !is_order_filter(x, y))
    throw std::invalid_argument("cochain complex: cell set is not a sorted order filter");
  return cellular_cochains(x, y);
}

CochainComplex subcomplex_cochains(const CellComplex& x, const CellSet& y) {
  if (!std::is_sorted(y.begin(), y.end()) || !is_subcomplex(x, y))
    throw std::invalid_argument("subcomplex cochains: cell set is not a sorted subcomplex");
  return cellular_cochains(x, y);
}

BarycentricPair barycentric_pair(const CellComplex& x, std::size_t sigma) {
  if (sigma == 0 || sigma >= x.size())
    throw std::invalid_argument("barycentric pair needs a nonempty cell");
  if (x.size() - 1 > 64)
    throw std::length_error("order complexes are limited to 64 vertices");
  BarycentricPair p;
  for (std::size_t s = 1; s < x.size(); ++s)
    p.vertex_cells.push_back(s);
  auto bit = [](std::size_t cell) { return Face{1} << (cell - 1); };
  // Maximal chains run by covers from a vertex to a maximal cell.
  std::vector<Face> chains;
  std::vector<std::pair<std::size_t, Face>> stack;
  for (std::size_t s = 1; s < x.size(); ++s)
    if (x.dim(s) == 0)
      stack.emplace_back(s, bit(s));
  while (!stack.empty()) {
    const auto [cell, chain] = stack.back();
    stack.pop_back();
    if (x.is_maximal(cell)) {
      chains.push_back(chain);
      continue;
    }
    for (std::size_t u : x.cofacets_of(cell))
      stack.emplace_back(u, chain | bit(u));
  }
  const std::size_t nv = x.size() - 1;
  p.whole = SimplicialComplex::from_facets(nv, std::move(chains));
  Face away = 0;
  for (std::size_t s = 1; s < x.size(); ++s)
    if (!x.leq(sigma, s))
      away |= bit(s);
  p.away = restrict(p.whole, away);
  return p;
}

}  // namespace omx
