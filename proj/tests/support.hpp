#ifndef OMX_TESTS_SUPPORT_HPP
#define OMX_TESTS_SUPPORT_HPP

#include "cli.hpp"
#include "omx/nps.hpp"
#include "omx/realize.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace omx::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(OMX_FIXTURE_DIR) + "/" + name + ".json";
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "cm-arr-1", "cm-arr-2",    "nongp-cm-arr",  "square",      "four-generic-lines",
      "tetrahedron", "single-vertex", "segment", "central-line"};
  return names;
}

inline Arrangement fixture_arrangement(const std::string& name) {
  return *cli::load_input(fixture_path(name)).arrangement;
}

inline AffineOM fixture(const std::string& name) { return om_from_vectors(fixture_arrangement(name)); }

inline Arrangement make_arrangement(std::vector<std::vector<int>> rows, std::vector<int> g) {
  Arrangement a;
  a.name = "inline";
  a.dimension = g.size();
  for (const auto& r : rows)
    a.vectors.emplace_back(r.begin(), r.end());
  a.g.assign(g.begin(), g.end());
  return a;
}

inline std::vector<std::string> formatted(const SquarefreeMonomialIdeal& ideal) {
  auto out = ideal.formatted();
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Random integer arrangement: ambient dimension 2..4, 1..5 elements plus g,
/// entries in [-3, 3]. g is never zero; elements may be.
inline Arrangement random_arrangement(std::mt19937_64& rng, std::size_t index) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> ambient(2, 4);
  std::uniform_int_distribution<std::size_t> count(1, 5);
  Arrangement a;
  a.name = "random-" + std::to_string(index);
  a.dimension = ambient(rng);
  const std::size_t n = count(rng);
  auto draw = [&] {
    std::vector<Integer> v(a.dimension);
    for (auto& x : v)
      x = entry(rng);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    a.vectors.push_back(draw());
  do
    a.g = draw();
  while (std::all_of(a.g.begin(), a.g.end(), [](const Integer& x) { return x == 0; }));
  return a;
}

/// Smith diagonal from determinantal divisors: d_k = D_k / D_{k-1}, D_k the
/// gcd of all k x k minors. Exponential; for small matrices only.
inline std::vector<Integer> smith_by_minors(const IntMatrix& m) {
  const std::size_t k_max = std::min(m.rows(), m.cols());
  std::vector<Integer> divisors{Integer(1)};
  for (std::size_t k = 1; k <= k_max; ++k) {
    Integer g = 0;
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        IntMatrix sub(k, k);
        std::size_t r = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rsel[i])
            continue;
          std::size_t c = 0;
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (csel[j])
              sub(r, c++) = m(i, j);
          ++r;
        }
        g = gcd(g, abs(determinant(sub)));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    divisors.push_back(g);
  }
  std::vector<Integer> diag;
  for (std::size_t k = 1; k <= k_max; ++k)
    diag.push_back(divisors[k - 1] == 0 ? Integer(0) : divisors[k] / divisors[k - 1]);
  return diag;
}

}  // namespace omx::testing

#endif
