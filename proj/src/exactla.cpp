#include "omx/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace omx {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::uint64_t reduce_mod(const Integer& x, std::uint32_t p) {
  Integer r = x % p;
  if (r < 0)
    r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and small.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i * cols + j] = reduce_mod(m(i, j), p);

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(a[pivot * cols + j], a[r * cols + j]);
    const std::uint64_t inv = inverse_mod(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j)
      a[r * cols + j] = a[r * cols + j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + c];
      if (f == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
    }
    ++r;
  }
  return r;
}

// Fraction-free (Bareiss) row echelon form. Every entry that survives is a
// minor of the input, so intermediate growth is bounded. Returns the rank;
// `sign` flips on each row swap.
std::size_t bareiss_in_place(IntMatrix& a, int* sign = nullptr) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) == 0)
        continue;
      if (pivot == rows || abs(a(i, c)) < abs(a(pivot, c)))
        pivot = i;
    }
    if (pivot == rows)
      continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(pivot, j), a(r, j));
      if (sign)
        *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v)
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  return l;
}

std::vector<Integer> primitive_normalized(const std::vector<Rational>& v) {
  const Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g == 0)
    return out;
  bool flip = false;
  for (const auto& x : out)
    if (x != 0) {
      flip = x < 0;
      break;
    }
  for (auto& x : out) {
    x /= g;
    if (flip)
      x = -x;
  }
  return out;
}

template <bool Track>
struct SmithWork {
  IntMatrix a, u, v;

  explicit SmithWork(const IntMatrix& m) : a(m) {
    if constexpr (Track) {
      u = IntMatrix::identity(m.rows());
      v = IntMatrix::identity(m.cols());
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k)
      return;
    for (std::size_t j = 0; j < a.cols(); ++j)
      std::swap(a(i, j), a(k, j));
    if constexpr (Track)
      for (std::size_t j = 0; j < u.cols(); ++j)
        std::swap(u(i, j), u(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k)
      return;
    for (std::size_t i = 0; i < a.rows(); ++i)
      std::swap(a(i, j), a(i, k));
    if constexpr (Track)
      for (std::size_t i = 0; i < v.rows(); ++i)
        std::swap(v(i, j), v(i, k));
  }
  // row_i += c * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& c) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(k, j) != 0)
        a(i, j) += c * a(k, j);
    if constexpr (Track)
      for (std::size_t j = 0; j < u.cols(); ++j)
        if (u(k, j) != 0)
          u(i, j) += c * u(k, j);
  }
  // col_j += c * col_k
  void add_col(std::size_t j, std::size_t k, const Integer& c) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, k) != 0)
        a(i, j) += c * a(i, k);
    if constexpr (Track)
      for (std::size_t i = 0; i < v.rows(); ++i)
        if (v(i, k) != 0)
          v(i, j) += c * v(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      a(i, j) = -a(i, j);
    if constexpr (Track)
      for (std::size_t j = 0; j < u.cols(); ++j)
        u(i, j) = -u(i, j);
  }

  std::vector<Integer> run() {
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t k = std::min(rows, cols);
    std::vector<Integer> diagonal(k);
    for (std::size_t t = 0; t < k; ++t) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows)
        break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      while (true) {
        bool residue = false;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0) {
            add_row(i, t, -(a(i, t) / a(t, t)));
            residue = residue || a(i, t) != 0;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0) {
            add_col(j, t, -(a(t, j) / a(t, t)));
            residue = residue || a(t, j) != 0;
          }
        if (residue) {
          std::size_t bi = t, bj = t;
          for (std::size_t i = t + 1; i < rows; ++i)
            if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) {
              bi = i;
              bj = t;
            }
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) {
              bi = t;
              bj = j;
            }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        // Row and column are clear; the pivot must divide the rest.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a(i, j) % a(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad == rows)
          break;
        add_row(t, bad, 1);
      }
      if (a(t, t) < 0)
        negate_row(t);
      diagonal[t] = a(t, t);
    }
    return diagonal;
  }
};

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::name() const {
  return characteristic == 0 ? std::string("Q") : "F" + std::to_string(characteristic);
}

std::vector<Field> standard_fields() {
  return {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
}

Field parse_field(const std::string& text) {
  std::string t;
  for (char c : text)
    t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "Q" || t == "QQ" || t == "0")
    return Field::rationals();
  if (!t.empty() && (t[0] == 'F' || t[0] == 'P'))
    t.erase(0, 1);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("unrecognized field '" + text + "'");
  return Field::prime(static_cast<std::uint32_t>(std::stoul(t)));
}

std::size_t rank(const IntMatrix& m, Field field) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  if (field.is_rational()) {
    IntMatrix a = m;
    return bareiss_in_place(a);
  }
  return rank_mod_p(m, field.characteristic);
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (boost::multiprecision::denominator(m(i, j)) != 1)
        throw std::invalid_argument("to_integer: entry is not integral");
      out(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = Rational(m(i, j));
  return out;
}

std::size_t rank(const RatMatrix& m, Field field) {
  // Clearing denominators row by row does not change the rank over Q; over
  // F_p we require integral entries.
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j)));
    if (!field.is_rational() && l != 1)
      throw std::invalid_argument("rank over F_p needs integral entries");
    for (std::size_t j = 0; j < m.cols(); ++j)
      scaled(i, j) = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
  }
  return rank(scaled, field);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  int sign = 1;
  if (bareiss_in_place(a, &sign) < n)
    return 0;
  return sign * a(n - 1, n - 1);
}

std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(a(pivot, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols)
    is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = -a(k, f);
    basis.push_back(primitive_normalized(v));
  }
  return basis;
}

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
  return kernel_basis(to_rational(m));
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : diagonal)
    if (d > 1)
      out.push_back(d);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithWork<true> work(m);
  SmithForm out;
  out.diagonal = work.run();
  out.left = std::move(work.u);
  out.right = std::move(work.v);
  return out;
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  SmithWork<false> work(m);
  return work.run();
}

std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = s.rank(); j < m.cols(); ++j) {
    std::vector<Integer> v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
      v[i] = s.right(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace omx
