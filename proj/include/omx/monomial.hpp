#ifndef OMX_MONOMIAL_HPP
#define OMX_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace omx {

/// Squarefree monomial, i.e. a set of at most 64 variables. Also serves as a
/// squarefree degree vector in N^{#vars}.
class Monomial {
public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  static Monomial variable(std::size_t v) { return Monomial(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t degree() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_one() const { return bits_ == 0; }
  constexpr bool has(std::size_t v) const { return (bits_ >> v) & 1u; }
  /// this | other
  constexpr bool divides(Monomial other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<std::size_t> variables() const;

  friend constexpr Monomial lcm(Monomial a, Monomial b) { return Monomial(a.bits_ | b.bits_); }
  /// a / b for b | a.
  friend constexpr Monomial quotient(Monomial a, Monomial b) { return Monomial(a.bits_ & ~b.bits_); }

  constexpr bool operator==(const Monomial&) const = default;
  constexpr auto operator<=>(const Monomial&) const = default;

private:
  std::uint64_t bits_ = 0;
};

/// Names and print order of the variables of a polynomial ring.
struct VariableSet {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, int>> sort_keys;  // print order

  std::size_t size() const { return names.size(); }

  /// x_1..x_n, y_1..y_n named after the elements; printed by element, x
  /// before y.
  static VariableSet xy(const std::vector<std::string>& element_names);
  static VariableSet x_only(const std::vector<std::string>& element_names);

  /// "x1*x2", "y2*x3"; "1" for the unit monomial.
  std::string format(Monomial m) const;
  /// Parses the format above.
  Monomial parse(const std::string& text) const;
  /// Lexicographic on the print keys of the factors.
  bool print_less(Monomial a, Monomial b) const;
};

}  // namespace omx

#endif
