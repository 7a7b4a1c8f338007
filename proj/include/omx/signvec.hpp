#ifndef OMX_SIGNVEC_HPP
#define OMX_SIGNVEC_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omx {

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr Sign operator-(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }

/// 0 < +, 0 < -, with + and - incomparable.
constexpr bool sign_leq(Sign a, Sign b) { return a == Sign::zero || a == b; }

char to_char(Sign s);

/// Subset of a ground set of at most 64 elements, addressed by position.
class ElementSet {
public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<std::size_t> elements) {
    for (auto e : elements)
      insert(e);
  }
  static ElementSet range(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t e) const { return e < 64 && ((bits_ >> e) & 1u); }
  void insert(std::size_t e) {
    if (e >= 64)
      throw std::out_of_range("ElementSet: element index beyond 64");
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(std::size_t e) {
    if (e < 64)
      bits_ &= ~(std::uint64_t{1} << e);
  }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<std::size_t> elements() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

private:
  std::uint64_t bits_ = 0;
};

/// A function from an ordered ground set (positions 0..size-1) to {-,0,+}.
/// Stored as two bit masks, so composition and comparisons are word ops.
class SignVector {
public:
  static constexpr std::size_t max_size = 64;

  SignVector() = default;
  explicit SignVector(std::size_t size);
  SignVector(std::size_t size, std::uint64_t plus, std::uint64_t minus);
  explicit SignVector(const std::vector<Sign>& signs);

  /// Text form: one of "+-0" per element, in ground order.
  static SignVector parse(std::string_view text);
  std::string str() const;

  std::size_t size() const { return size_; }
  Sign operator[](std::size_t e) const;
  void set(std::size_t e, Sign s);

  ElementSet support() const { return ElementSet(plus_ | minus_); }
  ElementSet positive() const { return ElementSet(plus_); }
  ElementSet negative() const { return ElementSet(minus_); }
  ElementSet zeros() const { return ElementSet::range(size_) - support(); }
  bool is_zero() const { return (plus_ | minus_) == 0; }

  SignVector operator-() const { return SignVector(size_, minus_, plus_); }

  std::uint64_t plus_bits() const { return plus_; }
  std::uint64_t minus_bits() const { return minus_; }

  bool operator==(const SignVector&) const = default;
  /// Canonical total order: by size, support size, then bit patterns.
  bool operator<(const SignVector& o) const;

private:
  std::uint8_t size_ = 0;
  std::uint64_t plus_ = 0;
  std::uint64_t minus_ = 0;
};

/// l o m: l where l is nonzero, m elsewhere.
SignVector compose(const SignVector& l, const SignVector& m);

/// {f : l(f) = -m(f) != 0}
ElementSet separation(const SignVector& l, const SignVector& m);

/// Componentwise conformal order.
bool leq(const SignVector& l, const SignVector& m);
inline bool less(const SignVector& l, const SignVector& m) { return l != m && leq(l, m); }

/// Restriction to the positions in f, kept in increasing position order.
SignVector restrict(const SignVector& l, ElementSet f);

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const noexcept {
    std::uint64_t h = v.plus_bits() * 0x9E3779B97F4A7C15ull;
    h ^= v.minus_bits() + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ v.size());
  }
};

}  // namespace omx

#endif
