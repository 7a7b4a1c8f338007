#include "omx/signvec.hpp"

namespace omx {

namespace {

void require_same_ground(const SignVector& l, const SignVector& m, const char* op) {
  if (l.size() != m.size())
    throw std::invalid_argument(std::string(op) + ": sign vectors live on different ground sets");
}

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

char to_char(Sign s) {
  switch (s) {
    case Sign::plus:
      return '+';
    case Sign::minus:
      return '-';
    default:
      return '0';
  }
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

SignVector::SignVector(std::size_t size) : SignVector(size, 0, 0) {}

SignVector::SignVector(std::size_t size, std::uint64_t plus, std::uint64_t minus)
    : size_(static_cast<std::uint8_t>(size)), plus_(plus), minus_(minus) {
  if (size > max_size)
    throw std::length_error("SignVector: ground set larger than 64 elements");
  if ((plus | minus) & ~low_mask(size))
    throw std::invalid_argument("SignVector: sign outside the ground set");
  if (plus & minus)
    throw std::invalid_argument("SignVector: element is both + and -");
}

SignVector::SignVector(const std::vector<Sign>& signs) : SignVector(signs.size()) {
  for (std::size_t e = 0; e < signs.size(); ++e)
    set(e, signs[e]);
}

SignVector SignVector::parse(std::string_view text) {
  SignVector v(text.size());
  for (std::size_t e = 0; e < text.size(); ++e) {
    switch (text[e]) {
      case '+':
        v.set(e, Sign::plus);
        break;
      case '-':
        v.set(e, Sign::minus);
        break;
      case '0':
        break;
      default:
        throw std::invalid_argument("sign string may only contain '+', '-', '0': \"" + std::string(text) + "\"");
    }
  }
  return v;
}

std::string SignVector::str() const {
  std::string s(size_, '0');
  for (std::size_t e = 0; e < size_; ++e)
    s[e] = to_char((*this)[e]);
  return s;
}

Sign SignVector::operator[](std::size_t e) const {
  if (e >= size_)
    throw std::out_of_range("SignVector: element outside ground set");
  if ((plus_ >> e) & 1u)
    return Sign::plus;
  if ((minus_ >> e) & 1u)
    return Sign::minus;
  return Sign::zero;
}

void SignVector::set(std::size_t e, Sign s) {
  if (e >= size_)
    throw std::out_of_range("SignVector: element outside ground set");
  const std::uint64_t bit = std::uint64_t{1} << e;
  plus_ &= ~bit;
  minus_ &= ~bit;
  if (s == Sign::plus)
    plus_ |= bit;
  else if (s == Sign::minus)
    minus_ |= bit;
}

bool SignVector::operator<(const SignVector& o) const {
  if (size_ != o.size_)
    return size_ < o.size_;
  const auto s = support().size(), t = o.support().size();
  if (s != t)
    return s < t;
  for (std::size_t e = 0; e < size_; ++e) {
    const auto a = static_cast<int>((*this)[e]), b = static_cast<int>(o[e]);
    if (a != b) {
      // + before - before 0
      const auto key = [](int x) { return x == 1 ? 0 : x == -1 ? 1 : 2; };
      return key(a) < key(b);
    }
  }
  return false;
}

SignVector compose(const SignVector& l, const SignVector& m) {
  require_same_ground(l, m, "compose");
  const std::uint64_t free = ~(l.plus_bits() | l.minus_bits());
  return SignVector(l.size(), l.plus_bits() | (m.plus_bits() & free), l.minus_bits() | (m.minus_bits() & free));
}

ElementSet separation(const SignVector& l, const SignVector& m) {
  require_same_ground(l, m, "separation");
  return ElementSet((l.plus_bits() & m.minus_bits()) | (l.minus_bits() & m.plus_bits()));
}

bool leq(const SignVector& l, const SignVector& m) {
  require_same_ground(l, m, "leq");
  return (l.plus_bits() & ~m.plus_bits()) == 0 && (l.minus_bits() & ~m.minus_bits()) == 0;
}

SignVector restrict(const SignVector& l, ElementSet f) {
  if (!f.is_subset_of(ElementSet::range(l.size())))
    throw std::invalid_argument("restrict: subset is not contained in the ground set");
  const auto keep = f.elements();
  SignVector out(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    out.set(k, l[keep[k]]);
  return out;
}

}  // namespace omx
