#include "omx/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace omx {

std::vector<std::size_t> Monomial::variables() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

VariableSet VariableSet::xy(const std::vector<std::string>& element_names) {
  const std::size_t n = element_names.size();
  if (2 * n > 64)
    throw std::length_error("too many variables for squarefree monomials");
  VariableSet v;
  for (std::size_t i = 0; i < n; ++i) {
    v.names.push_back("x" + element_names[i]);
    v.sort_keys.emplace_back(i, 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    v.names.push_back("y" + element_names[i]);
    v.sort_keys.emplace_back(i, 1);
  }
  return v;
}

VariableSet VariableSet::x_only(const std::vector<std::string>& element_names) {
  if (element_names.size() > 64)
    throw std::length_error("too many variables for squarefree monomials");
  VariableSet v;
  for (std::size_t i = 0; i < element_names.size(); ++i) {
    v.names.push_back("x" + element_names[i]);
    v.sort_keys.emplace_back(i, 0);
  }
  return v;
}

namespace {

std::vector<std::size_t> print_order(const VariableSet& vars, Monomial m) {
  auto vs = m.variables();
  std::sort(vs.begin(), vs.end(), [&](std::size_t a, std::size_t b) { return vars.sort_keys[a] < vars.sort_keys[b]; });
  return vs;
}

}  // namespace

std::string VariableSet::format(Monomial m) const {
  if (m.is_one())
    return "1";
  std::string s;
  for (auto v : print_order(*this, m)) {
    if (v >= names.size())
      throw std::out_of_range("monomial uses an unknown variable");
    if (!s.empty())
      s += '*';
    s += names[v];
  }
  return s;
}

Monomial VariableSet::parse(const std::string& text) const {
  if (text == "1")
    return Monomial();
  std::uint64_t bits = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('*', start), text.size());
    const std::string factor = text.substr(start, end - start);
    const auto it = std::find(names.begin(), names.end(), factor);
    if (it == names.end())
      throw std::invalid_argument("unknown variable '" + factor + "' in monomial '" + text + "'");
    bits |= std::uint64_t{1} << (it - names.begin());
    start = end + 1;
  }
  return Monomial(bits);
}

bool VariableSet::print_less(Monomial a, Monomial b) const {
  const auto x = print_order(*this, a), y = print_order(*this, b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [&](std::size_t p, std::size_t q) {
    return sort_keys[p] < sort_keys[q];
  });
}

}  // namespace omx
