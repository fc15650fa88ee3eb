#include "toric/symfun.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric::symfun {

IntVector elem_sym_upto(const IntVector& v, std::size_t m) {
  m = std::min(m, v.size());
  IntVector e(m + 1, Integer(0));
  e[0] = 1;
  std::size_t seen = 0;
  for (const auto& x : v) {
    ++seen;
    for (std::size_t k = std::min(seen, m); k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e;
}

Integer elem_sym(const IntVector& v, std::size_t i) {
  if (i > v.size()) {
    throw DomainError(ErrorCode::IndexOutOfRange,
                      "sigma_" + std::to_string(i) + " of a vector of length " +
                          std::to_string(v.size()));
  }
  return elem_sym_upto(v, i)[i];
}

bool truncated_sym_equal(const IntVector& u, const IntVector& v, std::size_t m) {
  if (u.size() != v.size()) {
    throw DomainError(ErrorCode::LengthMismatch,
                      "lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  if (m < 1 || m > u.size()) {
    throw DomainError(ErrorCode::IndexOutOfRange,
                      "truncation degree " + std::to_string(m) + " for length " +
                          std::to_string(u.size()));
  }
  return elem_sym_upto(u, m) == elem_sym_upto(v, m);
}

IntVector shift(const IntVector& v, const Integer& c) {
  IntVector out(v);
  for (auto& x : out) x += c;
  return out;
}

IntVector chern_coeffs(const IntVector& v, std::size_t m) {
  IntVector sigma = elem_sym_upto(v, m);
  IntVector out(m + 1, Integer(0));
  for (std::size_t k = 0; k < sigma.size(); ++k) out[k] = (k % 2 == 0) ? sigma[k] : Integer(-sigma[k]);
  return out;
}

IntVector prepend_shifted(const IntVector& v, const Integer& c) {
  IntVector out;
  out.reserve(v.size() + 1);
  out.push_back(c);
  for (const auto& x : v) out.push_back(x + c);
  return out;
}

}  // namespace toric::symfun
