#include "toric/moves.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toric::moves {

Move Move::inverse() const {
  switch (kind) {
    case MoveKind::E1: return {MoveKind::E1Inv, 0, 0};
    case MoveKind::E1Inv: return {MoveKind::E1, 0, 0};
    case MoveKind::Eij: return {MoveKind::EijInv, i, j};
    case MoveKind::EijInv: return {MoveKind::Eij, i, j};
  }
  return *this;
}

IntVector e1(const IntVector& a) {
  if (a.empty()) throw DomainError(ErrorCode::IndexError, "e1 needs r >= 1");
  IntVector out(a);
  out[0] += 2;
  for (std::size_t k = 1; k < out.size(); ++k) out[k] += 1;
  return out;
}

IntVector e1_inverse(const IntVector& a) {
  if (a.empty()) throw DomainError(ErrorCode::IndexError, "e1 needs r >= 1");
  IntVector out(a);
  out[0] -= 2;
  for (std::size_t k = 1; k < out.size(); ++k) out[k] -= 1;
  return out;
}

IntVector e1_at(const IntVector& a, std::size_t i) {
  if (i < 1 || i > a.size()) {
    throw DomainError(ErrorCode::IndexError, "position " + std::to_string(i) + " out of range");
  }
  IntVector out(a);
  std::swap(out[0], out[i - 1]);
  out = e1(out);
  std::swap(out[0], out[i - 1]);
  return out;
}

IntVector eij(const IntVector& a, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > a.size() || j > a.size() || i == j) {
    throw DomainError(ErrorCode::IndexError, "e_{" + std::to_string(i) + "," + std::to_string(j) +
                                                 "} on a vector of length " +
                                                 std::to_string(a.size()));
  }
  IntVector out(a);
  out[i - 1] -= 1;
  out[j - 1] += 1;
  return out;
}

IntVector apply(const IntVector& a, const Move& m) {
  switch (m.kind) {
    case MoveKind::E1: return e1(a);
    case MoveKind::E1Inv: return e1_inverse(a);
    case MoveKind::Eij: return eij(a, m.i, m.j);
    case MoveKind::EijInv: return eij(a, m.j, m.i);
  }
  throw std::logic_error("unknown move");
}

IntVector replay(const IntVector& start, const std::vector<Move>& steps) {
  IntVector v(start);
  for (const auto& m : steps) v = moves::apply(v, m);
  return v;
}

namespace {

// Path from a to b when sigma_1(a) <= sigma_1(b).
std::vector<Move> forward_path(const IntVector& a, const IntVector& b, const Integer& C) {
  const std::size_t r = a.size();
  std::vector<Move> steps;
  for (Integer k = 0; k < C; ++k) steps.push_back({MoveKind::E1, 0, 0});
  // After e1^C the vector is (a_1 + 2C, a_2 + C, ...). Step i moves the excess
  // of entry i onto entry i+1 so that entry i becomes b_i.
  Integer partial_a = 0;
  Integer partial_b = 0;
  for (std::size_t i = 1; i < r; ++i) {
    partial_a += a[i - 1];
    partial_b += b[i - 1];
    Integer exponent = partial_a + Integer(i + 1) * C - partial_b;
    const MoveKind kind = exponent >= 0 ? MoveKind::Eij : MoveKind::EijInv;
    for (Integer k = 0; k < abs(exponent); ++k) steps.push_back({kind, i, i + 1});
  }
  return steps;
}

}  // namespace

MovePath move_path(const ExponentVector& a, const ExponentVector& b) {
  if (a.r() != b.r()) {
    throw DomainError(ErrorCode::LengthMismatch,
                      "a has " + std::to_string(a.r()) + " entries, b has " + std::to_string(b.r()));
  }
  const Integer modulus(a.r() + 1);
  const Integer diff = b.sigma1() - a.sigma1();
  if (diff % modulus != 0) {
    throw DomainError(ErrorCode::ParityError, "sigma_1 differs by " + diff.str() +
                                                  ", not a multiple of r+1 = " + modulus.str());
  }

  MovePath path;
  path.start = a.entries();
  path.end = b.entries();
  if (diff >= 0) {
    path.steps = forward_path(a.entries(), b.entries(), diff / modulus);
  } else {
    auto back = forward_path(b.entries(), a.entries(), -diff / modulus);
    std::reverse(back.begin(), back.end());
    for (auto& m : back) m = m.inverse();
    path.steps = std::move(back);
  }

  IntVector v = path.start;
  path.stage_threshold = sum(v) - 1;
  for (const auto& m : path.steps) {
    v = moves::apply(v, m);
    path.stage_threshold = std::max(path.stage_threshold, Integer(sum(v) - 1));
  }
  if (v != path.end) throw std::logic_error("move path does not land on " + toric::to_string(path.end));
  return path;
}

bool hirzebruch_equiv(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("Hirzebruch indices must be non-negative");
  return (b - a) % 2 == 0;
}

std::string to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::E1: return "e1";
    case MoveKind::E1Inv: return "e1^-1";
    case MoveKind::Eij: return "e" + std::to_string(m.i) + "," + std::to_string(m.j);
    case MoveKind::EijInv: return "e" + std::to_string(m.i) + "," + std::to_string(m.j) + "^-1";
  }
  return "?";
}

}  // namespace toric::moves
