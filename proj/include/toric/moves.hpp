#pragma once

#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

#include <string>
#include <vector>

// Elementary moves between toric structures over CP^1. Moves act on raw
// integer vectors: intermediate stages may be unsorted or negative.
namespace toric::moves {

enum class MoveKind { E1, E1Inv, Eij, EijInv };

/// Indices are 1-based, as in e_{i,j}.
struct Move {
  MoveKind kind = MoveKind::E1;
  std::size_t i = 0;
  std::size_t j = 0;

  Move inverse() const;
  friend bool operator==(const Move&, const Move&) = default;
};

struct MovePath {
  IntVector start;
  std::vector<Move> steps;
  IntVector end;
  // Every stage v along the path is realizable for kappa > stage_threshold,
  // i.e. stage_threshold = max over stages of sigma_1(v) - 1.
  Integer stage_threshold;
};

/// (a_1 + 2, a_2 + 1, ..., a_r + 1).
IntVector e1(const IntVector& a);
IntVector e1_inverse(const IntVector& a);

/// e1 with the +2 at position i (1-based): e1 conjugated by the swap (1 i).
IntVector e1_at(const IntVector& a, std::size_t i);

/// Entry i down by one, entry j up by one. Throws IndexError.
IntVector eij(const IntVector& a, std::size_t i, std::size_t j);

IntVector apply(const IntVector& a, const Move& m);
IntVector replay(const IntVector& start, const std::vector<Move>& steps);

/// The explicit e1^C followed by e_{i,i+1} powers. Throws ParityError when
/// sigma_1(a) and sigma_1(b) differ mod r+1, LengthMismatch on unequal r.
MovePath move_path(const ExponentVector& a, const ExponentVector& b);

/// Hirzebruch surfaces H_a, H_b are deformation equivalent iff b - a is even.
bool hirzebruch_equiv(const Integer& a, const Integer& b);

std::string to_string(const Move& m);

}  // namespace toric::moves
