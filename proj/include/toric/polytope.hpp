#pragma once

#include "toric/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

/// Normalized twisting data a = (a_1, ..., a_r): non-negative, non-decreasing, r >= 1.
class ExponentVector {
 public:
  /// Throws std::invalid_argument unless `entries` is already normalized.
  explicit ExponentVector(IntVector entries);

  /// Sorts before validating; negative entries are still rejected.
  static ExponentVector normalized(IntVector entries);
  static ExponentVector zeros(std::size_t r);

  const IntVector& entries() const noexcept { return entries_; }
  std::size_t r() const noexcept { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer sigma1() const { return sum(entries_); }
  bool is_zero() const;

  std::string str() const { return to_string(entries_); }

  friend bool operator==(const ExponentVector& x, const ExponentVector& y) {
    return x.entries_ == y.entries_;
  }
  friend bool operator<(const ExponentVector& x, const ExponentVector& y) {
    return x.entries_ < y.entries_;
  }

 private:
  IntVector entries_;
};

/// One toric structure (a; kappa) on a CP^r bundle over CP^s.
class BundleTuple {
 public:
  /// Throws DomainError(InvalidKappa) unless kappa > sigma_1(a) - s.
  BundleTuple(ExponentVector a, std::size_t s, Rational kappa);

  std::size_t r() const noexcept { return a_.r(); }
  std::size_t s() const noexcept { return s_; }
  std::size_t dim() const noexcept { return r() + s_; }
  const ExponentVector& a() const noexcept { return a_; }
  const Rational& kappa() const noexcept { return kappa_; }

  /// K_a(s) = sigma_1(a) - s.
  Integer threshold() const { return a_.sigma1() - Integer(s_); }

  std::string str() const;

  friend bool operator==(const BundleTuple& x, const BundleTuple& y) {
    return x.s_ == y.s_ && x.a_ == y.a_ && x.kappa_ == y.kappa_;
  }

 private:
  ExponentVector a_;
  std::size_t s_;
  Rational kappa_;
};

/// Half-space <x, conormal> <= constant.
struct Facet {
  IntVector conormal;
  Rational constant;
};

struct DelzantPolytope {
  std::size_t dim = 0;
  std::vector<Facet> facets;
};

struct Vertex {
  RationalVector point;
  std::vector<std::size_t> active;  // facet indices, ascending
};

using VertexSet = std::vector<Vertex>;

struct DelzantCheck {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const noexcept { return ok; }
};

/// x -> scale * (matrix * x + translation), with an integer unimodular matrix
/// and a positive rational scale. Facets transform by the inverse transpose.
struct AffineMap {
  std::vector<IntVector> matrix;
  RationalVector translation;
  Rational scale = 1;

  static AffineMap identity(std::size_t n);

  RationalVector apply(const RationalVector& x) const;
  DelzantPolytope apply(const DelzantPolytope& p) const;
};

/// A normal-form reading of a polytope: `map` carries the polytope onto
/// build(tuple).
struct Presentation {
  BundleTuple tuple;
  AffineMap map;
};

namespace polytope {

/// The r+s+2 facets of the bundle polytope, in the fixed order: base -e_i,
/// base (1,..,1,0,..,0), fiber -e_{r+j}, twisted (-a, 1,..,1).
DelzantPolytope build(const BundleTuple& t);

/// Brute-force H-to-V conversion over all dim-subsets of facets.
/// Throws Unbounded or NotSimple. Vertices come back sorted by coordinates.
VertexSet vertices(const DelzantPolytope& p);

DelzantCheck is_delzant(const DelzantPolytope& p);

/// Exact Euclidean volume by fiber integration over the base simplex.
Rational exact_volume(const BundleTuple& t);

/// (1/r!)(1/s!)(r+1)^r (kappa+s)^s.
Rational nominal_volume(std::size_t r, std::size_t s, const Rational& kappa);

/// Sorted edge lengths of the r+1 fiber simplices over the base vertices, read
/// off the vertex coordinates.
RationalVector fiber_fingerprint(const BundleTuple& t);

/// Every normal-form presentation of a polytope with product combinatorics,
/// one per (r, s), sorted by (r, s). Throws NotABundle.
std::vector<Presentation> recognize(const DelzantPolytope& p);

Integer determinant(const std::vector<IntVector>& rows);

}  // namespace polytope
}  // namespace toric
