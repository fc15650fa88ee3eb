#pragma once

#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

// Deformation equivalence of CP^r bundles over CP^s, decided by the shifted
// symmetric-function criterion: a ~ b iff some integer C has
//   sigma_i(C, C+a) = sigma_i(0, b)   for 1 <= i <= min(r+1, s).
namespace toric::equiv {

/// Certifies a ~ b: sigma_i(C, C+a) = sigma_i(0, b) up to min(r+1, s).
struct EquivalenceWitness {
  ExponentVector b;
  Integer C;
};

struct DeformationClass {
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<EquivalenceWitness> members;  // sorted by (C, b); includes (a, 0)
  bool complete = false;
  std::string bound_used;
};

struct ClassOptions {
  // Skip every C above the first C >= 1 whose balanced-vector bound holds.
  bool sigma2_pruning = true;
};

/// K_a(s) = sigma_1(a) - s.
Integer k_min(const ExponentVector& a, std::size_t s);

/// The unique candidate C = (sigma_1(b) - sigma_1(a)) / (r+1), when it is an
/// integer and passes the remaining sigma_i checks.
std::optional<Integer> find_shift(const ExponentVector& a, const ExponentVector& b, std::size_t s);

struct CBounds {
  Rational lo;
  Rational hi;
  Integer first() const { return ceil_of(lo); }
  Integer last() const { return floor_of(hi); }
};

/// [-sigma_1(a)/(r+1), (r-1) sigma_1(a)/r]. Throws ZeroVector for a = 0.
CBounds c_bounds(const ExponentVector& a);

/// All normalized b of length r matching (C, C+a) up to min(r+1, s).
std::vector<ExponentVector> enumerate_b(const ExponentVector& a, const Integer& C, std::size_t s);

/// Whether the balanced vector with sigma_1 = sigma_1(C, C+a) has sigma_2 no
/// larger than sigma_2(C, C+a). When it does, no C' > C admits any b.
/// Requires C >= 1.
bool sigma2_holds(const ExponentVector& a, const Integer& C);

/// The deformation class of a over CP^s.
///
/// For s >= 2 the search over C is finite and the result is complete. For s = 1
/// the class is the infinite congruence class sigma_1(b) = sigma_1(a) mod (r+1);
/// `sigma1_cap` is then required and the members are those with sigma_1(b) <= cap.
///
/// Throws ZeroVector for a = 0 and CapRequired for s = 1 without a usable cap.
DeformationClass deformation_class(const ExponentVector& a, std::size_t s,
                                   std::optional<Integer> sigma1_cap = std::nullopt,
                                   ClassOptions options = {});

}  // namespace toric::equiv
