#pragma once

#include "toric/equiv.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace toric::census {

struct Infinite {
  friend bool operator==(Infinite, Infinite) { return true; }
};

/// Limit of N(a; kappa) as kappa grows: finite for s >= 2, Infinite over CP^1.
using StableCount = std::variant<std::size_t, Infinite>;

/// Structures (b; kappa) exist exactly for kappa > K, with K = sigma_1(b) - s.
struct Breakpoint {
  Integer K;
  std::vector<ExponentVector> new_members;
};

struct CensusResult {
  std::size_t r = 0;
  std::size_t s = 0;
  ExponentVector query = ExponentVector::zeros(1);
  std::vector<Breakpoint> breakpoints;  // ascending K
  StableCount stable_count;
  std::optional<Rational> stabilization_threshold;  // (r+1-1/r) sigma_1(a) - s, for s >= 2
  equiv::DeformationClass cls;

  /// N(kappa): members with K strictly below kappa.
  std::size_t count(const Rational& kappa) const;
  std::size_t total_members() const;
};

CensusResult census(const ExponentVector& a, std::size_t s,
                    std::optional<Integer> sigma1_cap = std::nullopt,
                    equiv::ClassOptions options = {});

/// N(a; kappa). Over CP^1 the cap must reach kappa + s.
std::size_t count_at(const ExponentVector& a, std::size_t s, const Rational& kappa,
                     std::optional<Integer> sigma1_cap = std::nullopt);

StableCount count_at_infinity(const ExponentVector& a, std::size_t s);

/// K_a(s) < 1.
bool is_fano(const ExponentVector& a, std::size_t s);
bool is_monotone(const Rational& kappa);

struct StepReport {
  bool pass = true;
  Integer k_m;  // smallest breakpoint
  std::vector<std::string> violations;
};

/// Jumps sit on K_M + l(r+1); for r = s each jump has size at most one.
StepReport verify_step_structure(const CensusResult& res);

std::string to_string(const StableCount& c);

}  // namespace toric::census
