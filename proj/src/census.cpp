#include "toric/census.hpp"

#include "toric/errors.hpp"

#include <map>
#include <sstream>

namespace toric::census {

std::size_t CensusResult::count(const Rational& kappa) const {
  std::size_t n = 0;
  for (const auto& bp : breakpoints) {
    if (Rational(bp.K) < kappa) n += bp.new_members.size();
  }
  return n;
}

std::size_t CensusResult::total_members() const {
  return cls.members.size();
}

CensusResult census(const ExponentVector& a, std::size_t s, std::optional<Integer> sigma1_cap,
                    equiv::ClassOptions options) {
  CensusResult res;
  res.cls = equiv::deformation_class(a, s, sigma1_cap, options);
  res.r = a.r();
  res.s = s;
  res.query = a;

  std::map<Integer, std::vector<ExponentVector>> by_threshold;
  for (const auto& m : res.cls.members) by_threshold[equiv::k_min(m.b, s)].push_back(m.b);
  for (auto& [K, members] : by_threshold) res.breakpoints.push_back({K, std::move(members)});

  if (s >= 2) {
    res.stable_count = res.cls.members.size();
    const Rational r(res.r);
    res.stabilization_threshold = (r + 1 - 1 / r) * Rational(a.sigma1()) - Rational(s);
  } else {
    res.stable_count = Infinite{};
  }
  return res;
}

std::size_t count_at(const ExponentVector& a, std::size_t s, const Rational& kappa,
                     std::optional<Integer> sigma1_cap) {
  if (s == 1 && sigma1_cap && Rational(*sigma1_cap) < kappa + Rational(s)) {
    throw DomainError(ErrorCode::CapRequired, "cap " + sigma1_cap->str() +
                                                  " must be at least kappa + s = " +
                                                  pretty_rational(kappa + Rational(s)));
  }
  return census(a, s, std::move(sigma1_cap)).count(kappa);
}

StableCount count_at_infinity(const ExponentVector& a, std::size_t s) {
  if (a.is_zero()) {
    throw DomainError(ErrorCode::ZeroVector, "a = " + a.str() + " is the product case");
  }
  if (s == 1) return Infinite{};
  return equiv::deformation_class(a, s).members.size();
}

bool is_fano(const ExponentVector& a, std::size_t s) {
  return equiv::k_min(a, s) < 1;
}

bool is_monotone(const Rational& kappa) {
  return kappa == 1;
}

StepReport verify_step_structure(const CensusResult& res) {
  StepReport report;
  if (res.breakpoints.empty()) return report;
  report.k_m = res.breakpoints.front().K;
  const Integer step(res.r + 1);
  for (const auto& bp : res.breakpoints) {
    if ((bp.K - report.k_m) % step != 0) {
      std::ostringstream os;
      os << "breakpoint " << bp.K << " is not congruent to K_M = " << report.k_m << " mod " << step;
      report.violations.push_back(os.str());
    }
    if (res.r == res.s && bp.new_members.size() > 1) {
      std::ostringstream os;
      os << "r = s but breakpoint " << bp.K << " adds " << bp.new_members.size() << " structures:";
      for (const auto& b : bp.new_members) os << ' ' << b.str();
      report.violations.push_back(os.str());
    }
  }
  report.pass = report.violations.empty();
  return report;
}

std::string to_string(const StableCount& c) {
  if (std::holds_alternative<Infinite>(c)) return "infinity";
  return std::to_string(std::get<std::size_t>(c));
}

}  // namespace toric::census
