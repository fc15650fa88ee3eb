#include "toric/equiv.hpp"

#include "toric/errors.hpp"
#include "toric/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric::equiv {

namespace {

void require_nonzero(const ExponentVector& a) {
  if (a.is_zero()) {
    throw DomainError(ErrorCode::ZeroVector,
                      "a = " + a.str() +
                          " is the product case CP^r x CP^s; its toric structures are not "
                          "governed by the shifted sigma criterion");
  }
}

std::size_t criterion_degree(std::size_t r, std::size_t s) {
  if (s < 1) throw std::invalid_argument("base dimension s must be >= 1");
  return std::min(r + 1, s);
}

Integer sigma2_of_sum_squares(const Integer& total, const Integer& sum_sq) {
  return (total * total - sum_sq) / 2;
}

// Depth-first search over non-decreasing b with fixed sum, pruned by the
// attainable range of sigma_2.
class BSearch {
 public:
  BSearch(std::size_t r, Integer total, IntVector targets)
      : r_(r), targets_(std::move(targets)), use_sigma2_(targets_.size() > 2) {
    prefix_.reserve(r);
    walk(0, std::move(total), Integer(0), Integer(0), Integer(0));
  }

  std::vector<ExponentVector> take() { return std::move(found_); }

 private:
  void walk(std::size_t pos, Integer remaining, Integer lo, Integer p1, Integer p2) {
    const std::size_t left = r_ - pos;
    if (left == 0) {
      if (remaining == 0) accept();
      return;
    }
    if (remaining < lo * left) return;
    if (use_sigma2_) {
      const Integer& target2 = targets_[2];
      // Suffix sigma_2 is largest when balanced and smallest when all but one
      // entry sit at the lower bound.
      Integer q = remaining / left;
      Integer l = remaining % left;
      Integer max_sq = (Integer(left) - l) * q * q + l * (q + 1) * (q + 1);
      Integer top = remaining - (Integer(left) - 1) * lo;
      Integer min_sq = (Integer(left) - 1) * lo * lo + top * top;
      Integer base = p2 + p1 * remaining;
      if (target2 > base + sigma2_of_sum_squares(remaining, max_sq)) return;
      if (target2 < base + sigma2_of_sum_squares(remaining, min_sq)) return;
    }
    Integer hi = remaining / left;
    for (Integer v = lo; v <= hi; ++v) {
      prefix_.push_back(v);
      walk(pos + 1, remaining - v, v, p1 + v, p2 + p1 * v);
      prefix_.pop_back();
    }
  }

  void accept() {
    // (0, b) has the same sigma_i as b for i <= r and sigma_{r+1} = 0.
    IntVector zb;
    zb.reserve(r_ + 1);
    zb.push_back(0);
    zb.insert(zb.end(), prefix_.begin(), prefix_.end());
    if (symfun::elem_sym_upto(zb, targets_.size() - 1) == targets_) {
      found_.emplace_back(prefix_);
    }
  }

  std::size_t r_;
  IntVector targets_;
  bool use_sigma2_;
  IntVector prefix_;
  std::vector<ExponentVector> found_;
};

}  // namespace

Integer k_min(const ExponentVector& a, std::size_t s) {
  return a.sigma1() - Integer(s);
}

std::optional<Integer> find_shift(const ExponentVector& a, const ExponentVector& b, std::size_t s) {
  if (a.r() != b.r()) {
    throw DomainError(ErrorCode::LengthMismatch,
                      "a has " + std::to_string(a.r()) + " entries, b has " + std::to_string(b.r()));
  }
  if (a.is_zero() && b.is_zero()) {
    throw DomainError(ErrorCode::ZeroVector, "both vectors are zero (product case)");
  }
  const std::size_t r = a.r();
  const std::size_t m = criterion_degree(r, s);
  Integer diff = b.sigma1() - a.sigma1();
  if (diff % Integer(r + 1) != 0) return std::nullopt;
  Integer C = diff / Integer(r + 1);
  IntVector lhs = symfun::prepend_shifted(a.entries(), C);
  IntVector rhs = symfun::prepend_shifted(b.entries(), Integer(0));
  if (!symfun::truncated_sym_equal(lhs, rhs, m)) return std::nullopt;
  return C;
}

CBounds c_bounds(const ExponentVector& a) {
  require_nonzero(a);
  const Integer sigma1 = a.sigma1();
  const std::size_t r = a.r();
  return {Rational(-sigma1, Integer(r + 1)), Rational(Integer(r - 1) * sigma1, Integer(r))};
}

std::vector<ExponentVector> enumerate_b(const ExponentVector& a, const Integer& C, std::size_t s) {
  const std::size_t r = a.r();
  const std::size_t m = criterion_degree(r, s);
  Integer total = a.sigma1() + Integer(r + 1) * C;
  if (total < 0) return {};
  IntVector targets = symfun::elem_sym_upto(symfun::prepend_shifted(a.entries(), C), m);
  // sigma_{r+1}(0, b) vanishes, so a nonzero target there rules out every b.
  if (m == r + 1 && targets[m] != 0) return {};
  return BSearch(r, std::move(total), std::move(targets)).take();
}

bool sigma2_holds(const ExponentVector& a, const Integer& C) {
  if (C < 1) throw std::invalid_argument("sigma2_holds needs C >= 1");
  const std::size_t r = a.r();
  IntVector shifted = symfun::prepend_shifted(a.entries(), C);
  Integer total = sum(shifted);
  Integer k = total / Integer(r);
  Integer l = total % Integer(r);
  IntVector balanced{Integer(0)};
  for (std::size_t i = 0; i < r; ++i) balanced.push_back(Integer(i) < Integer(r) - l ? k : Integer(k + 1));
  return symfun::elem_sym(balanced, 2) <= symfun::elem_sym(shifted, 2);
}

DeformationClass deformation_class(const ExponentVector& a, std::size_t s,
                                   std::optional<Integer> sigma1_cap, ClassOptions options) {
  require_nonzero(a);
  const std::size_t r = a.r();
  criterion_degree(r, s);
  DeformationClass cls;
  cls.r = r;
  cls.s = s;
  std::ostringstream bound;

  if (s == 1) {
    if (!sigma1_cap) {
      throw DomainError(ErrorCode::CapRequired,
                        "over CP^1 the class is infinite; pass a cap on sigma_1(b)");
    }
    if (*sigma1_cap < a.sigma1()) {
      throw DomainError(ErrorCode::CapRequired, "cap " + sigma1_cap->str() +
                                                    " is below sigma_1(a) = " + a.sigma1().str());
    }
    Integer C = ceil_of(Rational(-a.sigma1(), Integer(r + 1)));
    for (; a.sigma1() + Integer(r + 1) * C <= *sigma1_cap; ++C) {
      for (auto& b : enumerate_b(a, C, s)) cls.members.push_back({std::move(b), C});
    }
    cls.complete = false;
    bound << "sigma_1(b) <= " << *sigma1_cap << " (s = 1: infinite class, capped)";
  } else {
    const CBounds bounds = c_bounds(a);
    Integer C = bounds.first();
    Integer stop = bounds.last();
    bound << "C in [" << bounds.first() << ", " << bounds.last() << "] from ["
          << pretty_rational(bounds.lo) << ", " << pretty_rational(bounds.hi) << "]";
    for (; C <= stop; ++C) {
      for (auto& b : enumerate_b(a, C, s)) cls.members.push_back({std::move(b), C});
      if (options.sigma2_pruning && C >= 1 && C < stop && sigma2_holds(a, C)) {
        bound << "; sigma_2 bound closes C > " << C;
        break;
      }
    }
    cls.complete = true;
  }

  std::sort(cls.members.begin(), cls.members.end(), [](const auto& x, const auto& y) {
    if (x.C != y.C) return x.C < y.C;
    return x.b < y.b;
  });
  cls.bound_used = bound.str();
  return cls;
}

}  // namespace toric::equiv
