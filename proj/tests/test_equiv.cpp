#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "toric/equiv.hpp"
#include "toric/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace toric;
namespace eq = toric::equiv;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ExponentVector ev(std::initializer_list<long> xs) { return ExponentVector(iv(xs)); }

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  FAIL("expected a DomainError");
  return ErrorCode::IndexOutOfRange;
}

std::set<std::pair<IntVector, long>> as_set(const eq::DeformationClass& cls) {
  std::set<std::pair<IntVector, long>> out;
  for (const auto& m : cls.members) out.emplace(m.b.entries(), m.C.convert_to<long>());
  return out;
}

}  // namespace

TEST_CASE("k_min examples") {
  CHECK(eq::k_min(ev({1, 4, 4}), 2) == 7);
  CHECK(eq::k_min(ExponentVector::zeros(4), 3) == -3);
  CHECK(eq::k_min(ev({0, 0, 2}), 2) == 0);
}

TEST_CASE("find_shift examples") {
  CHECK(eq::find_shift(ev({1, 4, 4}), ev({2, 2, 5}), 2) == Integer(0));
  CHECK(eq::find_shift(ev({0, 0, 2}), ev({2, 2, 2}), 2) == Integer(1));
  CHECK(eq::find_shift(ev({1, 5}), ev({4, 5}), 2) == Integer(1));
  CHECK_FALSE(eq::find_shift(ev({1, 4, 4}), ev({2, 2, 5}), 3).has_value());
  CHECK_FALSE(eq::find_shift(ev({1, 4, 4}), ev({1, 4, 5}), 2).has_value());
  CHECK(code_of([] { eq::find_shift(ev({1, 4}), ev({1, 4, 4}), 2); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { eq::find_shift(ev({0, 0}), ev({0, 0}), 2); }) == ErrorCode::ZeroVector);
}

TEST_CASE("find_shift agrees with brute force on (1,5)") {
  auto brute = oracle::brute_class(ev({1, 5}), 2, -10, 10);
  std::set<std::pair<IntVector, long>> got;
  for (const auto& m : brute) got.emplace(m.b, m.C);
  CHECK(got.count({iv({4, 5}), 1}) == 1);
}

TEST_CASE("c_bounds examples") {
  auto b = eq::c_bounds(ev({1, 4, 4}));
  CHECK(b.lo == q(-9, 4));
  CHECK(b.hi == 6);
  CHECK(b.first() == -2);
  CHECK(b.last() == 6);
  auto b2 = eq::c_bounds(ev({0, 2}));
  CHECK(b2.lo == q(-2, 3));
  CHECK(b2.hi == 1);
  auto b3 = eq::c_bounds(ev({11, 13}));
  CHECK(b3.lo == -8);
  CHECK(b3.hi == 12);
  CHECK(code_of([] { eq::c_bounds(ev({0, 0})); }) == ErrorCode::ZeroVector);
}

TEST_CASE("enumerate_b examples") {
  CHECK(eq::enumerate_b(ev({1, 4, 4}), 0, 2) == std::vector<ExponentVector>{ev({1, 4, 4}), ev({2, 2, 5})});
  CHECK(eq::enumerate_b(ev({0, 2}), 1, 2).empty());
  CHECK(eq::enumerate_b(ev({0, 0, 2}), 2, 2).empty());
  CHECK(eq::enumerate_b(ev({0, 0, 2}), 1, 2) == std::vector<ExponentVector>{ev({2, 2, 2})});
  // Negative target sum: nothing.
  CHECK(eq::enumerate_b(ev({1, 4, 4}), -3, 2).empty());
}

TEST_CASE("enumerate_b matches exhaustive search") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (const auto& a : oracle::sweep(r, 7)) {
      for (std::size_t s = 1; s <= 5; ++s) {
        for (long C = -3; C <= 6; ++C) {
          std::vector<IntVector> want;
          for (const auto& m : oracle::brute_class(a, s, C, C)) want.push_back(m.b);
          std::vector<IntVector> got;
          for (const auto& b : eq::enumerate_b(a, C, s)) got.push_back(b.entries());
          CAPTURE(a.str());
          CAPTURE(s);
          CAPTURE(C);
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("sigma2_holds examples") {
  CHECK(eq::sigma2_holds(ev({1, 4, 4}), 1));
  CHECK(eq::enumerate_b(ev({1, 4, 4}), 1, 2).empty());
  for (std::size_t r = 2; r <= 6; ++r) {
    for (std::size_t k = 1; k <= r; ++k) {
      IntVector a(r - k, Integer(0));
      a.insert(a.end(), k, Integer(1));
      CHECK(eq::sigma2_holds(ExponentVector(a), 1));
      CHECK(eq::enumerate_b(ExponentVector(a), 1, 2).empty());
    }
  }
  // Equality case: the balanced vector (2,2,2) is itself a solution.
  CHECK(eq::sigma2_holds(ev({0, 0, 2}), 1));
  CHECK(eq::enumerate_b(ev({0, 0, 2}), 1, 2).size() == 1);
  CHECK_THROWS_AS(eq::sigma2_holds(ev({0, 0, 2}), 0), std::invalid_argument);
}

TEST_CASE("deformation_class examples") {
  auto cls = eq::deformation_class(ev({1, 4, 4}), 2);
  CHECK(cls.complete);
  CHECK(as_set(cls) == std::set<std::pair<IntVector, long>>{{iv({1, 4, 4}), 0}, {iv({2, 2, 5}), 0}});

  auto single = eq::deformation_class(ev({2, 3}), 3);
  CHECK(as_set(single) == std::set<std::pair<IntVector, long>>{{iv({2, 3}), 0}});

  auto fam = as_set(eq::deformation_class(ev({11, 13}), 2));
  CHECK(fam.count({iv({2, 13}), -3}) == 1);
  CHECK(fam.count({iv({7, 14}), -1}) == 1);
  CHECK(fam.count({iv({11, 13}), 0}) == 1);

  CHECK(code_of([] { eq::deformation_class(ev({0, 0}), 2); }) == ErrorCode::ZeroVector);
  CHECK(code_of([] { eq::deformation_class(ev({1}), 1); }) == ErrorCode::CapRequired);
}

TEST_CASE("s = 1 classes are congruence classes under a cap") {
  auto cls = eq::deformation_class(ev({1, 2}), 1, Integer(9));
  CHECK_FALSE(cls.complete);
  std::set<IntVector> want;
  for (long total : {0L, 3L, 6L, 9L}) {
    for (auto& b : oracle::partitions(total, 2)) want.insert(b);
  }
  std::set<IntVector> got;
  for (const auto& m : cls.members) {
    got.insert(m.b.entries());
    CHECK(m.C * 3 == m.b.sigma1() - 3);
  }
  CHECK(got == want);
}

TEST_CASE("class invariants on the sweep") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t s = 2; s <= 4; ++s) {
      for (const auto& a : oracle::sweep(r, 8)) {
        CAPTURE(a.str());
        CAPTURE(s);
        auto bounds = eq::c_bounds(a);
        auto cls = eq::deformation_class(a, s);
        CHECK(cls.complete);
        CHECK(std::is_sorted(cls.members.begin(), cls.members.end(), [](const auto& x, const auto& y) {
          return std::tie(x.C, x.b) < std::tie(y.C, y.b);
        }));
        std::set<IntVector> distinct;
        bool has_self = false;
        for (const auto& m : cls.members) {
          CHECK(distinct.insert(m.b.entries()).second);
          has_self |= (m.b == a && m.C == 0);
          CHECK(Rational(m.C) >= bounds.lo);
          CHECK(Rational(m.C) <= bounds.hi);
          CHECK(eq::find_shift(a, m.b, s) == m.C);
        }
        CHECK(has_self);

        // Bound soundness and completeness: nothing outside [lo, hi], same set inside.
        auto brute = oracle::brute_class(a, s, bounds.first().convert_to<long>() - 3,
                                         bounds.last().convert_to<long>() + 3);
        std::set<std::pair<IntVector, long>> brute_set;
        for (const auto& m : brute) brute_set.emplace(m.b, m.C);
        CHECK(brute_set == as_set(cls));

        eq::ClassOptions no_prune;
        no_prune.sigma2_pruning = false;
        CHECK(as_set(eq::deformation_class(a, s, std::nullopt, no_prune)) == as_set(cls));

        if (r < s) CHECK(cls.members.size() == 1);
        // Members that also have sigma_1 <= s collapse onto a itself; larger
        // members may exist, e.g. (2,2,2) in the class of (0,0,2).
        if (a.sigma1() <= Integer(s)) {
          for (const auto& m : cls.members) {
            if (m.b.sigma1() > Integer(s)) continue;
            CHECK(m.C == 0);
            CHECK(m.b == a);
          }
        }
      }
    }
  }
}

TEST_CASE("reflexive, symmetric and transitive on the sweep") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t s = 1; s <= 4; ++s) {
      auto vs = oracle::sweep(r, 8);
      for (const auto& a : vs) {
        CHECK(eq::find_shift(a, a, s) == Integer(0));
        for (const auto& b : vs) {
          auto ab = eq::find_shift(a, b, s);
          auto ba = eq::find_shift(b, a, s);
          REQUIRE(ab.has_value() == ba.has_value());
          if (!ab) continue;
          CHECK(*ba == -*ab);
        }
      }
    }
  }
  // Transitivity inside one class with several shifts.
  auto cls = eq::deformation_class(ev({11, 13}), 2);
  for (const auto& x : cls.members) {
    for (const auto& y : cls.members) {
      auto xy = eq::find_shift(x.b, y.b, 2);
      REQUIRE(xy.has_value());
      CHECK(*xy == y.C - x.C);
    }
  }
}
