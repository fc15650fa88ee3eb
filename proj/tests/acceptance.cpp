// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"
#include "toric/census.hpp"
#include "toric/equiv.hpp"
#include "toric/errors.hpp"
#include "toric/families.hpp"
#include "toric/moves.hpp"
#include "toric/polytope.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace toric;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;

  // Records a check; keeps the first failure message.
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ExponentVector ev(std::initializer_list<long> xs) { return ExponentVector(iv(xs)); }

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }

std::size_t finite(const census::StableCount& c) {
  return std::holds_alternative<std::size_t>(c) ? std::get<std::size_t>(c) : SIZE_MAX;
}

std::string label(const ExponentVector& a, std::size_t s) { return a.str() + " s=" + std::to_string(s); }

std::set<std::pair<IntVector, Integer>> member_set(const equiv::DeformationClass& cls) {
  std::set<std::pair<IntVector, Integer>> out;
  for (const auto& m : cls.members) out.emplace(m.b.entries(), m.C);
  return out;
}

// Census results for the sweep s >= 2, r <= 4, sigma_1 <= 8, computed once.
struct SweepEntry {
  ExponentVector a;
  std::size_t s;
  census::CensusResult res;
};

const std::vector<SweepEntry>& census_sweep() {
  static const std::vector<SweepEntry> entries = [] {
    std::vector<SweepEntry> out;
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t s = 2; s <= 4; ++s) {
        for (const auto& a : oracle::sweep(r, 8)) out.push_back({a, s, census::census(a, s)});
      }
    }
    return out;
  }();
  return entries;
}

Outcome criterion1() {
  Outcome o;
  auto res = census::census(ev({1, 4, 4}), 2);
  std::set<IntVector> members;
  for (const auto& m : res.cls.members) members.insert(m.b.entries());
  o.expect(members == std::set<IntVector>{iv({1, 4, 4}), iv({2, 2, 5})}, "member set differs");
  o.expect(res.breakpoints.size() == 1 && res.breakpoints[0].K == 7, "breakpoints differ from {7}");
  o.expect(res.count(6) == 0 && res.count(7) == 0, "N should be 0 at kappa 6, 7");
  o.expect(res.count(q(15, 2)) == 2 && res.count(100) == 2, "N should be 2 at kappa 15/2, 100");
  if (o.pass) o.detail = "members {(1,4,4),(2,2,5)}, breakpoint 7, N(6)=N(7)=0, N(15/2)=N(100)=2";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::size_t r = 3; r <= 5; ++r) {
    IntVector a(r - 1, Integer(0));
    a.push_back(2);
    IntVector b(r - 3, Integer(1));
    b.insert(b.end(), 3, Integer(2));
    auto res = census::census(ExponentVector(a), 2);
    std::set<IntVector> members;
    for (const auto& m : res.cls.members) members.insert(m.b.entries());
    const std::string tag = "r=" + std::to_string(r) + ": ";
    o.expect(members == std::set<IntVector>{a, b}, tag + "member set differs");
    o.expect(res.breakpoints.size() == 2 && res.breakpoints[0].K == 0 &&
                 res.breakpoints[1].K == Integer(r + 1),
             tag + "breakpoints differ from {0, r+1}");
    const Rational top(r + 1);
    o.expect(res.count(-1) == 0 && res.count(0) == 0, tag + "N should be 0 for kappa <= 0");
    o.expect(res.count(q(1, 100)) == 1 && res.count(1) == 1 && res.count(top) == 1,
             tag + "N should be 1 on 0 < kappa <= r+1");
    o.expect(res.count(top + q(1, 100)) == 2 && res.count(top + 50) == 2, tag + "N should be 2 for kappa > r+1");
  }
  if (o.pass) o.detail = "r=3,4,5: classes {(0,..,0,2),(1,..,1,2,2,2)}, breakpoints {0,r+1}, N = 0/1/2";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto a : {ev({0, 1}), ev({1, 1}), ev({0, 2})}) {
    o.expect(finite(census::count_at_infinity(a, 2)) == 1, a.str() + " should have N(inf) = 1");
  }
  bool zero = false;
  try {
    census::count_at_infinity(ev({0, 0}), 2);
  } catch (const DomainError& e) {
    zero = e.code() == ErrorCode::ZeroVector;
  }
  o.expect(zero, "(0,0) should raise ZeroVector");
  if (o.pass) o.detail = "(0,1),(1,1),(0,2) -> 1; (0,0) -> ZeroVector";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t r = 2; r <= 6; ++r) {
    for (std::size_t s = 2; s <= r; ++s) {
      for (std::size_t k = 1; k <= r; ++k) {
        IntVector a(r - k, Integer(0));
        a.insert(a.end(), k, Integer(1));
        ExponentVector av(a);
        o.expect(finite(census::count_at_infinity(av, s)) == 1, label(av, s) + " should have N(inf) = 1");
        ++cases;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " (r, s, k) cases with 2 <= s <= r <= 6, 1 <= k <= r";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t s = 2; s <= 4; ++s) {
    for (std::size_t r = 1; r < s; ++r) {
      for (const auto& a : oracle::sweep(r, 8)) {
        auto res = census::census(a, s);
        const Rational K_a(equiv::k_min(a, s));
        o.expect(res.cls.members.size() == 1 && res.cls.members[0].b == a, label(a, s) + " class is not {a}");
        o.expect(res.count(K_a) == 0, label(a, s) + " N(K_a) != 0");
        for (const Rational& dk : {q(1, 7), q(1, 2), q(1), q(5, 2), q(40)}) {
          o.expect(res.count(K_a + dk) == 1, label(a, s) + " N != 1 above K_a");
        }
        ++cases;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " vectors with r < s <= 4, sigma_1 <= 8";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t s = 1; s <= 4; ++s) {
      for (const auto& a : oracle::sweep(r, static_cast<long>(s))) {
        if (equiv::k_min(a, s) >= 1) continue;
        // Over CP^1 the capped class must reach kappa + s = 2.
        std::optional<Integer> cap;
        if (s == 1) cap = Integer(2);
        o.expect(census::count_at(a, s, 1, cap) == 1, label(a, s) + " count_at(kappa=1) != 1");
        ++cases;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " Fano vectors with r, s <= 4";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t breakpoints = 0;
  for (const auto& e : census_sweep()) {
    const auto& bps = e.res.breakpoints;
    o.expect(!bps.empty(), label(e.a, e.s) + " has no breakpoints");
    if (bps.empty()) continue;
    const Integer K_M = bps.front().K;
    const std::size_t r = e.a.r();
    for (const auto& bp : bps) {
      ++breakpoints;
      o.expect((bp.K - K_M) % Integer(r + 1) == 0,
               label(e.a, e.s) + " breakpoint " + bp.K.str() + " not = K_M mod r+1");
      if (r == e.s) o.expect(bp.new_members.size() <= 1, label(e.a, e.s) + " jump larger than 1 with r = s");
    }
    o.expect(census::verify_step_structure(e.res).pass, label(e.a, e.s) + " verify_step_structure failed");
  }
  if (o.pass) {
    o.detail = std::to_string(census_sweep().size()) + " classes, " + std::to_string(breakpoints) + " breakpoints";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t witnesses = 0;
  for (const auto& e : census_sweep()) {
    auto bounds = equiv::c_bounds(e.a);
    const long lo = bounds.first().convert_to<long>() - 3;
    const long hi = bounds.last().convert_to<long>() + 3;
    std::set<std::pair<IntVector, Integer>> brute;
    for (const auto& m : oracle::brute_class(e.a, e.s, lo, hi)) {
      o.expect(Rational(m.C) >= bounds.lo && Rational(m.C) <= bounds.hi,
               label(e.a, e.s) + " witness with C = " + std::to_string(m.C) + " outside the bounds");
      brute.emplace(m.b, Integer(m.C));
      ++witnesses;
    }
    o.expect(brute == member_set(e.res.cls), label(e.a, e.s) + " class differs from brute force");
    const Rational kappa = *e.res.stabilization_threshold + 1;
    o.expect(census::count_at(e.a, e.s, kappa) == finite(census::count_at_infinity(e.a, e.s)),
             label(e.a, e.s) + " not stable at threshold + 1");
  }
  if (o.pass) o.detail = std::to_string(witnesses) + " brute-force witnesses, all inside the bounds";
  return o;
}

Outcome criterion9() {
  Outcome o;
  equiv::ClassOptions off;
  off.sigma2_pruning = false;
  for (const auto& e : census_sweep()) {
    auto unpruned = equiv::deformation_class(e.a, e.s, std::nullopt, off);
    o.expect(member_set(unpruned) == member_set(e.res.cls), label(e.a, e.s) + " pruning changed the class");
  }
  if (o.pass) o.detail = std::to_string(census_sweep().size()) + " classes identical with and without pruning";
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto cert = families::generate_family(3, 2, families::Strategy::Greedy);
  o.expect(cert.K == 11 && cert.a == ev({11, 13}), "K or a differs from 11, (11,13)");
  o.expect(cert.witnesses.size() == 2, "expected two witnesses");
  if (cert.witnesses.size() == 2) {
    o.expect(cert.witnesses[0].b == ev({2, 13}) && cert.witnesses[1].b == ev({7, 14}),
             "witnesses differ from (2,13), (7,14)");
  }
  bool verified = true;
  try {
    families::verify(cert);
  } catch (const DomainError&) {
    verified = false;
  }
  o.expect(verified, "certificate does not verify");
  for (const auto& w : cert.witnesses) {
    o.expect(equiv::find_shift(cert.a, w.b, 2) == w.C, "witness " + w.b.str() + " fails find_shift");
  }
  auto stable = census::count_at_infinity(ev({11, 13}), 2);
  o.expect(finite(stable) >= 3 && finite(stable) != SIZE_MAX, "census stable count below 3");
  auto lifted = families::lift_class(cert, 1);
  o.expect(lifted.size() == 3, "lift should give 3 vectors");
  for (const auto& x : lifted) {
    for (const auto& y : lifted) {
      o.expect(equiv::find_shift(x, y, 2).has_value(), "lifted " + x.str() + " !~ " + y.str());
    }
  }
  std::set<ExponentVector> distinct(lifted.begin(), lifted.end());
  o.expect(distinct.size() == lifted.size(), "lifted vectors are not distinct");
  if (o.pass) {
    std::ostringstream d;
    d << "K=11, witnesses (2,13) C=-3 and (7,14) C=-1, stable count " << finite(stable) << ", lift";
    for (const auto& x : lifted) d << ' ' << x.str();
    o.detail = d.str();
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::size_t paths = 0, refused = 0;
  for (std::size_t r = 1; r <= 4; ++r) {
    auto vs = oracle::sweep(r, 10, true);
    for (const auto& a : vs) {
      for (const auto& b : vs) {
        const bool congruent = (a.sigma1() - b.sigma1()) % Integer(r + 1) == 0;
        const std::string tag = a.str() + " -> " + b.str();
        try {
          auto path = moves::move_path(a, b);
          o.expect(congruent, tag + ": path for incongruent pair");
          o.expect(moves::replay(path.start, path.steps) == b.entries() && path.end == b.entries(),
                   tag + ": replay does not land on b");
          for (const auto& m : path.steps) {
            if (m.kind == moves::MoveKind::Eij || m.kind == moves::MoveKind::EijInv) {
              o.expect(m.i >= 1 && m.j >= 1 && m.i <= r && m.j <= r && m.i != m.j, tag + ": bad move index");
            }
          }
          ++paths;
        } catch (const DomainError& e) {
          o.expect(!congruent && e.code() == ErrorCode::ParityError, tag + ": unexpected " + e.what());
          ++refused;
        }
      }
    }
  }
  for (int x = 0; x <= 20; ++x) {
    for (int y = 0; y <= 20; ++y) {
      o.expect(moves::hirzebruch_equiv(x, y) == ((x - y) % 2 == 0), "hirzebruch parity wrong");
    }
  }
  o.expect(!moves::hirzebruch_equiv(0, 1), "(0,1) should be inequivalent");
  if (o.pass) {
    o.detail = std::to_string(paths) + " paths replayed, " + std::to_string(refused) +
               " incongruent pairs refused; Hirzebruch parity on [0,20]^2";
  }
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t tuples = 0;
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t s = 1; s <= 3; ++s) {
      for (const auto& a : oracle::sweep(r, 6, true)) {
        for (long dk : {1L, 5L}) {
          BundleTuple t(a, s, Rational(a.sigma1() - Integer(s) + dk));
          const std::string tag = t.str();
          DelzantPolytope p = polytope::build(t);
          o.expect(polytope::is_delzant(p).ok, tag + " not Delzant");
          o.expect(polytope::vertices(p).size() == (r + 1) * (s + 1), tag + " wrong vertex count");

          const std::size_t expected = (a.is_zero() && r != s) ? 2 : 1;
          auto u = oracle::random_unimodular(p.dim, rng);
          std::uniform_int_distribution<int> wd(-5, 5);
          RationalVector w;
          for (std::size_t i = 0; i < p.dim; ++i) w.push_back(q(wd(rng), 1 + static_cast<long>(i % 2)));
          for (const auto& input : {p, oracle::transform(p, u, w)}) {
            auto found = polytope::recognize(input);
            std::size_t hits = 0;
            for (const auto& pr : found) hits += pr.tuple == t;
            o.expect(found.size() == expected && hits == 1, tag + " round trip failed");
          }

          Rational vol = polytope::exact_volume(t);
          o.expect(vol == oracle::lawrence_volume(p), tag + " exact volume disagrees with Lawrence's formula");
          if (s == 1 || a.is_zero()) {
            o.expect(vol == polytope::nominal_volume(r, s, t.kappa()), tag + " exact != nominal volume");
          }
          o.expect(polytope::exact_volume(BundleTuple(a, s, t.kappa() + 1)) > vol, tag + " volume not increasing");
          ++tuples;
        }
      }
    }
  }
  BundleTuple gap(ev({1}), 2, 1);
  Rational exact = polytope::exact_volume(gap);
  Rational nominal = polytope::nominal_volume(1, 2, 1);
  o.expect(exact == q(28, 3) && nominal == 9, "volume gap example should read 28/3 vs 9");
  if (o.pass) {
    o.detail = std::to_string(tuples) + " tuples (plain and scrambled round trips); gap example " +
               pretty_rational(exact) + " vs nominal " + pretty_rational(nominal);
  }
  return o;
}

Outcome criterion13() {
  Outcome o;
  std::mt19937_64 rng(13);
  const auto& entries = census_sweep();
  std::uniform_int_distribution<std::size_t> pick_entry(0, entries.size() - 1);
  std::size_t nontrivial = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto& e = entries[pick_entry(rng)];
    const auto& members = e.res.cls.members;
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    const auto& x = members[pick(rng)];
    const auto& y = members[pick(rng)];
    const auto& z = members[pick(rng)];
    const std::string tag = label(e.a, e.s) + " triple " + x.b.str() + "," + y.b.str() + "," + z.b.str();
    auto xx = equiv::find_shift(x.b, x.b, e.s);
    auto xy = equiv::find_shift(x.b, y.b, e.s);
    auto yx = equiv::find_shift(y.b, x.b, e.s);
    auto yz = equiv::find_shift(y.b, z.b, e.s);
    auto xz = equiv::find_shift(x.b, z.b, e.s);
    o.expect(xx == Integer(0), tag + ": not reflexive");
    o.expect(xy && yx && *yx == -*xy, tag + ": not symmetric");
    o.expect(xy && yz && xz && *xz == *xy + *yz, tag + ": shifts not additive");
    o.expect(xy && *xy == y.C - x.C, tag + ": shift disagrees with class data");
    if (xy && *xy != 0) ++nontrivial;

    // A random partner of the same length: symmetric either way.
    auto pool = oracle::sweep(e.a.r(), 8);
    std::uniform_int_distribution<std::size_t> pick_any(0, pool.size() - 1);
    const auto& other = pool[pick_any(rng)];
    auto ab = equiv::find_shift(e.a, other, e.s);
    auto ba = equiv::find_shift(other, e.a, e.s);
    o.expect(ab.has_value() == ba.has_value() && (!ab || *ba == -*ab), tag + ": symmetry fails for " + other.str());
  }
  if (o.pass) o.detail = "500 triples, " + std::to_string(nontrivial) + " with a nonzero shift";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"census of (1,4,4) over CP^2", criterion1},
      {"class of (0,...,0,2) at r = 3, 4, 5", criterion2},
      {"Fano vectors at r = s = 2", criterion3},
      {"0/1 vectors have a unique structure", criterion4},
      {"r < s gives a single structure", criterion5},
      {"monotone uniqueness", criterion6},
      {"step function structure", criterion7},
      {"C bounds and stabilization", criterion8},
      {"sigma_2 pruning is sound", criterion9},
      {"family certification k = 3", criterion10},
      {"elementary moves and Hirzebruch parity", criterion11},
      {"polytope suite", criterion12},
      {"equivalence relation algebra", criterion13},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.checks << " checks, " << ms.count() << " ms) - " << o.detail << std::endl;
  }
  std::cout << (all ? "all 13 criteria pass" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
