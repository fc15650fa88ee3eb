#include "toric/polytope.hpp"

#include "linalg.hpp"
#include "toric/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace toric {

// ---------------------------------------------------------------------------
// Value types

ExponentVector::ExponentVector(IntVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("exponent vector must have r >= 1 entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) {
      throw std::invalid_argument("exponent vector entries must be non-negative: " + str());
    }
    if (i > 0 && entries_[i] < entries_[i - 1]) {
      throw std::invalid_argument("exponent vector must be sorted: " + str());
    }
  }
}

ExponentVector ExponentVector::normalized(IntVector entries) {
  std::sort(entries.begin(), entries.end());
  return ExponentVector(std::move(entries));
}

ExponentVector ExponentVector::zeros(std::size_t r) {
  return ExponentVector(IntVector(r, Integer(0)));
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

BundleTuple::BundleTuple(ExponentVector a, std::size_t s, Rational kappa)
    : a_(std::move(a)), s_(s), kappa_(std::move(kappa)) {
  if (s_ < 1) throw std::invalid_argument("base dimension s must be >= 1");
  if (kappa_ <= Rational(threshold())) {
    throw DomainError(ErrorCode::InvalidKappa,
                      "kappa = " + pretty_rational(kappa_) + " must exceed sigma_1(a) - s = " +
                          threshold().str());
  }
}

std::string BundleTuple::str() const {
  std::ostringstream os;
  os << "(r=" << r() << ", s=" << s_ << ", a=" << a_.str() << ", kappa=" << pretty_rational(kappa_)
     << ")";
  return os.str();
}

AffineMap AffineMap::identity(std::size_t n) {
  AffineMap m;
  m.matrix.assign(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m.matrix[i][i] = 1;
  m.translation.assign(n, Rational(0));
  return m;
}

RationalVector AffineMap::apply(const RationalVector& x) const {
  RationalVector y = linalg::mul(linalg::to_rational(matrix), x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = scale * (y[i] + translation[i]);
  return y;
}

DelzantPolytope AffineMap::apply(const DelzantPolytope& p) const {
  auto inv = linalg::inverse(linalg::to_rational(matrix));
  if (!inv) throw std::invalid_argument("affine map is singular");
  const linalg::RationalMatrix inv_t = linalg::transpose(*inv);
  DelzantPolytope out;
  out.dim = p.dim;
  out.facets.reserve(p.facets.size());
  for (const auto& f : p.facets) {
    RationalVector eta = linalg::mul(inv_t, RationalVector(f.conormal.begin(), f.conormal.end()));
    Facet g;
    g.conormal.reserve(eta.size());
    for (const auto& e : eta) {
      if (denominator(e) != 1) throw std::invalid_argument("affine map is not unimodular");
      g.conormal.push_back(numerator(e));
    }
    g.constant = scale * (f.constant + linalg::dot(eta, translation));
    out.facets.push_back(std::move(g));
  }
  return out;
}

namespace polytope {

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

linalg::RationalMatrix conormal_rows(const DelzantPolytope& p, const std::vector<std::size_t>& idx) {
  linalg::RationalMatrix m;
  m.reserve(idx.size());
  for (auto i : idx) m.emplace_back(p.facets[i].conormal.begin(), p.facets[i].conormal.end());
  return m;
}

void check_shape(const DelzantPolytope& p) {
  if (p.dim == 0) throw std::invalid_argument("polytope dimension must be positive");
  for (const auto& f : p.facets) {
    if (f.conormal.size() != p.dim) {
      throw DomainError(ErrorCode::LengthMismatch, "conormal length differs from polytope dimension");
    }
  }
}

}  // namespace

DelzantPolytope build(const BundleTuple& t) {
  const std::size_t r = t.r();
  const std::size_t s = t.s();
  const std::size_t n = r + s;
  DelzantPolytope p;
  p.dim = n;
  auto unit = [n](std::size_t i, int sign) {
    IntVector v(n, Integer(0));
    v[i] = sign;
    return v;
  };
  for (std::size_t i = 0; i < r; ++i) p.facets.push_back({unit(i, -1), Rational(1)});
  IntVector base(n, Integer(0));
  for (std::size_t i = 0; i < r; ++i) base[i] = 1;
  p.facets.push_back({base, Rational(1)});
  for (std::size_t j = 0; j < s; ++j) p.facets.push_back({unit(r + j, -1), Rational(1)});
  IntVector twisted(n, Integer(1));
  for (std::size_t i = 0; i < r; ++i) twisted[i] = -t.a()[i];
  p.facets.push_back({twisted, t.kappa()});
  return p;
}

VertexSet vertices(const DelzantPolytope& p) {
  check_shape(p);
  const std::size_t n = p.dim;
  const std::size_t m = p.facets.size();
  VertexSet out;
  std::map<RationalVector, std::size_t> seen;

  for_each_subset(m, n, [&](const std::vector<std::size_t>& idx) {
    RationalVector rhs;
    rhs.reserve(n);
    for (auto i : idx) rhs.push_back(p.facets[i].constant);
    auto x = linalg::solve(conormal_rows(p, idx), rhs);
    if (!x) return;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m; ++i) {
      Rational lhs = linalg::dot(p.facets[i].conormal, *x);
      if (lhs > p.facets[i].constant) return;
      if (lhs == p.facets[i].constant) active.push_back(i);
    }
    if (active.size() > n) {
      std::ostringstream os;
      os << "vertex lies on " << active.size() << " facets in dimension " << n;
      throw DomainError(ErrorCode::NotSimple, os.str());
    }
    if (seen.emplace(*x, out.size()).second) out.push_back({std::move(*x), std::move(active)});
  });

  if (out.empty()) {
    throw DomainError(ErrorCode::Unbounded, "no vertices: the region is empty or contains a line");
  }

  // At a simple vertex every edge leaves along one dropped facet; an edge that
  // no other facet stops is an unbounded ray.
  for (const auto& v : out) {
    auto inv = linalg::inverse(conormal_rows(p, v.active));
    for (std::size_t k = 0; k < n; ++k) {
      RationalVector dir(n);
      for (std::size_t i = 0; i < n; ++i) dir[i] = -(*inv)[i][k];
      bool stopped = false;
      for (std::size_t i = 0; i < m && !stopped; ++i) {
        if (std::binary_search(v.active.begin(), v.active.end(), i)) continue;
        if (linalg::dot(p.facets[i].conormal, dir) > 0) stopped = true;
      }
      if (!stopped) throw DomainError(ErrorCode::Unbounded, "unbounded edge found");
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Vertex& x, const Vertex& y) { return x.point < y.point; });
  return out;
}

Integer determinant(const std::vector<IntVector>& rows) {
  // Bareiss fraction-free elimination.
  std::vector<IntVector> a = rows;
  const std::size_t n = a.size();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return n == 0 ? Integer(1) : Integer(sign * a[n - 1][n - 1]);
}

DelzantCheck is_delzant(const DelzantPolytope& p) {
  check_shape(p);
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    if (gcd_of(p.facets[i].conormal) != 1) {
      return {false, "conormal of facet " + std::to_string(i) + " " +
                         to_string(p.facets[i].conormal) + " is not primitive"};
    }
  }
  VertexSet vs;
  try {
    vs = vertices(p);
  } catch (const DomainError& e) {
    if (e.code() == ErrorCode::NotSimple) return {false, e.what()};
    throw;
  }
  for (const auto& v : vs) {
    std::vector<IntVector> rows;
    for (auto i : v.active) rows.push_back(p.facets[i].conormal);
    Integer det = determinant(rows);
    if (abs(det) != 1) {
      std::ostringstream os;
      os << "conormals at vertex (";
      for (std::size_t i = 0; i < v.point.size(); ++i) os << (i ? "," : "") << pretty_rational(v.point[i]);
      os << ") have determinant " << det;
      return {false, os.str()};
    }
  }
  return {true, "simple, rational and smooth at all " + std::to_string(vs.size()) + " vertices"};
}

Rational exact_volume(const BundleTuple& t) {
  // With x = -1 + (r+1) y the base becomes the unit simplex and the fiber edge
  // length is c0 + sum c_i y_i. Expanding (c0 + c.y)^s and integrating each
  // monomial with  int y^alpha = prod alpha_i! / (r + |alpha|)!  gives
  //   Vol = (r+1)^r * sum_{alpha0 + |alpha| = s} c0^alpha0 c^alpha / (alpha0! (r+|alpha|)!).
  const std::size_t r = t.r();
  const std::size_t s = t.s();
  const Rational c0 = t.kappa() + Rational(Integer(s) - t.a().sigma1());
  IntVector c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = Integer(r + 1) * t.a()[i];

  Rational total = 0;
  std::vector<std::size_t> alpha(r, 0);
  // Recursive walk over alpha with |alpha| <= s; alpha0 takes the remainder.
  auto walk = [&](auto&& self, std::size_t pos, std::size_t used, Rational mono) -> void {
    if (pos == r) {
      const std::size_t alpha0 = s - used;
      Rational c0_pow = 1;
      for (std::size_t k = 0; k < alpha0; ++k) c0_pow *= c0;
      total += c0_pow * mono / Rational(factorial(static_cast<unsigned>(alpha0)) *
                                        factorial(static_cast<unsigned>(r + used)));
      return;
    }
    Rational m = mono;
    for (std::size_t k = 0; used + k <= s; ++k) {
      alpha[pos] = k;
      self(self, pos + 1, used + k, m);
      m *= Rational(c[pos]);
    }
  };
  walk(walk, 0, 0, Rational(1));
  Integer scale = pow(Integer(r + 1), static_cast<unsigned>(r));
  return Rational(scale) * total;
}

Rational nominal_volume(std::size_t r, std::size_t s, const Rational& kappa) {
  Rational base = Rational(pow(Integer(r + 1), static_cast<unsigned>(r))) /
                  Rational(factorial(static_cast<unsigned>(r)));
  Rational fiber = 1;
  const Rational edge = kappa + Rational(s);
  for (std::size_t k = 0; k < s; ++k) fiber *= edge;
  fiber /= Rational(factorial(static_cast<unsigned>(s)));
  return base * fiber;
}

RationalVector fiber_fingerprint(const BundleTuple& t) {
  const std::size_t r = t.r();
  VertexSet vs = vertices(build(t));
  // Group by base coordinates; the fiber simplex edge is the spread of x_{r+1}.
  std::map<RationalVector, std::pair<Rational, Rational>> spread;
  for (const auto& v : vs) {
    RationalVector base(v.point.begin(), v.point.begin() + static_cast<std::ptrdiff_t>(r));
    const Rational& z = v.point[r];
    auto [it, fresh] = spread.emplace(base, std::make_pair(z, z));
    if (!fresh) {
      it->second.first = std::min(it->second.first, z);
      it->second.second = std::max(it->second.second, z);
    }
  }
  RationalVector lengths;
  for (const auto& [base, mm] : spread) lengths.push_back(mm.second - mm.first);
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

namespace {

struct Candidate {
  Presentation presentation;
  bool unscaled;
};

// Tries to read the polytope as a bundle with base facets `base` and fiber
// facets `fiber`, using `base_skip` as the (1,..,1,0,..,0) facet and
// `fiber_skip` as the twisted one.
std::optional<Candidate> try_normal_form(const DelzantPolytope& p, const VertexSet& vs,
                                         const std::vector<std::size_t>& base,
                                         const std::vector<std::size_t>& fiber,
                                         std::size_t base_skip, std::size_t fiber_skip) {
  const std::size_t n = p.dim;
  const std::size_t r = base.size() - 1;
  const std::size_t s = fiber.size() - 1;

  std::vector<std::size_t> order;
  for (auto i : base)
    if (i != base_skip) order.push_back(i);
  for (auto i : fiber)
    if (i != fiber_skip) order.push_back(i);
  std::vector<std::size_t> sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end());
  const Vertex* corner = nullptr;
  for (const auto& v : vs) {
    if (v.active == sorted_order) corner = &v;
  }
  if (!corner) return std::nullopt;

  // Rows of M are the corner conormals in target order; U = -M sends them to -e_k.
  std::vector<IntVector> u(n);
  for (std::size_t k = 0; k < n; ++k) {
    u[k] = p.facets[order[k]].conormal;
    for (auto& x : u[k]) x = -x;
  }
  auto inv = linalg::inverse(linalg::to_rational(u));
  if (!inv) return std::nullopt;
  const linalg::RationalMatrix inv_t = linalg::transpose(*inv);
  auto image = [&](std::size_t facet) {
    const auto& eta = p.facets[facet].conormal;
    return linalg::mul(inv_t, RationalVector(eta.begin(), eta.end()));
  };

  RationalVector base_eta = image(base_skip);
  for (std::size_t i = 0; i < n; ++i) {
    if (base_eta[i] != (i < r ? 1 : 0)) return std::nullopt;
  }
  RationalVector tw = image(fiber_skip);
  IntVector a(r);
  for (std::size_t i = 0; i < n; ++i) {
    if (denominator(tw[i]) != 1) return std::nullopt;
    if (i >= r) {
      if (tw[i] != 1) return std::nullopt;
    } else {
      a[i] = -numerator(tw[i]);
      if (a[i] < 0) return std::nullopt;
    }
  }

  // Slacks at the corner give the base edge length L and the smallest fiber F.
  const Rational base_len =
      p.facets[base_skip].constant - linalg::dot(p.facets[base_skip].conormal, corner->point);
  const Rational fiber_len =
      p.facets[fiber_skip].constant - linalg::dot(p.facets[fiber_skip].conormal, corner->point);
  if (base_len <= 0 || fiber_len <= 0) return std::nullopt;
  const Rational scale = Rational(r + 1) / base_len;
  const Integer sigma1 = sum(a);
  const Rational kappa = scale * fiber_len + Rational(sigma1 - Integer(s));

  // Sort a; permuting base coordinates is unimodular.
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
  AffineMap map;
  map.scale = scale;
  map.matrix.resize(n);
  for (std::size_t k = 0; k < n; ++k) map.matrix[k] = u[k < r ? perm[k] : k];
  IntVector sorted_a(r);
  for (std::size_t k = 0; k < r; ++k) sorted_a[k] = a[perm[k]];
  // z = scale * (U x + t) with U corner -> -1 after scaling: t = -U corner - 1/scale.
  RationalVector ux = linalg::mul(linalg::to_rational(map.matrix), corner->point);
  map.translation.resize(n);
  for (std::size_t k = 0; k < n; ++k) map.translation[k] = -ux[k] - Rational(1) / scale;

  try {
    BundleTuple tuple(ExponentVector(std::move(sorted_a)), s, kappa);
    return Candidate{Presentation{std::move(tuple), std::move(map)}, scale == 1};
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Presentation> recognize(const DelzantPolytope& p) {
  check_shape(p);
  const std::size_t n = p.dim;
  const std::size_t m = p.facets.size();
  if (m != n + 2) {
    throw DomainError(ErrorCode::NotABundle, std::to_string(m) + " facets in dimension " +
                                                 std::to_string(n) + " (need " +
                                                 std::to_string(n + 2) + ")");
  }
  if (n < 2) throw DomainError(ErrorCode::NotABundle, "dimension must be at least 2");
  DelzantCheck check;
  VertexSet vs;
  try {
    check = is_delzant(p);
    if (check) vs = vertices(p);
  } catch (const DomainError& e) {
    throw DomainError(ErrorCode::NotABundle, e.what());
  }
  if (!check) throw DomainError(ErrorCode::NotABundle, "not Delzant: " + check.diagnostic);

  // Facets missed by each vertex (exactly two, since the polytope is simple).
  std::vector<std::pair<std::size_t, std::size_t>> missed;
  for (const auto& v : vs) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i)
      if (!std::binary_search(v.active.begin(), v.active.end(), i)) out.push_back(i);
    missed.emplace_back(out[0], out[1]);
  }

  std::map<std::pair<std::size_t, std::size_t>, Candidate> best;
  for (std::size_t r = 1; r < n; ++r) {
    const std::size_t s = n - r;
    for_each_subset(m, r + 1, [&](const std::vector<std::size_t>& base) {
      std::vector<bool> in_base(m, false);
      for (auto i : base) in_base[i] = true;
      std::vector<std::size_t> fiber;
      for (std::size_t i = 0; i < m; ++i)
        if (!in_base[i]) fiber.push_back(i);
      for (const auto& [x, y] : missed) {
        if (in_base[x] == in_base[y]) return;
      }
      if (vs.size() != (r + 1) * (s + 1)) return;
      // Base conormals of a bundle sum to zero.
      for (std::size_t k = 0; k < n; ++k) {
        Integer acc = 0;
        for (auto i : base) acc += p.facets[i].conormal[k];
        if (acc != 0) return;
      }
      for (auto bskip : base) {
        for (auto fskip : fiber) {
          auto cand = try_normal_form(p, vs, base, fiber, bskip, fskip);
          if (!cand) continue;
          auto key = std::make_pair(r, s);
          auto it = best.find(key);
          if (it == best.end()) {
            best.emplace(key, std::move(*cand));
          } else if (cand->unscaled && !it->second.unscaled) {
            it->second = std::move(*cand);
          }
        }
      }
    });
  }

  if (best.empty()) {
    throw DomainError(ErrorCode::NotABundle, "facet incidences admit no bundle structure");
  }
  std::vector<Presentation> out;
  for (auto& [key, cand] : best) out.push_back(std::move(cand.presentation));
  return out;
}

}  // namespace polytope
}  // namespace toric
