#include "toric/families.hpp"

#include "toric/errors.hpp"
#include "toric/symfun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric::families {

using toric::to_string;

namespace {

Integer moduli_of(const Integer& n) {
  return n * n - n + 1;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of x modulo m via the extended Euclidean algorithm.
Integer mod_inverse(const Integer& x, const Integer& m) {
  Integer old_r = mod_floor(x, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("moduli are not coprime");
  return mod_floor(old_s, m);
}

// Largest prime factor by trial division; refuses numbers too big to finish.
Integer largest_prime_factor(Integer n) {
  static const Integer kLimit = Integer(1) << 46;
  if (n > kLimit) {
    throw std::invalid_argument("factorial strategy: cannot factor N = " + n.str() +
                                " by trial division (k too large)");
  }
  Integer largest = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      largest = p;
      n /= p;
    }
  }
  if (n > 1) largest = n;
  return largest;
}

[[noreturn]] void invalid(const std::string& why) {
  throw DomainError(ErrorCode::CertificateInvalid, why);
}

}  // namespace

std::vector<Integer> coprime_sequence(std::size_t k, Strategy strategy) {
  if (k < 2) throw std::invalid_argument("family size k must be at least 2");
  std::vector<Integer> ns;
  if (strategy == Strategy::Greedy) {
    std::vector<Integer> Ns;
    for (Integer n = 2; ns.size() + 1 < k; ++n) {
      Integer N = moduli_of(n);
      bool coprime = std::all_of(Ns.begin(), Ns.end(), [&](const Integer& M) {
        return boost::multiprecision::gcd(M, N) == 1;
      });
      if (coprime) {
        ns.push_back(n);
        Ns.push_back(N);
      }
    }
    return ns;
  }
  ns.push_back(2);
  while (ns.size() + 1 < k) {
    Integer p = largest_prime_factor(moduli_of(ns.back()));
    ns.push_back(factorial(p.convert_to<unsigned>()));
  }
  return ns;
}

Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli) {
  if (residues.size() != moduli.size()) throw std::invalid_argument("crt: size mismatch");
  Integer x = 0;
  Integer m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] <= 0) throw std::invalid_argument("crt: moduli must be positive");
    // Lift x (mod m) to x + m t satisfying the i-th congruence.
    Integer t = mod_floor((residues[i] - x) * mod_inverse(m, moduli[i]), moduli[i]);
    x += m * t;
    m *= moduli[i];
  }
  return mod_floor(x, m);
}

FamilyCertificate certify(std::size_t k, const Integer& c, Strategy strategy,
                          const std::vector<Integer>& n_seq, const Integer& K) {
  FamilyCertificate cert;
  cert.k = k;
  cert.c = c;
  cert.strategy = strategy;
  cert.n_seq = n_seq;
  cert.K = K;
  if (K < 0 || c < 0) invalid("K and c must be non-negative");
  cert.a = ExponentVector(IntVector{K, K + c});
  for (const auto& n : n_seq) {
    FamilyWitness w{n, moduli_of(n), 0, 0, ExponentVector::zeros(2)};
    cert.moduli.push_back(w.N);
    Integer numer = n * ((n - 1) * c - K);
    if (numer % w.N != 0) invalid("x is not an integer for n = " + n.str());
    w.x = numer / w.N;
    if (w.x % n != 0) invalid("C = x/n is not an integer for n = " + n.str());
    w.C = w.x / n;
    IntVector b{w.C + K + w.x, 2 * w.C + c + K - w.x};
    std::sort(b.begin(), b.end());
    if (b[0] < 0) invalid("witness for n = " + n.str() + " has a negative entry " + to_string(b));
    w.b = ExponentVector(std::move(b));
    cert.witnesses.push_back(std::move(w));
  }
  verify(cert);
  return cert;
}

void verify(const FamilyCertificate& cert) {
  if (cert.witnesses.size() + 1 != cert.k) invalid("expected k-1 witnesses");
  for (std::size_t i = 0; i < cert.moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.moduli.size(); ++j) {
      if (boost::multiprecision::gcd(cert.moduli[i], cert.moduli[j]) != 1) {
        invalid("moduli " + cert.moduli[i].str() + " and " + cert.moduli[j].str() + " share a factor");
      }
    }
  }
  std::set<ExponentVector> seen{cert.a};
  for (const auto& w : cert.witnesses) {
    if (w.N != moduli_of(w.n)) invalid("N != n^2 - n + 1 for n = " + w.n.str());
    if (w.x * w.N != w.n * ((w.n - 1) * cert.c - cert.K)) invalid("x does not solve the congruence");
    if (w.C * w.n != w.x) invalid("C != x/n for n = " + w.n.str());
    IntVector lhs = symfun::prepend_shifted(cert.a.entries(), w.C);
    IntVector rhs = symfun::prepend_shifted(w.b.entries(), Integer(0));
    if (!symfun::truncated_sym_equal(lhs, rhs, 2)) {
      invalid("sigma_1/sigma_2 mismatch between " + to_string(lhs) + " and " + to_string(rhs));
    }
    if (!seen.insert(w.b).second) invalid("witness " + w.b.str() + " repeats a class member");
  }
}

FamilyCertificate generate_family(std::size_t k, const Integer& c, Strategy strategy) {
  if (k < 2) throw std::invalid_argument("family size k must be at least 2");
  if (c < 2) throw std::invalid_argument("difference c must be at least 2");
  std::vector<Integer> ns = coprime_sequence(k, strategy);
  std::vector<Integer> residues, moduli;
  for (const auto& n : ns) {
    moduli.push_back(moduli_of(n));
    residues.push_back((n - 1) * c);
  }
  const Integer K0 = crt(residues, moduli);
  Integer M = 1;
  for (const auto& N : moduli) M *= N;
  // Each n_i rules out at most one K (the one with C_i = 0), so k tries suffice.
  std::string last_error;
  for (std::size_t step = 0; step <= k; ++step) {
    try {
      FamilyCertificate cert = certify(k, c, strategy, ns, K0 + Integer(step) * M);
      cert.residue_steps = step;
      return cert;
    } catch (const DomainError& e) {
      last_error = e.what();
    }
  }
  invalid("no valid K in the residue class: " + last_error);
}

std::vector<ExponentVector> lift_class(const FamilyCertificate& cert, std::size_t l) {
  if (l < 1) throw std::invalid_argument("lift needs l >= 1");
  std::vector<std::pair<IntVector, Integer>> members{{cert.a.entries(), Integer(0)}};
  for (const auto& w : cert.witnesses) members.emplace_back(w.b.entries(), w.C);
  Integer top = 0;
  for (const auto& m : members) top = std::max(top, m.second);

  std::vector<ExponentVector> out;
  std::vector<IntVector> padded;
  for (const auto& [b, C] : members) {
    Integer d = top - C;
    IntVector v(l - 1, Integer(0));
    v.push_back(d);
    for (const auto& x : b) v.push_back(x + d);
    std::sort(v.begin(), v.end());
    if (v.front() < 0) invalid("lifted vector " + to_string(v) + " has a negative entry");
    IntVector with_zero{Integer(0)};
    with_zero.insert(with_zero.end(), v.begin(), v.end());
    padded.push_back(std::move(with_zero));
    out.emplace_back(std::move(v));
  }
  for (std::size_t i = 1; i < padded.size(); ++i) {
    if (!symfun::truncated_sym_equal(padded[0], padded[i], 2)) {
      invalid("lifted vectors " + out[0].str() + " and " + out[i].str() + " differ in sigma_1/sigma_2");
    }
  }
  return out;
}

std::string to_string(Strategy s) {
  return s == Strategy::Greedy ? "greedy" : "factorial";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "greedy") return Strategy::Greedy;
  if (name == "factorial") return Strategy::Factorial;
  throw std::invalid_argument("unknown strategy '" + name + "' (greedy|factorial)");
}

}  // namespace toric::families
