#pragma once

#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

#include <string>
#include <vector>

// Families of r = s = 2 bundles with many inequivalent toric structures.
//
// For a = (K, c+K) and a shift of the form C = x/n, the sigma_2 condition has
// the integer solution
//   x = n((n-1)c - K) / N,   C = x / n,   N = n^2 - n + 1,
// giving b = (C + K + x, 2C + c + K - x). Choosing n_1, ..., n_{k-1} with
// pairwise coprime N_i and solving K = (n_i - 1)c mod N_i by CRT yields k - 1
// extra structures on the deformation class of a.
namespace toric::families {

enum class Strategy { Greedy, Factorial };

struct FamilyWitness {
  Integer n;
  Integer N;
  Integer x;
  Integer C;
  ExponentVector b;
};

struct FamilyCertificate {
  std::size_t k = 0;
  Integer c;
  Strategy strategy = Strategy::Greedy;
  std::vector<Integer> n_seq;
  std::vector<Integer> moduli;
  Integer K;
  // K = K_crt + residue_steps * prod(N_i); nonzero only when the smallest
  // solution makes some witness coincide with a.
  Integer residue_steps;
  ExponentVector a = ExponentVector::zeros(2);
  std::vector<FamilyWitness> witnesses;
};

/// k-1 values n >= 2 with pairwise coprime n^2 - n + 1.
/// Greedy: smallest admissible n each time (2, 3, 4, 6, 7, ...).
/// Factorial: n_1 = 2, n_j = p! for p the largest prime factor of N_{j-1};
/// only available while that factor can be found by trial division (k <= 4).
std::vector<Integer> coprime_sequence(std::size_t k, Strategy strategy = Strategy::Greedy);

/// Smallest non-negative x with x = residues[i] mod moduli[i]. Moduli must be
/// pairwise coprime and positive.
Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli);

/// Builds and checks the certificate for a given K. Throws CertificateInvalid
/// if any witness is non-integral, negative, fails the sigma equalities, or
/// coincides with a or another witness.
FamilyCertificate certify(std::size_t k, const Integer& c, Strategy strategy,
                          const std::vector<Integer>& n_seq, const Integer& K);

/// Re-checks every certificate invariant; throws CertificateInvalid.
void verify(const FamilyCertificate& cert);

/// Smallest K in the CRT residue class giving a valid certificate.
FamilyCertificate generate_family(std::size_t k, const Integer& c = 2,
                                  Strategy strategy = Strategy::Greedy);

/// Lifts the class {a} + {b_i} to r = 2 + l: l-1 zeros, then C* - C_j and
/// C* - C_j + b_j with C* the largest shift. All outputs share sigma_1, sigma_2
/// with zero shift.
std::vector<ExponentVector> lift_class(const FamilyCertificate& cert, std::size_t l);

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

}  // namespace toric::families
