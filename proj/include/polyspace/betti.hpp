#pragma once

#include "polyspace/census.hpp"
#include "polyspace/core.hpp"

namespace polyspace {

/// ranks[k] = rank of H_k of the polygon moduli space, k = 0..n-3.
struct BettiVector {
  int n = 0;
  std::vector<BigInt> ranks;

  BigInt total() const;
  bool operator==(const BettiVector& o) const = default;
};

/// p(t) = q(t) + t^(n-3) q(1/t) + r(t), as coefficient lists.
struct PoincarePolynomial {
  int n = 0;
  std::vector<BigInt> q;  // the a_k
  std::vector<BigInt> r;  // the b_k
  std::vector<BigInt> p;  // Betti ranks

  bool operator==(const PoincarePolynomial& o) const = default;
};

enum class CensusBackend { Naive, Dp };

Census compute_census(const LengthVector& l, CensusBackend backend,
                      const CensusOptions& opts = {});

/// rank H_k = a_k + b_k + a_(n-3-k) applied to a census.
BettiVector betti_from_census(const Census& c);

BettiVector betti_vector(const LengthVector& l, CensusBackend backend = CensusBackend::Dp,
                         const CensusOptions& opts = {});

PoincarePolynomial poincare(const LengthVector& l, CensusBackend backend = CensusBackend::Dp,
                            const CensusOptions& opts = {});

/// True iff the one-element subset holding a maximal link is long, in which
/// case the moduli space is empty and every rank is zero.
bool is_empty(const LengthVector& l);

/// rank H_0 in {0, 1, 2}: 0 when the space is empty, 2 when the two largest
/// non-maximal links form a long pair while the maximal link is short, 1
/// otherwise.
int component_count(const LengthVector& l);

/// Closed-form Betti vector of the unit-length n-gon.
BettiVector equilateral_betti(int n);

/// Sharp bound B_n = 2^(n-1) - C(n-1, floor((n-1)/2)) on the total Betti
/// number over all length vectors with n links.
BigInt bound_total(int n);

/// Sharp bound B'_n = 2 * B_(n-1) for generic vectors with even n.
BigInt bound_total_generic_even(int n);

/// Floating-point estimate B_n ~ 2^(n-1) (1 - sqrt(2/(n pi))).
double bound_asymptotic(int n);

/// Genus of the moduli surface of a generic connected pentagon.
int pentagon_genus(const LengthVector& l);

BigInt binomial(int n, int k);

}  // namespace polyspace
