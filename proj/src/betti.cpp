#include "polyspace/betti.hpp"

#include <cmath>
#include <numbers>

namespace polyspace {

BigInt BettiVector::total() const {
  BigInt sum = 0;
  for (const BigInt& v : ranks) sum += v;
  return sum;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Census compute_census(const LengthVector& l, CensusBackend backend, const CensusOptions& opts) {
  return backend == CensusBackend::Naive ? census_naive(l) : census_dp(l, opts);
}

BettiVector betti_from_census(const Census& c) {
  BettiVector out;
  out.n = c.n;
  const int slots = c.n - 2;
  out.ranks.resize(static_cast<std::size_t>(slots));
  for (int k = 0; k < slots; ++k)
    out.ranks[static_cast<std::size_t>(k)] =
        c.a[static_cast<std::size_t>(k)] + c.b[static_cast<std::size_t>(k)] +
        c.a[static_cast<std::size_t>(slots - 1 - k)];
  return out;
}

BettiVector betti_vector(const LengthVector& l, CensusBackend backend, const CensusOptions& opts) {
  return betti_from_census(compute_census(l, backend, opts));
}

PoincarePolynomial poincare(const LengthVector& l, CensusBackend backend,
                            const CensusOptions& opts) {
  const Census c = compute_census(l, backend, opts);
  PoincarePolynomial out;
  out.n = c.n;
  out.q = c.a;
  out.r = c.b;
  out.p = betti_from_census(c).ranks;
  // Coefficient identity: p_k = q_k + r_k + q_(n-3-k).
  const int slots = c.n - 2;
  for (int k = 0; k < slots; ++k)
    if (out.p[static_cast<std::size_t>(k)] !=
        out.q[static_cast<std::size_t>(k)] + out.r[static_cast<std::size_t>(k)] +
            out.q[static_cast<std::size_t>(slots - 1 - k)])
      throw crosscheck_error("poincare: coefficient identity violated");
  return out;
}

bool is_empty(const LengthVector& l) {
  return classify_subset(l, SubsetMask{}.with(max_index(l))) == SubsetClass::Long;
}

int component_count(const LengthVector& l) {
  const LengthVector s = l.sorted();
  const int n = s.n();
  const SubsetClass top = classify_subset(s, SubsetMask{}.with(n));
  if (top == SubsetClass::Long) return 0;
  if (top == SubsetClass::Short &&
      classify_subset(s, SubsetMask::of({n - 2, n - 1})) == SubsetClass::Long)
    return 2;
  return 1;
}

BettiVector equilateral_betti(int n) {
  if (n < 3) throw input_error("equilateral_betti: n must be at least 3");
  BettiVector out;
  out.n = n;
  out.ranks.resize(static_cast<std::size_t>(n - 2));
  if (n % 2 == 1) {
    const int r = (n - 1) / 2;
    for (int k = 0; k <= n - 3; ++k) {
      BigInt v;
      if (k < r - 1) v = binomial(n - 1, k);
      else if (k == r - 1) v = 2 * binomial(n - 1, r - 1);
      else v = binomial(n - 1, k + 2);
      out.ranks[static_cast<std::size_t>(k)] = v;
    }
  } else {
    const int r = (n - 2) / 2;
    for (int k = 0; k <= n - 3; ++k) {
      BigInt v;
      if (k <= r - 1) v = binomial(n - 1, k);
      else if (k == r) v = binomial(n, r);
      else v = binomial(n - 1, k + 2);
      out.ranks[static_cast<std::size_t>(k)] = v;
    }
  }
  return out;
}

BigInt bound_total(int n) {
  if (n < 3) throw input_error("bound_total: n must be at least 3");
  const int r = (n - 1) / 2;
  BigInt out = 1;
  out <<= (n - 1);
  return out - binomial(n - 1, r);
}

BigInt bound_total_generic_even(int n) {
  if (n < 4) throw input_error("bound_total_generic_even: n must be at least 4");
  if (n % 2 != 0)
    throw input_error("bound_total_generic_even: n = " + std::to_string(n) + " is odd");
  return 2 * bound_total(n - 1);
}

double bound_asymptotic(int n) {
  if (n < 3) throw input_error("bound_asymptotic: n must be at least 3");
  return std::pow(2.0, n - 1) * (1.0 - std::sqrt(2.0 / (n * std::numbers::pi)));
}

int pentagon_genus(const LengthVector& l) {
  if (l.n() != 5) throw input_error("pentagon_genus: requires n = 5");
  if (!is_generic(l)) throw input_error("pentagon_genus: requires a generic length vector");
  if (component_count(l) != 1)
    throw input_error("pentagon_genus: requires a connected moduli space");
  const BettiVector b = betti_vector(l);
  const BigInt genus = b.ranks[1] / 2;
  return static_cast<int>(genus.get_si());
}

}  // namespace polyspace
