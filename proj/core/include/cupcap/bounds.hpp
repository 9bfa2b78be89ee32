#pragma once

// Closed-form bounds for cups/caps and convex-position problems with a
// collinearity parameter ell.

#include <vector>

#include <gmpxx.h>

#include "cupcap/geometry.hpp"

namespace cupcap {

/// Absolute constants that appear only existentially in the upper bounds.
/// Rows that depend on them are conditional on the chosen values.
struct BoundsConfig {
  Coord c{100};        ///< cups/caps upper-bound constant
  Coord c1{1};         ///< positive-fraction constant
  Coord big_c{1};      ///< exponent constant of the convex-position upper bound
  Coord epsilon{1, 10};  ///< line-richness constant, in (0, 1)

  /// Throws PreconditionError unless all are positive and epsilon < 1.
  void validate() const;
};

/// binomial(n, k) for n >= 0; 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// (ell-1)/2 * C(m+n-4, n-2) - (ell-3)/2 * C(m+n-6, n-3).
Coord h_ell(int ell, int m, int n);

/// C(m+n-4, n-2) + 1, the exact value for ell = 3.
mpz_class f3(int m, int n);

/// c * (min(m-1, n-1) + ell) * C(m+n-4, n-2).
Coord f_ell_upper(int ell, int m, int n, const BoundsConfig& cfg);

/// (3 ell - 1) * 2^(n-5): size of the lower-bound construction.
Coord es_construction_size(int ell, int n);

/// (3 ell - 1) * 2^(n-5) + 1.
Coord es_lower(int ell, int n);

/// ell^2 * 2^(n + C sqrt(n log2 n)) is irrational in general, so it is kept in
/// factored form: the exact rational coefficient ell^2, the exact integer part n
/// of the exponent, the constant C, and a double for log2 of the whole bound.
struct EsUpper {
  Coord coefficient;
  int exponent_integer_part;
  Coord big_c;
  double log2_value;
};

EsUpper es_upper(int ell, int n, const BoundsConfig& cfg);

struct CupCapRow {
  int m;
  int n;
  mpz_class f3_exact;
  Coord f_ell_upper;  ///< conditional on cfg.c
  Coord h_ell_lower;
};

struct EsRow {
  int n;
  Coord lower;
  EsUpper upper;  ///< conditional on cfg.big_c
};

struct BoundTable {
  int ell;
  BoundsConfig config;
  std::vector<CupCapRow> cupcap;
  std::vector<EsRow> es;
};

BoundTable bound_table(int ell, int max_mn, const BoundsConfig& cfg);

}  // namespace cupcap
