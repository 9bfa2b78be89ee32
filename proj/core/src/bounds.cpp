#include "cupcap/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "cupcap/errors.hpp"

namespace cupcap {

void BoundsConfig::validate() const {
  if (sgn(c) <= 0 || sgn(c1) <= 0 || sgn(big_c) <= 0 || sgn(epsilon) <= 0) {
    throw PreconditionError("bound constants must be positive");
  }
  if (epsilon >= 1) throw PreconditionError("epsilon must be below 1");
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw PreconditionError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

void require_at_least_three(int ell, int m, int n) {
  if (ell < 3 || m < 3 || n < 3) throw PreconditionError("ell, m, n must all be at least 3");
}

Coord power_of_two(int e) {
  Coord r = 1;
  if (e >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    r = p;
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    r = Coord(mpz_class(1), p);
  }
  return r;
}

}  // namespace

Coord h_ell(int ell, int m, int n) {
  require_at_least_three(ell, m, n);
  Coord first = Coord(ell - 1, 2) * Coord(binomial(m + n - 4, n - 2));
  Coord second = Coord(ell - 3, 2) * Coord(binomial(m + n - 6, n - 3));
  first.canonicalize();
  second.canonicalize();
  return first - second;
}

mpz_class f3(int m, int n) {
  require_at_least_three(3, m, n);
  return binomial(m + n - 4, n - 2) + 1;
}

Coord f_ell_upper(int ell, int m, int n, const BoundsConfig& cfg) {
  require_at_least_three(ell, m, n);
  return cfg.c * Coord(std::min(m - 1, n - 1) + ell) * Coord(binomial(m + n - 4, n - 2));
}

Coord es_construction_size(int ell, int n) {
  if (ell < 3 || n < 3) throw PreconditionError("ell and n must be at least 3");
  return Coord(3 * ell - 1) * power_of_two(n - 5);
}

Coord es_lower(int ell, int n) { return es_construction_size(ell, n) + 1; }

EsUpper es_upper(int ell, int n, const BoundsConfig& cfg) {
  if (ell < 3 || n < 3) throw PreconditionError("ell and n must be at least 3");
  EsUpper u{Coord(ell * ell), n, cfg.big_c, 0.0};
  double nn = static_cast<double>(n);
  u.log2_value = 2.0 * std::log2(static_cast<double>(ell)) + nn + cfg.big_c.get_d() * std::sqrt(nn * std::log2(nn));
  return u;
}

BoundTable bound_table(int ell, int max_mn, const BoundsConfig& cfg) {
  if (ell < 3 || max_mn < 3) throw PreconditionError("bound_table needs ell >= 3 and max_mn >= 3");
  cfg.validate();
  BoundTable t{ell, cfg, {}, {}};
  for (int m = 3; m <= max_mn; ++m) {
    for (int n = 3; n <= max_mn; ++n) {
      t.cupcap.push_back(CupCapRow{m, n, f3(m, n), f_ell_upper(ell, m, n, cfg), h_ell(ell, m, n)});
    }
  }
  for (int n = 3; n <= max_mn; ++n) t.es.push_back(EsRow{n, es_lower(ell, n), es_upper(ell, n, cfg)});
  return t;
}

}  // namespace cupcap
