#include "cpog/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

namespace cpog {

namespace {

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
      throw std::overflow_error("prime power overflows 64-bit range");
    r *= base;
  }
  return r;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

}  // namespace

std::int64_t degree_abelian(const AbelianCanonicalForm& canon, std::int64_t order) {
  OrderDecomposition dec = decompose_order(order, canon);
  if (dec.l() == 0 && dec.k() <= 1) return canon.order - 1;

  std::int64_t bracket = 1 - dec.k() - dec.l();
  std::int64_t denominator = 1;
  for (std::int64_t p : dec.first_power_primes) {
    std::int64_t sylow = canon.sylow_order(static_cast<std::size_t>(canon.part_index(p)));
    bracket += sylow;
    denominator *= sylow;
  }
  for (const auto& [p, gamma] : dec.higher_power_primes) {
    int idx = canon.part_index(p);
    bracket += checked_pow(p, canon.rank(static_cast<std::size_t>(idx)));
    denominator *= canon.sylow_order(static_cast<std::size_t>(idx));
  }
  std::int64_t numerator = bracket * canon.order;
  if (numerator % denominator != 0)
    throw std::logic_error("degree formula division is not exact for order " + std::to_string(order));
  return numerator / denominator;
}

std::int64_t degree_dihedral(std::int64_t n, std::int64_t order) {
  if (n < 3) throw std::domain_error("dihedral index must be >= 3");
  if (order == 2) return 2 * n - 1;
  if (order < 1 || n % order != 0)
    throw std::domain_error("order " + std::to_string(order) + " is not realizable in D_" + std::to_string(n));
  return degree_abelian(canonicalize_abelian(AbelianSpec{{n}}), order) + n;
}

ExactMatrix build_block_L(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw std::domain_error("block sizes must be >= 1");
  const std::int64_t n = p + q;
  ExactMatrix L(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) {
      if (i < p || j < p)
        L(i, j) = (i == j) ? BigInt(n - 1) : BigInt(-1);
      else
        L(i, j) = (i == j) ? BigInt(p) : BigInt(0);
    }
  return L;
}

Spectrum spectrum_block(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw std::domain_error("block sizes must be >= 1");
  return make_spectrum({{p + q, p}, {p, q - 1}, {0, 1}});
}

Spectrum spectrum_elementary_abelian(std::int64_t p, int t) {
  require_prime(p);
  if (t < 1) throw std::domain_error("rank must be >= 1");
  std::int64_t size = checked_pow(p, t);
  return make_spectrum({{size, size - 1}, {0, 1}});
}

Spectrum spectrum_abelian_p_group(std::int64_t p, const std::vector<int>& exponents) {
  require_prime(p);
  if (exponents.empty()) throw std::domain_error("exponent list must be nonempty");
  int total = 0, maxexp = 0;
  for (int a : exponents) {
    if (a < 1) throw std::domain_error("exponents must be >= 1");
    total += a;
    maxexp = std::max(maxexp, a);
  }
  int rank = static_cast<int>(exponents.size());
  if (maxexp < 2) return spectrum_elementary_abelian(p, rank);
  std::int64_t size = checked_pow(p, total);
  std::int64_t pn = checked_pow(p, rank);
  return make_spectrum({{size, pn}, {pn, size - pn - 1}, {0, 1}});
}

Spectrum spectrum_pq(std::int64_t p, int t, std::int64_t q, int s) {
  require_prime(p);
  require_prime(q);
  if (p == q) throw std::domain_error("primes must be distinct");
  if (t < 1 || s < 1) throw std::domain_error("ranks must be >= 1");
  std::int64_t pt = checked_pow(p, t), qs = checked_pow(q, s);
  return make_spectrum({{pt * qs, pt + qs - 1}, {pt + qs - 1, pt * qs - pt - qs}, {0, 1}});
}

Spectrum spectrum_dihedral_prime_power(std::int64_t p, int n) {
  require_prime(p);
  if (n < 1) throw std::domain_error("exponent must be >= 1");
  if (p == 2 && n == 1) throw std::domain_error("D_2 is not supported (n >= 2 required for p = 2)");
  if (n == 1) return make_spectrum({{2 * p, 2 * p - 1}, {0, 1}});
  std::int64_t pn = checked_pow(p, n);
  return make_spectrum({{2 * pn, p + pn}, {p + pn, pn - p - 1}, {0, 1}});
}

std::optional<Spectrum> closed_form_spectrum(const GroupSpec& spec) {
  if (const auto* di = std::get_if<DihedralSpec>(&spec)) {
    auto factors = factorize(di->n);
    if (factors.size() != 1) return std::nullopt;
    const auto& [p, e] = *factors.begin();
    return spectrum_dihedral_prime_power(p, e);
  }
  AbelianCanonicalForm canon = canonicalize_abelian(std::get<AbelianSpec>(spec));
  if (canon.parts.size() == 1) {
    const auto& part = canon.parts[0];
    return spectrum_abelian_p_group(part.prime, part.exponents);
  }
  if (canon.parts.size() == 2) {
    const auto& a = canon.parts[0];
    const auto& b = canon.parts[1];
    auto all_ones = [](const std::vector<int>& exps) {
      for (int e : exps)
        if (e != 1) return false;
      return true;
    };
    if (all_ones(a.exponents) && all_ones(b.exponents))
      return spectrum_pq(a.prime, static_cast<int>(a.exponents.size()), b.prime,
                         static_cast<int>(b.exponents.size()));
  }
  return std::nullopt;
}

}  // namespace cpog
