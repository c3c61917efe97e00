#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace cpog {

/// Default limit on group order; dense |G| x |G| matrices bound memory.
inline constexpr std::int64_t kDefaultCap = 5000;

/// Direct product of cyclic groups Z_{f1} x ... x Z_{fk}, factors as written.
struct AbelianSpec {
  std::vector<std::int64_t> factors;  // each >= 2
  bool operator==(const AbelianSpec&) const = default;
};

/// Dihedral group D_n of order 2n, n >= 3.
struct DihedralSpec {
  std::int64_t n = 0;
  bool operator==(const DihedralSpec&) const = default;
};

using GroupSpec = std::variant<AbelianSpec, DihedralSpec>;

std::int64_t group_order(const GroupSpec& spec);
bool is_abelian(const GroupSpec& spec);

/// Renders a spec back to grammar form, e.g. "Z4xZ2" or "D27".
std::string render_spec(const GroupSpec& spec);

/// Invariant-factor-free canonical form: per prime, the sorted list of
/// prime-power exponents of the cyclic factors obtained by CRT splitting.
struct AbelianCanonicalForm {
  struct PrimePart {
    std::int64_t prime = 0;
    std::vector<int> exponents;  // ascending, each >= 1
    bool operator==(const PrimePart&) const = default;
  };
  std::vector<PrimePart> parts;  // primes ascending
  std::int64_t order = 1;

  /// |G_p| = p^(sum of exponents) for the i-th prime part.
  std::int64_t sylow_order(std::size_t i) const;
  /// Number of cyclic factors at the i-th prime.
  int rank(std::size_t i) const { return static_cast<int>(parts[i].exponents.size()); }
  /// lcm of all element orders = product of p^(max exponent).
  std::int64_t exponent() const;
  /// Index into parts for a prime, or -1 when absent.
  int part_index(std::int64_t prime) const;

  bool operator==(const AbelianCanonicalForm&) const = default;
};

struct AbelianTuple {
  std::vector<std::int64_t> residues;  // residue j in [0, factor_j)
  bool operator==(const AbelianTuple&) const = default;
};

struct DihedralElement {
  int flip = 0;                 // 0 = rotation, 1 = reflection
  std::int64_t rotation = 0;    // in [0, n)
  bool operator==(const DihedralElement&) const = default;
};

using GroupElement = std::variant<AbelianTuple, DihedralElement>;

/// Element order -> number of elements of that order.
using OrderProfile = std::map<std::int64_t, std::int64_t>;

/// An element order m factored as (prod of k single primes) * (prod of l
/// higher prime powers p^gamma, gamma >= 2).
struct OrderDecomposition {
  std::vector<std::int64_t> first_power_primes;                 // ascending
  std::vector<std::pair<std::int64_t, int>> higher_power_primes;  // (p, gamma>=2), ascending
  int k() const { return static_cast<int>(first_power_primes.size()); }
  int l() const { return static_cast<int>(higher_power_primes.size()); }
  std::int64_t reconstruct() const;
};

/// Parses grammar (case-insensitive): abelian `Z4xZ2` with separators `x` or
/// `*`, factors >= 2; dihedral `D27`, n >= 3. Throws std::invalid_argument
/// with the offending position on syntax errors, std::domain_error when the
/// group order exceeds the cap.
GroupSpec parse_group_spec(const std::string& text, std::int64_t cap = kDefaultCap);

AbelianCanonicalForm canonicalize_abelian(const AbelianSpec& spec);

/// All |G| elements in canonical vertex order: sorted by (element order,
/// lexicographic encoding), which puts the identity first.
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec, std::int64_t cap = kDefaultCap);

std::int64_t element_order(const GroupSpec& spec, const GroupElement& g);

OrderProfile order_profile(const GroupSpec& spec, std::int64_t cap = kDefaultCap);

/// Splits an element order into first-power and higher-power prime parts.
/// Throws std::domain_error when the order does not divide the group exponent.
OrderDecomposition decompose_order(std::int64_t order, const AbelianCanonicalForm& canon);

/// One representative per isomorphism class of abelian groups of order m
/// (all partition combinations per prime), deterministic order.
std::vector<AbelianSpec> enumerate_abelian_groups_of_order(std::int64_t m);

/// Trial-division factorization, prime -> exponent.
std::map<std::int64_t, int> factorize(std::int64_t m);

bool is_prime(std::int64_t m);

/// Human-readable element label: "(0,1)", "e", "r^2", "f", "fr^2".
std::string element_label(const GroupElement& g);

}  // namespace cpog
