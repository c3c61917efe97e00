#pragma once

#include "cpog/bigint.hpp"
#include "cpog/group.hpp"
#include "cpog/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cpog {

/// Closed-form degree of any vertex of the given element order in the
/// co-prime order graph of the abelian group described by canon.
/// Orders that are 1 or a single first-power prime give |G| - 1; otherwise,
/// with the order split into k first-power primes alpha_j and l higher
/// prime powers beta_j:
///   (1 - k - l + sum |G_{alpha_j}| + sum p_{beta_j}^{n_{beta_j}})
///     * |G| / (prod |G_{alpha_i}| * prod |G_{beta_i}|),
/// where the division is exact (enforced at runtime).
std::int64_t degree_abelian(const AbelianCanonicalForm& canon, std::int64_t order);

/// Closed-form degree in D_n: order 2 gives 2n - 1; any other realizable
/// order o (a divisor of n) gives degree_abelian(canon(Z_n), o) + n.
std::int64_t degree_dihedral(std::int64_t n, std::int64_t order);

/// (p+q) x (p+q) Laplacian-shaped block matrix: top-left p x p block with
/// diagonal p+q-1 and off-diagonal -1, off-diagonal blocks all -1,
/// bottom-right q x q block p*I.
ExactMatrix build_block_L(std::int64_t p, std::int64_t q);

/// Spectrum of build_block_L(p, q): {p+q : p, p : q-1, 0 : 1}; the q = 1
/// case omits the zero-multiplicity entry.
Spectrum spectrum_block(std::int64_t p, std::int64_t q);

/// Spectrum {p^t : p^t - 1, 0 : 1} of the (complete) graph of (Z_p)^t.
Spectrum spectrum_elementary_abelian(std::int64_t p, int t);

/// Spectrum of the graph of the abelian p-group with the given exponents:
/// {p^(sum a) : p^n, p^n : p^(sum a) - p^n - 1, 0 : 1} when max exponent
/// >= 2; delegates to the elementary abelian case otherwise.
Spectrum spectrum_abelian_p_group(std::int64_t p, const std::vector<int>& exponents);

/// Spectrum of the graph of (Z_p)^t x (Z_q)^s for distinct primes p, q:
/// {p^t q^s : p^t + q^s - 1, p^t + q^s - 1 : p^t q^s - p^t - q^s, 0 : 1}.
Spectrum spectrum_pq(std::int64_t p, int t, std::int64_t q, int s);

/// Spectrum of the graph of D_{p^n}: {2p^n : p + p^n, p + p^n : p^n - p - 1,
/// 0 : 1}. Requires n >= 2 when p = 2. The degenerate case (p odd, n = 1)
/// gives a complete graph on 2p vertices, spectrum {2p : 2p - 1, 0 : 1}.
Spectrum spectrum_dihedral_prime_power(std::int64_t p, int n);

/// Dispatches a group to its closed-form spectrum when one exists:
/// single-prime abelian groups (elementary or not), two-prime groups with
/// all exponents 1, and dihedral groups with prime-power rotation order.
std::optional<Spectrum> closed_form_spectrum(const GroupSpec& spec);

}  // namespace cpog
