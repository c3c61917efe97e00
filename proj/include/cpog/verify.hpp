#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cpog {

/// Outcome of sweeping one closed-form result over a parameter range.
struct VerificationReport {
  std::string target;
  std::string range;
  std::int64_t cases_run = 0;
  std::int64_t cases_passed = 0;
  std::string first_failure;  // empty when all cases passed

  bool pass() const { return cases_run == cases_passed; }
};

std::string to_string(const VerificationReport& report);

/// Closed-form degree vs brute-force degree for every isomorphism class of
/// abelian groups of order <= max_order and every realizable element order;
/// also asserts same-order vertices share one brute degree.
VerificationReport verify_degrees_abelian(std::int64_t max_order);

/// Closed-form degree vs brute force for D_n, 3 <= n <= max_n, every
/// realizable order; for orders other than 2 also checks the relation
/// deg_{D_n}(o) = deg_{Z_n}(o) + n.
VerificationReport verify_degrees_dihedral(std::int64_t max_n);

/// certify_spectrum(build_block_L(p, q), spectrum_block(p, q)) for all
/// 1 <= p, q <= max_pq.
VerificationReport verify_block(std::int64_t max_pq);

/// Certified spectrum {p^t : p^t-1, 0 : 1} for (Z_p)^t, over the given
/// primes with p^t <= max_size; optionally also checks completeness of the
/// graph (every degree = p^t - 1).
VerificationReport verify_spectra_elementary(const std::vector<std::int64_t>& primes,
                                             std::int64_t max_size, bool check_complete);

/// Certified spectra of abelian p-groups of order <= max_order whose
/// canonical form has maximum exponent >= 2.
VerificationReport verify_spectra_p_group(std::int64_t max_order);

/// Certified spectra of (Z_p)^t x (Z_q)^s for distinct primes with
/// p^t q^s <= max_order.
VerificationReport verify_spectra_pq(std::int64_t max_order);

/// Certified spectra of D_{p^n} for prime powers p^n <= max_rotation_order,
/// excluding p = 2, n = 1; includes the degenerate complete-graph cases
/// (p odd, n = 1).
VerificationReport verify_spectra_dihedral(std::int64_t max_rotation_order);

/// All four spectrum families with graph size <= max_size.
VerificationReport verify_spectra(std::int64_t max_size);

std::vector<std::int64_t> primes_up_to(std::int64_t n);

}  // namespace cpog
