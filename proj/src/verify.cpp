#include "cpog/verify.hpp"

#include "cpog/closed_forms.hpp"
#include "cpog/exact_linalg.hpp"
#include "cpog/graph.hpp"
#include "cpog/group.hpp"
#include "cpog/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace cpog {

namespace {

struct CaseOutcome {
  std::int64_t run = 0;
  std::int64_t passed = 0;
  std::string first_failure;
};

// Fans independent cases out to a bounded worker pool and merges outcomes
// in case order, so reports are deterministic regardless of scheduling.
CaseOutcome run_cases(std::int64_t count, const std::function<CaseOutcome(std::int64_t)>& fn) {
  std::vector<CaseOutcome> results(static_cast<std::size_t>(count));
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, std::max<std::int64_t>(count, 1)));
  std::atomic<std::int64_t> next{0};
  auto work = [&]() {
    while (true) {
      std::int64_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        results[static_cast<std::size_t>(i)] = fn(i);
      } catch (const std::exception& e) {
        results[static_cast<std::size_t>(i)] = {1, 0, std::string("exception: ") + e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  CaseOutcome total;
  for (const CaseOutcome& r : results) {
    total.run += r.run;
    total.passed += r.passed;
    if (total.first_failure.empty() && !r.first_failure.empty()) total.first_failure = r.first_failure;
  }
  return total;
}

VerificationReport make_report(std::string target, std::string range, const CaseOutcome& outcome) {
  VerificationReport report;
  report.target = std::move(target);
  report.range = std::move(range);
  report.cases_run = outcome.run;
  report.cases_passed = outcome.passed;
  report.first_failure = outcome.first_failure;
  return report;
}

// Checks one group's graph: per distinct order, formula degree against the
// brute-force degree of every vertex of that order.
CaseOutcome check_group_degrees(const GroupSpec& spec,
                                const std::function<std::int64_t(std::int64_t)>& formula,
                                const std::function<std::string(std::int64_t)>& extra) {
  CaseOutcome outcome;
  CoprimeOrderGraph graph = build_graph(spec, std::max(kDefaultCap, group_order(spec)));
  for (std::int64_t i = 0; i < graph.n;) {
    std::int64_t j = i;
    while (j < graph.n && graph.orders[static_cast<std::size_t>(j)] == graph.orders[static_cast<std::size_t>(i)]) ++j;
    std::int64_t order = graph.orders[static_cast<std::size_t>(i)];
    outcome.run++;
    std::int64_t expected = formula(order);
    bool ok = true;
    std::string detail;
    for (std::int64_t v = i; v < j && ok; ++v) {
      std::int64_t brute = brute_degree(graph, v);
      if (brute != expected) {
        ok = false;
        detail = render_spec(spec) + " order=" + std::to_string(order) + " formula=" +
                 std::to_string(expected) + " brute=" + std::to_string(brute) + " vertex=" + std::to_string(v);
      }
    }
    if (ok) {
      std::string e = extra(order);
      if (!e.empty()) {
        ok = false;
        detail = render_spec(spec) + " order=" + std::to_string(order) + " " + e;
      }
    }
    if (ok)
      outcome.passed++;
    else if (outcome.first_failure.empty())
      outcome.first_failure = detail;
    i = j;
  }
  return outcome;
}

std::string describe_certificate_failure(const SpectrumCertificate& cert) {
  for (const EigenvalueCheck& c : cert.checks)
    if (!c.pass)
      return "eigenvalue " + std::to_string(c.eigenvalue) + ": nullity " + std::to_string(c.nullity) +
             " != claimed " + std::to_string(c.claimed_multiplicity);
  if (!cert.multiplicities_complete) return "multiplicities do not sum to the dimension";
  if (!cert.trace_matches) return "eigenvalue sum does not match the trace";
  return "";
}

CaseOutcome check_certified_spectrum(const GroupSpec& spec, const Spectrum& claimed) {
  CaseOutcome outcome;
  outcome.run = 1;
  CoprimeOrderGraph graph = build_graph(spec, std::max(kDefaultCap, group_order(spec)));
  SpectrumCertificate cert = certify_spectrum(laplacian(graph), claimed);
  if (cert.pass)
    outcome.passed = 1;
  else
    outcome.first_failure = render_spec(spec) + " claimed " + to_string(claimed) + ": " +
                            describe_certificate_failure(cert);
  return outcome;
}

}  // namespace

std::string to_string(const VerificationReport& report) {
  std::ostringstream out;
  out << "target: " << report.target << "\n"
      << "range: " << report.range << "\n"
      << "cases: " << report.cases_run << "\n"
      << "passed: " << report.cases_passed << "\n";
  if (!report.first_failure.empty()) out << "first failure: " << report.first_failure << "\n";
  out << "verdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

VerificationReport verify_degrees_abelian(std::int64_t max_order) {
  std::vector<AbelianSpec> groups;
  for (std::int64_t m = 1; m <= max_order; ++m)
    for (AbelianSpec& g : enumerate_abelian_groups_of_order(m)) groups.push_back(std::move(g));

  CaseOutcome outcome = run_cases(static_cast<std::int64_t>(groups.size()), [&](std::int64_t idx) {
    const AbelianSpec& g = groups[static_cast<std::size_t>(idx)];
    AbelianCanonicalForm canon = canonicalize_abelian(g);
    return check_group_degrees(
        GroupSpec(g), [&](std::int64_t order) { return degree_abelian(canon, order); },
        [](std::int64_t) { return std::string(); });
  });
  return make_report("degrees-abelian", "abelian groups of order <= " + std::to_string(max_order), outcome);
}

VerificationReport verify_degrees_dihedral(std::int64_t max_n) {
  std::int64_t count = std::max<std::int64_t>(0, max_n - 2);
  CaseOutcome outcome = run_cases(count, [&](std::int64_t idx) {
    std::int64_t n = idx + 3;
    AbelianCanonicalForm rotation_canon = canonicalize_abelian(AbelianSpec{{n}});
    return check_group_degrees(
        GroupSpec(DihedralSpec{n}), [&](std::int64_t order) { return degree_dihedral(n, order); },
        [&](std::int64_t order) -> std::string {
          if (order == 2) return "";
          std::int64_t lhs = degree_dihedral(n, order);
          std::int64_t rhs = degree_abelian(rotation_canon, order) + n;
          if (lhs != rhs)
            return "relation violated: " + std::to_string(lhs) + " != " + std::to_string(rhs - n) +
                   " + " + std::to_string(n);
          return "";
        });
  });
  return make_report("degrees-dihedral", "3 <= n <= " + std::to_string(max_n), outcome);
}

VerificationReport verify_block(std::int64_t max_pq) {
  CaseOutcome outcome = run_cases(max_pq * max_pq, [&](std::int64_t idx) {
    std::int64_t p = idx / max_pq + 1;
    std::int64_t q = idx % max_pq + 1;
    CaseOutcome c;
    c.run = 1;
    SpectrumCertificate cert = certify_spectrum(build_block_L(p, q), spectrum_block(p, q));
    if (cert.pass)
      c.passed = 1;
    else
      c.first_failure = "block p=" + std::to_string(p) + " q=" + std::to_string(q) + ": " +
                        describe_certificate_failure(cert);
    return c;
  });
  return make_report("block", "1 <= p,q <= " + std::to_string(max_pq), outcome);
}

VerificationReport verify_spectra_elementary(const std::vector<std::int64_t>& primes,
                                             std::int64_t max_size, bool check_complete) {
  std::vector<std::pair<std::int64_t, int>> cases;
  for (std::int64_t p : primes)
    for (std::int64_t size = p; size <= max_size; size *= p) {
      int t = 0;
      for (std::int64_t s = size; s > 1; s /= p) ++t;
      cases.emplace_back(p, t);
      if (size > max_size / p) break;
    }

  CaseOutcome outcome = run_cases(static_cast<std::int64_t>(cases.size()), [&](std::int64_t idx) {
    auto [p, t] = cases[static_cast<std::size_t>(idx)];
    AbelianSpec spec{std::vector<std::int64_t>(static_cast<std::size_t>(t), p)};
    CaseOutcome c = check_certified_spectrum(GroupSpec(spec), spectrum_elementary_abelian(p, t));
    if (check_complete && c.passed == 1) {
      CoprimeOrderGraph graph = build_graph(GroupSpec(spec), std::max(kDefaultCap, group_order(GroupSpec(spec))));
      for (std::int64_t v = 0; v < graph.n; ++v)
        if (graph.degrees[static_cast<std::size_t>(v)] != graph.n - 1) {
          c.passed = 0;
          c.first_failure = render_spec(GroupSpec(spec)) + " graph is not complete at vertex " + std::to_string(v);
          break;
        }
    }
    return c;
  });
  std::string range = "(Z_p)^t with p^t <= " + std::to_string(max_size);
  return make_report("spectra-elementary", range, outcome);
}

VerificationReport verify_spectra_p_group(std::int64_t max_order) {
  struct Case {
    std::int64_t p;
    std::vector<int> exponents;
  };
  std::vector<Case> cases;
  for (std::int64_t p : primes_up_to(max_order)) {
    if (p * p > max_order) break;
    for (int a = 2;; ++a) {
      std::int64_t size = 1;
      bool fits = true;
      for (int i = 0; i < a; ++i) {
        if (size > max_order / p) {
          fits = false;
          break;
        }
        size *= p;
      }
      if (!fits) break;
      // All partitions of a with maximum part >= 2.
      std::vector<int> cur;
      auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
          if (cur.front() >= 2) cases.push_back({p, cur});
          return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
          cur.push_back(part);
          self(self, rest - part, part);
          cur.pop_back();
        }
      };
      rec(rec, a, a);
    }
  }

  CaseOutcome outcome = run_cases(static_cast<std::int64_t>(cases.size()), [&](std::int64_t idx) {
    const Case& c = cases[static_cast<std::size_t>(idx)];
    std::vector<std::int64_t> factors;
    for (int e : c.exponents) {
      std::int64_t f = 1;
      for (int i = 0; i < e; ++i) f *= c.p;
      factors.push_back(f);
    }
    return check_certified_spectrum(GroupSpec(AbelianSpec{factors}),
                                    spectrum_abelian_p_group(c.p, c.exponents));
  });
  return make_report("spectra-p-group",
                     "abelian p-groups of order <= " + std::to_string(max_order) + " with max exponent >= 2",
                     outcome);
}

VerificationReport verify_spectra_pq(std::int64_t max_order) {
  struct Case {
    std::int64_t p, q;
    int t, s;
  };
  std::vector<Case> cases;
  std::vector<std::int64_t> primes = primes_up_to(max_order);
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      std::int64_t p = primes[a], q = primes[b];
      if (p * q > max_order) break;
      std::int64_t pt = p;
      for (int t = 1; pt * q <= max_order; ++t, pt *= p) {
        std::int64_t qs = q;
        for (int s = 1; pt * qs <= max_order; ++s, qs *= q) cases.push_back({p, q, t, s});
      }
    }
  }

  CaseOutcome outcome = run_cases(static_cast<std::int64_t>(cases.size()), [&](std::int64_t idx) {
    const Case& c = cases[static_cast<std::size_t>(idx)];
    std::vector<std::int64_t> factors(static_cast<std::size_t>(c.t), c.p);
    factors.insert(factors.end(), static_cast<std::size_t>(c.s), c.q);
    return check_certified_spectrum(GroupSpec(AbelianSpec{factors}), spectrum_pq(c.p, c.t, c.q, c.s));
  });
  return make_report("spectra-pq",
                     "(Z_p)^t x (Z_q)^s with p^t q^s <= " + std::to_string(max_order), outcome);
}

VerificationReport verify_spectra_dihedral(std::int64_t max_rotation_order) {
  std::vector<std::pair<std::int64_t, int>> cases;
  for (std::int64_t p : primes_up_to(max_rotation_order)) {
    std::int64_t pn = p;
    for (int n = 1; pn <= max_rotation_order; ++n) {
      if (!(p == 2 && n == 1)) cases.emplace_back(p, n);
      if (pn > max_rotation_order / p) break;
      pn *= p;
    }
  }

  CaseOutcome outcome = run_cases(static_cast<std::int64_t>(cases.size()), [&](std::int64_t idx) {
    auto [p, n] = cases[static_cast<std::size_t>(idx)];
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    return check_certified_spectrum(GroupSpec(DihedralSpec{pn}), spectrum_dihedral_prime_power(p, n));
  });
  return make_report("spectra-dihedral", "D_{p^n} with p^n <= " + std::to_string(max_rotation_order),
                     outcome);
}

VerificationReport verify_spectra(std::int64_t max_size) {
  std::vector<VerificationReport> parts;
  parts.push_back(verify_spectra_elementary(primes_up_to(max_size), max_size, false));
  parts.push_back(verify_spectra_p_group(max_size));
  parts.push_back(verify_spectra_pq(max_size));
  parts.push_back(verify_spectra_dihedral(max_size / 2));

  CaseOutcome total;
  for (const VerificationReport& r : parts) {
    total.run += r.cases_run;
    total.passed += r.cases_passed;
    if (total.first_failure.empty() && !r.first_failure.empty())
      total.first_failure = r.target + ": " + r.first_failure;
  }
  return make_report("spectra", "family graphs of size <= " + std::to_string(max_size), total);
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

}  // namespace cpog
