#include "cpog/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace cpog {

namespace {

void require_square(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if (m.rows() < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

// Divides a monic polynomial (coefficients low to high) by (x - r);
// returns the quotient and the remainder.
std::pair<std::vector<BigInt>, BigInt> synthetic_division(const std::vector<BigInt>& c, std::int64_t r) {
  std::size_t d = c.size() - 1;
  std::vector<BigInt> q(d);
  BigInt carry = c[d];
  for (std::size_t j = d; j-- > 0;) {
    q[j] = carry;
    carry = c[j] + BigInt(r) * carry;
  }
  return {std::move(q), std::move(carry)};
}

}  // namespace

EliminationResult bareiss_eliminate(ExactMatrix a) {
  require_square(a);
  const std::int64_t n = a.rows();
  std::int64_t rank = 0;
  std::int64_t row = 0;
  int sign = 1;
  BigInt prev(1);
  for (std::int64_t col = 0; col < n && row < n; ++col) {
    std::int64_t piv = -1;
    for (std::int64_t i = row; i < n; ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (std::int64_t j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
      sign = -sign;
    }
    for (std::int64_t i = row + 1; i < n; ++i) {
      for (std::int64_t j = col + 1; j < n; ++j)
        a(i, j) = exact_div(a(row, col) * a(i, j) - a(i, col) * a(row, j), prev);
      a(i, col) = BigInt(0);
    }
    prev = a(row, col);
    ++rank;
    ++row;
  }
  EliminationResult result;
  result.rank = rank;
  if (rank == n) result.determinant = sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
  return result;
}

CharPoly char_poly(const ExactMatrix& m, std::int64_t dimension_cap) {
  require_square(m);
  const std::int64_t n = m.rows();
  if (n > dimension_cap)
    throw std::length_error("characteristic polynomial dimension " + std::to_string(n) +
                            " exceeds cap " + std::to_string(dimension_cap));
  CharPoly p;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
  p.coeffs[static_cast<std::size_t>(n)] = BigInt(1);
  ExactMatrix b = m;
  p.coeffs[static_cast<std::size_t>(n - 1)] = -b.trace();
  for (std::int64_t k = 2; k <= n; ++k) {
    for (std::int64_t i = 0; i < n; ++i) b(i, i) += p.coeffs[static_cast<std::size_t>(n - k + 1)];
    b = m * b;
    p.coeffs[static_cast<std::size_t>(n - k)] = exact_div(-b.trace(), BigInt(k));
  }
  return p;
}

IntegerRootResult integer_roots(const CharPoly& p) {
  if (p.coeffs.empty() || p.coeffs.back() != BigInt(1))
    throw std::invalid_argument("integer_roots requires a monic polynomial");

  std::vector<std::pair<std::int64_t, std::int64_t>> found;

  // Zero roots: x^v divides the polynomial.
  std::size_t v = 0;
  while (v + 1 < p.coeffs.size() && p.coeffs[v].is_zero()) ++v;
  if (v > 0) found.emplace_back(0, static_cast<std::int64_t>(v));
  std::vector<BigInt> work(p.coeffs.begin() + static_cast<std::ptrdiff_t>(v), p.coeffs.end());

  if (work.size() > 1) {
    // Root bound: |root| <= 2 max_k |c_{d-k}|^{1/k}, overestimated through
    // bit lengths so it stays integral.
    std::size_t d = work.size() - 1;
    std::int64_t bound = 2;
    for (std::size_t j = 0; j < d; ++j) {
      if (work[j].is_zero()) continue;
      std::size_t k = d - j;
      unsigned e = (bit_length(work[j]) + static_cast<unsigned>(k) - 1) / static_cast<unsigned>(k);
      if (e + 1 >= 62)
        bound = std::numeric_limits<std::int64_t>::max();
      else
        bound = std::max(bound, std::int64_t(1) << (e + 1));
    }

    // Every integer root divides the constant term and respects the bound.
    // Quotient constant terms keep dividing the original one, so a single
    // candidate pass suffices.
    BigInt w0 = abs(work[0]);
    for (std::int64_t cand = 1; BigInt(cand) <= w0 && cand <= bound && work.size() > 1; ++cand) {
      if (!(w0 % BigInt(cand)).is_zero()) continue;
      for (std::int64_t root : {cand, -cand}) {
        std::int64_t mult = 0;
        while (work.size() > 1) {
          auto [quotient, rem] = synthetic_division(work, root);
          if (!rem.is_zero()) break;
          work = std::move(quotient);
          ++mult;
        }
        if (mult > 0) found.emplace_back(root, mult);
        if (work.size() == 1) break;
      }
    }
  }

  IntegerRootResult result;
  result.roots = make_spectrum(found);
  result.remainder = std::move(work);
  return result;
}

ExactMatrix UniformBlockStructure::quotient(const BigInt& shift) const {
  const std::int64_t d = classes();
  ExactMatrix q(d, d);
  for (std::int64_t r = 0; r < d; ++r)
    for (std::int64_t s = 0; s < d; ++s) {
      if (r == s)
        q(r, r) = (diagonal[static_cast<std::size_t>(r)] - shift) +
                  off(r, r) * BigInt(class_size[static_cast<std::size_t>(r)] - 1);
      else
        q(r, s) = off(r, s) * BigInt(class_size[static_cast<std::size_t>(s)]);
    }
  return q;
}

UniformBlockStructure detect_uniform_blocks(const ExactMatrix& m) {
  require_square(m);
  const std::int64_t n = m.rows();

  // Initial classes keyed by diagonal value, then refined by the multiset of
  // (class, entry) pairs seen along each row until stable.
  std::vector<int> cls(static_cast<std::size_t>(n));
  {
    std::map<BigInt, int> ids;
    for (std::int64_t i = 0; i < n; ++i) {
      auto [it, inserted] = ids.emplace(m(i, i), static_cast<int>(ids.size()));
      cls[static_cast<std::size_t>(i)] = it->second;
    }
  }
  int count = 0;
  for (int c : cls) count = std::max(count, c + 1);

  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, BigInt>>>;
    std::map<Signature, int> ids;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      Signature sig;
      sig.first = cls[static_cast<std::size_t>(i)];
      sig.second.reserve(static_cast<std::size_t>(n) - 1);
      for (std::int64_t j = 0; j < n; ++j)
        if (j != i) sig.second.emplace_back(cls[static_cast<std::size_t>(j)], m(i, j));
      std::sort(sig.second.begin(), sig.second.end());
      auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
      next[static_cast<std::size_t>(i)] = it->second;
    }
    // Renumber deterministically by sorted signature order.
    std::vector<int> renumber(ids.size());
    int fresh = 0;
    for (const auto& [sig, id] : ids) renumber[static_cast<std::size_t>(id)] = fresh++;
    for (auto& c : next) c = renumber[static_cast<std::size_t>(c)];
    int next_count = static_cast<int>(ids.size());
    cls = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }

  auto build = [&](const std::vector<int>& classes_of, int d) {
    UniformBlockStructure s;
    s.class_of = classes_of;
    s.class_size.assign(static_cast<std::size_t>(d), 0);
    s.diagonal.assign(static_cast<std::size_t>(d), BigInt(0));
    s.off = ExactMatrix::Zero(d, d);
    for (std::int64_t i = 0; i < n; ++i) {
      auto c = static_cast<std::size_t>(classes_of[static_cast<std::size_t>(i)]);
      s.class_size[c]++;
      s.diagonal[c] = m(i, i);
    }
    return s;
  };

  UniformBlockStructure s = build(cls, count);

  // Exact verification that every block is constant; any mismatch falls
  // back to the discrete partition (quotient = the matrix itself).
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(count),
                                      std::vector<bool>(static_cast<std::size_t>(count), false));
  bool uniform = true;
  for (std::int64_t i = 0; i < n && uniform; ++i) {
    auto r = static_cast<std::size_t>(cls[static_cast<std::size_t>(i)]);
    if (m(i, i) != s.diagonal[r]) {
      uniform = false;
      break;
    }
    for (std::int64_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto c = static_cast<std::size_t>(cls[static_cast<std::size_t>(j)]);
      if (!seen[r][c]) {
        seen[r][c] = true;
        s.off(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) = m(i, j);
      } else if (s.off(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) != m(i, j)) {
        uniform = false;
        break;
      }
    }
  }
  if (uniform) return s;

  std::vector<int> discrete(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) discrete[static_cast<std::size_t>(i)] = static_cast<int>(i);
  UniformBlockStructure fallback = build(discrete, static_cast<int>(n));
  fallback.off = m;
  for (std::int64_t i = 0; i < n; ++i) fallback.off(i, i) = BigInt(0);
  return fallback;
}

std::int64_t nullity_of_shift(const UniformBlockStructure& s, const BigInt& lambda) {
  std::int64_t nullity = 0;
  const std::int64_t d = s.classes();
  for (std::int64_t r = 0; r < d; ++r)
    if (s.class_size[static_cast<std::size_t>(r)] >= 2 &&
        s.diagonal[static_cast<std::size_t>(r)] - lambda == s.off(r, r))
      nullity += s.class_size[static_cast<std::size_t>(r)] - 1;
  ExactMatrix q = s.quotient(lambda);
  nullity += d - bareiss_eliminate(std::move(q)).rank;
  return nullity;
}

std::int64_t nullity(const ExactMatrix& m) {
  return nullity_of_shift(detect_uniform_blocks(m), BigInt(0));
}

ExactMatrix shifted(const ExactMatrix& m, const BigInt& lambda) {
  ExactMatrix out = m;
  for (std::int64_t i = 0; i < out.rows(); ++i) out(i, i) -= lambda;
  return out;
}

SpectrumCertificate certify_spectrum(const ExactMatrix& L, const Spectrum& claimed) {
  require_square(L);
  SpectrumCertificate cert;
  cert.dimension = L.rows();

  UniformBlockStructure structure = detect_uniform_blocks(L);
  bool all_checks = true;
  for (const auto& [eigenvalue, multiplicity] : claimed.pairs) {
    EigenvalueCheck check;
    check.eigenvalue = eigenvalue;
    check.claimed_multiplicity = multiplicity;
    check.nullity = nullity_of_shift(structure, BigInt(eigenvalue));
    check.pass = check.nullity == multiplicity;
    all_checks = all_checks && check.pass;
    cert.checks.push_back(check);
  }

  cert.multiplicities_complete = claimed.total_multiplicity() == cert.dimension;
  cert.trace_matches = BigInt(claimed.weighted_sum()) == L.trace();
  cert.pass = all_checks && cert.multiplicities_complete && cert.trace_matches;
  return cert;
}

IntegerSpectrumResult exact_integer_spectrum(const ExactMatrix& m, std::int64_t dimension_cap) {
  require_square(m);
  UniformBlockStructure s = detect_uniform_blocks(m);

  std::vector<std::pair<std::int64_t, std::int64_t>> entries;
  for (std::int64_t r = 0; r < s.classes(); ++r) {
    if (s.class_size[static_cast<std::size_t>(r)] < 2) continue;
    BigInt ev = s.diagonal[static_cast<std::size_t>(r)] - s.off(r, r);
    entries.emplace_back(to_int64(ev), s.class_size[static_cast<std::size_t>(r)] - 1);
  }

  CharPoly qp = char_poly(s.quotient(BigInt(0)), dimension_cap);
  IntegerRootResult qroots = integer_roots(qp);
  for (const auto& [ev, mult] : qroots.roots.pairs) entries.emplace_back(ev, mult);

  IntegerSpectrumResult result;
  result.integer_part = make_spectrum(entries);
  result.remainder = std::move(qroots.remainder);
  return result;
}

}  // namespace cpog
