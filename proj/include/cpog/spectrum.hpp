#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpog {

/// Multiset of integer eigenvalues with multiplicities, kept in strictly
/// decreasing eigenvalue order. Entries with non-positive multiplicity are
/// not representable.
struct Spectrum {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

  std::int64_t total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto& [ev, m] : pairs) t += m;
    return t;
  }

  /// Sum of eigenvalue * multiplicity (the trace of any matrix realizing it).
  std::int64_t weighted_sum() const {
    std::int64_t t = 0;
    for (const auto& [ev, m] : pairs) t += ev * m;
    return t;
  }

  std::int64_t multiplicity_of(std::int64_t eigenvalue) const {
    for (const auto& [ev, m] : pairs)
      if (ev == eigenvalue) return m;
    return 0;
  }

  bool operator==(const Spectrum& o) const { return pairs == o.pairs; }
  bool operator!=(const Spectrum& o) const { return pairs != o.pairs; }
};

/// Builds a Spectrum from unordered (eigenvalue, multiplicity) entries,
/// merging duplicates, dropping zero multiplicities, and sorting
/// eigenvalues in decreasing order.
inline Spectrum make_spectrum(const std::vector<std::pair<std::int64_t, std::int64_t>>& entries) {
  std::map<std::int64_t, std::int64_t> acc;
  for (const auto& [ev, m] : entries) {
    if (m < 0) throw std::invalid_argument("make_spectrum: negative multiplicity");
    if (m > 0) acc[ev] += m;
  }
  Spectrum s;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) s.pairs.emplace_back(it->first, it->second);
  return s;
}

inline std::string to_string(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s.pairs[i].first) + ":" + std::to_string(s.pairs[i].second);
  }
  out += "}";
  return out;
}

}  // namespace cpog
