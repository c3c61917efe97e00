#include "cpog/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cpog {

namespace {

std::int64_t checked_product(const std::vector<std::int64_t>& factors) {
  std::int64_t acc = 1;
  for (std::int64_t f : factors) {
    if (f > 0 && acc > std::numeric_limits<std::int64_t>::max() / f)
      throw std::overflow_error("group order overflows 64-bit range");
    acc *= f;
  }
  return acc;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
      throw std::overflow_error("prime power overflows 64-bit range");
    r *= base;
  }
  return r;
}

bool element_compare(const GroupElement& a, const GroupElement& b) {
  if (const auto* ta = std::get_if<AbelianTuple>(&a)) {
    const auto& tb = std::get<AbelianTuple>(b);
    return ta->residues < tb.residues;
  }
  const auto& da = std::get<DihedralElement>(a);
  const auto& db = std::get<DihedralElement>(b);
  return std::pair(da.flip, da.rotation) < std::pair(db.flip, db.rotation);
}

// Partitions of n in reverse-lexicographic order: [n], [n-1,1], ..., [1,...,1].
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace

std::int64_t group_order(const GroupSpec& spec) {
  if (const auto* ab = std::get_if<AbelianSpec>(&spec)) return checked_product(ab->factors);
  return 2 * std::get<DihedralSpec>(spec).n;
}

bool is_abelian(const GroupSpec& spec) { return std::holds_alternative<AbelianSpec>(spec); }

std::string render_spec(const GroupSpec& spec) {
  if (const auto* ab = std::get_if<AbelianSpec>(&spec)) {
    std::string out;
    for (std::size_t i = 0; i < ab->factors.size(); ++i) {
      if (i) out += "x";
      out += "Z" + std::to_string(ab->factors[i]);
    }
    return out.empty() ? "Z1" : out;
  }
  return "D" + std::to_string(std::get<DihedralSpec>(spec).n);
}

std::int64_t AbelianCanonicalForm::sylow_order(std::size_t i) const {
  int total = 0;
  for (int e : parts[i].exponents) total += e;
  return ipow(parts[i].prime, total);
}

std::int64_t AbelianCanonicalForm::exponent() const {
  std::int64_t e = 1;
  for (const auto& part : parts) e *= ipow(part.prime, part.exponents.back());
  return e;
}

int AbelianCanonicalForm::part_index(std::int64_t prime) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].prime == prime) return static_cast<int>(i);
  return -1;
}

std::int64_t OrderDecomposition::reconstruct() const {
  std::int64_t r = 1;
  for (std::int64_t p : first_power_primes) r *= p;
  for (const auto& [p, g] : higher_power_primes) r *= ipow(p, g);
  return r;
}

GroupSpec parse_group_spec(const std::string& text, std::int64_t cap) {
  auto fail = [&](std::size_t pos, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  };
  if (text.empty()) fail(0, "empty group spec");

  std::size_t pos = 0;
  auto read_integer = [&]() -> std::int64_t {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(pos, "expected an integer");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > kDefaultCap * 100000) fail(pos, "integer too large");
      ++pos;
    }
    return v;
  };

  char head = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  if (head == 'd') {
    pos = 1;
    std::size_t npos = pos;
    std::int64_t n = read_integer();
    if (pos != text.size()) fail(pos, "trailing input after dihedral spec");
    if (n < 3) fail(npos, "dihedral index must be >= 3");
    GroupSpec spec = DihedralSpec{n};
    if (group_order(spec) > cap) throw std::domain_error("group order " + std::to_string(2 * n) + " exceeds cap " + std::to_string(cap));
    return spec;
  }

  AbelianSpec ab;
  while (true) {
    if (pos >= text.size() || std::tolower(static_cast<unsigned char>(text[pos])) != 'z')
      fail(pos, "expected 'Z'");
    ++pos;
    std::size_t mpos = pos;
    std::int64_t m = read_integer();
    if (m < 2) fail(mpos, "cyclic modulus must be >= 2");
    ab.factors.push_back(m);
    if (pos == text.size()) break;
    char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
    if (sep != 'x' && sep != '*') fail(pos, "expected separator 'x' or '*'");
    ++pos;
  }
  GroupSpec spec = ab;
  std::int64_t order = group_order(spec);
  if (order > cap) throw std::domain_error("group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  return spec;
}

AbelianCanonicalForm canonicalize_abelian(const AbelianSpec& spec) {
  std::map<std::int64_t, std::vector<int>> table;
  for (std::int64_t f : spec.factors) {
    if (f < 2) throw std::invalid_argument("abelian factor must be >= 2");
    for (const auto& [p, e] : factorize(f)) table[p].push_back(e);
  }
  AbelianCanonicalForm canon;
  canon.order = checked_product(spec.factors);
  for (auto& [p, exps] : table) {
    std::sort(exps.begin(), exps.end());
    canon.parts.push_back({p, exps});
  }
  return canon;
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec, std::int64_t cap) {
  std::int64_t n = group_order(spec);
  if (n > cap) throw std::domain_error("group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  std::vector<GroupElement> elements;
  elements.reserve(static_cast<std::size_t>(n));
  if (const auto* ab = std::get_if<AbelianSpec>(&spec)) {
    std::vector<std::int64_t> tuple(ab->factors.size(), 0);
    while (true) {
      elements.push_back(AbelianTuple{tuple});
      std::size_t i = tuple.size();
      while (i > 0) {
        --i;
        if (++tuple[i] < ab->factors[i]) break;
        tuple[i] = 0;
        if (i == 0) goto done;
      }
      if (tuple.empty()) break;
    }
  done:;
  } else {
    std::int64_t dn = std::get<DihedralSpec>(spec).n;
    for (int flip = 0; flip <= 1; ++flip)
      for (std::int64_t j = 0; j < dn; ++j) elements.push_back(DihedralElement{flip, j});
  }

  std::stable_sort(elements.begin(), elements.end(), [&](const GroupElement& a, const GroupElement& b) {
    std::int64_t oa = element_order(spec, a), ob = element_order(spec, b);
    if (oa != ob) return oa < ob;
    return element_compare(a, b);
  });
  return elements;
}

std::int64_t element_order(const GroupSpec& spec, const GroupElement& g) {
  if (const auto* ab = std::get_if<AbelianSpec>(&spec)) {
    const auto* tuple = std::get_if<AbelianTuple>(&g);
    if (!tuple) throw std::invalid_argument("abelian spec given a dihedral element");
    if (tuple->residues.size() != ab->factors.size())
      throw std::invalid_argument("element arity does not match factor count");
    std::int64_t order = 1;
    for (std::size_t i = 0; i < tuple->residues.size(); ++i) {
      std::int64_t r = tuple->residues[i], m = ab->factors[i];
      if (r < 0 || r >= m) throw std::invalid_argument("residue out of range");
      std::int64_t coord = m / std::gcd(m, r);
      order = std::lcm(order, coord);
    }
    return order;
  }
  std::int64_t n = std::get<DihedralSpec>(spec).n;
  const auto* d = std::get_if<DihedralElement>(&g);
  if (!d) throw std::invalid_argument("dihedral spec given an abelian element");
  if (d->flip != 0 && d->flip != 1) throw std::invalid_argument("flip must be 0 or 1");
  if (d->rotation < 0 || d->rotation >= n) throw std::invalid_argument("rotation out of range");
  if (d->flip == 1) return 2;
  return n / std::gcd(n, d->rotation);
}

OrderProfile order_profile(const GroupSpec& spec, std::int64_t cap) {
  OrderProfile profile;
  for (const GroupElement& g : enumerate_elements(spec, cap)) profile[element_order(spec, g)]++;
  return profile;
}

OrderDecomposition decompose_order(std::int64_t order, const AbelianCanonicalForm& canon) {
  if (order < 1) throw std::domain_error("element order must be positive");
  OrderDecomposition dec;
  for (const auto& [p, e] : factorize(order)) {
    int idx = canon.part_index(p);
    if (idx < 0 || e > canon.parts[idx].exponents.back())
      throw std::domain_error("order " + std::to_string(order) + " does not divide the group exponent");
    if (e == 1)
      dec.first_power_primes.push_back(p);
    else
      dec.higher_power_primes.emplace_back(p, e);
  }
  return dec;
}

std::vector<AbelianSpec> enumerate_abelian_groups_of_order(std::int64_t m) {
  if (m < 1) throw std::domain_error("order must be positive");
  std::vector<std::pair<std::int64_t, std::vector<std::vector<int>>>> choices;
  for (const auto& [p, a] : factorize(m)) choices.emplace_back(p, partitions(a));

  std::vector<AbelianSpec> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    AbelianSpec spec;
    for (std::size_t i = 0; i < choices.size(); ++i)
      for (int part : choices[i].second[pick[i]]) spec.factors.push_back(ipow(choices[i].first, part));
    out.push_back(std::move(spec));
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].second.size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

std::map<std::int64_t, int> factorize(std::int64_t m) {
  if (m < 1) throw std::domain_error("factorize requires a positive integer");
  std::map<std::int64_t, int> f;
  for (std::int64_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      f[d]++;
      m /= d;
    }
  if (m > 1) f[m]++;
  return f;
}

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

std::string element_label(const GroupElement& g) {
  if (const auto* tuple = std::get_if<AbelianTuple>(&g)) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple->residues.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(tuple->residues[i]);
    }
    return out + ")";
  }
  const auto& d = std::get<DihedralElement>(g);
  std::string rot;
  if (d.rotation == 1)
    rot = "r";
  else if (d.rotation > 1)
    rot = "r^" + std::to_string(d.rotation);
  if (d.flip) return rot.empty() ? "f" : "f" + rot;
  return rot.empty() ? "e" : rot;
}

}  // namespace cpog
