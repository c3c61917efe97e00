#include "cpog/closed_forms.hpp"
#include "cpog/exact_linalg.hpp"
#include "cpog/graph.hpp"
#include "cpog/group.hpp"
#include "cpog/spectrum.hpp"
#include "cpog/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace cpog;

std::string render_canonical(const AbelianCanonicalForm& canon) {
  std::string out;
  for (const auto& part : canon.parts)
    for (int e : part.exponents) {
      if (!out.empty()) out += " x ";
      std::int64_t f = 1;
      for (int i = 0; i < e; ++i) f *= part.prime;
      out += "Z" + std::to_string(f);
    }
  return out.empty() ? "Z1" : out;
}

std::string render_polynomial(const std::vector<BigInt>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j].is_zero()) continue;
    BigInt c = coeffs[j];
    if (first) {
      if (c < BigInt(0)) out << "-";
      first = false;
    } else {
      out << (c < BigInt(0) ? " - " : " + ");
    }
    BigInt mag = abs(c);
    if (j == 0 || mag != BigInt(1)) out << mag;
    if (j >= 1) out << "x";
    if (j >= 2) out << "^" << j;
  }
  if (first) out << "0";
  return out.str();
}

void print_spectrum(const Spectrum& s) {
  std::cout << "eigenvalue  multiplicity\n";
  for (const auto& [ev, m] : s.pairs)
    std::cout << std::left << std::setw(12) << ev << m << "\n";
}

void print_certificate(const SpectrumCertificate& cert) {
  std::cout << "certificate:\n";
  std::cout << "  eigenvalue  claimed  nullity  check\n";
  for (const auto& c : cert.checks)
    std::cout << "  " << std::left << std::setw(12) << c.eigenvalue << std::setw(9)
              << c.claimed_multiplicity << std::setw(9) << c.nullity << (c.pass ? "ok" : "FAIL") << "\n";
  std::cout << "  multiplicity total: " << (cert.multiplicities_complete ? "ok" : "FAIL") << "\n";
  std::cout << "  trace: " << (cert.trace_matches ? "ok" : "FAIL") << "\n";
  std::cout << "  verdict: " << (cert.pass ? "pass" : "FAIL") << "\n";
}

int cmd_describe(const std::string& spec_text, std::int64_t cap) {
  GroupSpec spec = parse_group_spec(spec_text, cap);
  std::cout << "group: " << render_spec(spec) << "\n";
  std::cout << "order: " << group_order(spec) << "\n";
  if (is_abelian(spec)) {
    std::cout << "canonical: " << render_canonical(canonicalize_abelian(std::get<AbelianSpec>(spec))) << "\n";
  } else {
    std::int64_t n = std::get<DihedralSpec>(spec).n;
    std::cout << "canonical: D" << n << " (rotation order " << n << ", " << n << " reflections)\n";
  }
  std::cout << "orders:\n  order  count\n";
  for (const auto& [order, count] : order_profile(spec, cap))
    std::cout << "  " << std::left << std::setw(7) << order << count << "\n";
  return 0;
}

int cmd_degrees(const std::string& spec_text, const std::string& method, std::int64_t cap) {
  GroupSpec spec = parse_group_spec(spec_text, cap);
  bool want_formula = method == "formula" || method == "both";
  bool want_brute = method == "brute" || method == "both";

  CoprimeOrderGraph graph = build_graph(spec, cap);
  AbelianCanonicalForm canon;
  std::int64_t dihedral_n = 0;
  if (is_abelian(spec))
    canon = canonicalize_abelian(std::get<AbelianSpec>(spec));
  else
    dihedral_n = std::get<DihedralSpec>(spec).n;

  std::cout << "order  count";
  if (want_formula) std::cout << "  formula";
  if (want_brute) std::cout << "  brute";
  if (want_formula && want_brute) std::cout << "  match";
  std::cout << "\n";

  bool all_match = true;
  for (std::int64_t i = 0; i < graph.n;) {
    std::int64_t j = i;
    while (j < graph.n && graph.orders[static_cast<std::size_t>(j)] == graph.orders[static_cast<std::size_t>(i)]) ++j;
    std::int64_t order = graph.orders[static_cast<std::size_t>(i)];
    std::cout << std::left << std::setw(7) << order << std::setw(7) << (j - i);
    std::int64_t formula = 0, brute = 0;
    if (want_formula) {
      formula = is_abelian(spec) ? degree_abelian(canon, order) : degree_dihedral(dihedral_n, order);
      std::cout << std::setw(9) << formula;
    }
    if (want_brute) {
      brute = brute_degree(graph, i);
      std::cout << std::setw(7) << brute;
    }
    if (want_formula && want_brute) {
      bool match = formula == brute;
      all_match = all_match && match;
      std::cout << (match ? "yes" : "NO");
    }
    std::cout << "\n";
    i = j;
  }
  if (!(want_formula && want_brute)) return 0;
  if (!all_match) std::cerr << "degree mismatch detected\n";
  return all_match ? 0 : 1;
}

int cmd_spectrum(const std::string& spec_text, const std::string& method, std::int64_t cap) {
  GroupSpec spec = parse_group_spec(spec_text, cap);

  std::optional<Spectrum> closed;
  if (method == "closed-form" || method == "both") {
    closed = closed_form_spectrum(spec);
    if (!closed) {
      std::cerr << "no closed-form spectrum is available for " << render_spec(spec) << "\n";
      return 1;
    }
  }

  if (method == "closed-form") {
    print_spectrum(*closed);
    return 0;
  }

  CoprimeOrderGraph graph = build_graph(spec, cap);
  ExactMatrix L = laplacian(graph);

  if (method == "exact") {
    IntegerSpectrumResult result = exact_integer_spectrum(L);
    print_spectrum(result.integer_part);
    if (result.remainder.size() > 1)
      std::cout << "non-integer eigenvalues remain; unfactored part: "
                << render_polynomial(result.remainder) << "\n";
    return 0;
  }

  print_spectrum(*closed);
  SpectrumCertificate cert = certify_spectrum(L, *closed);
  print_certificate(cert);
  return cert.pass ? 0 : 1;
}

int cmd_export(const std::string& spec_text, const std::string& format, const std::string& path,
               std::int64_t cap) {
  GroupSpec spec = parse_group_spec(spec_text, cap);
  CoprimeOrderGraph graph = build_graph(spec, cap);

  ExportFormat fmt;
  if (format == "dot")
    fmt = ExportFormat::dot;
  else if (format == "csv")
    fmt = ExportFormat::csv;
  else if (format == "json")
    fmt = ExportFormat::json;
  else
    throw std::invalid_argument("unsupported format: " + format);

  std::optional<SpectrumAnnotation> annotation;
  if (fmt == ExportFormat::json) {
    if (std::optional<Spectrum> closed = closed_form_spectrum(spec)) {
      SpectrumCertificate cert = certify_spectrum(laplacian(graph), *closed);
      annotation = SpectrumAnnotation{*closed, cert.pass};
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    return 1;
  }
  out << export_graph(graph, fmt, annotation);
  out.close();
  if (!out) {
    std::cerr << "write to " << path << " failed\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& target, std::int64_t max_order, std::int64_t max_n,
               std::int64_t max_pq) {
  VerificationReport report;
  if (target == "degrees-abelian")
    report = verify_degrees_abelian(max_order);
  else if (target == "degrees-dihedral")
    report = verify_degrees_dihedral(max_n);
  else if (target == "spectra")
    report = verify_spectra(max_order);
  else if (target == "block")
    report = verify_block(max_pq);
  else
    throw std::invalid_argument("unknown verify target: " + target);
  std::cout << to_string(report);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-prime order graphs of finite groups: closed forms and exact certification"};
  app.require_subcommand(1);

  std::int64_t cap = cpog::kDefaultCap;
  app.add_option("--cap", cap, "maximum group order")->capture_default_str();

  std::string spec_text, method, format, output;

  CLI::App* describe = app.add_subcommand("describe", "group order, canonical form, order profile");
  describe->add_option("spec", spec_text, "group spec, e.g. Z4xZ2 or D27")->required();

  CLI::App* degrees = app.add_subcommand("degrees", "per-order degree table");
  degrees->add_option("spec", spec_text)->required();
  method = "both";
  degrees->add_option("--method", method, "formula|brute|both")
      ->check(CLI::IsMember({"formula", "brute", "both"}))
      ->capture_default_str();

  CLI::App* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum report");
  spectrum->add_option("spec", spec_text)->required();
  spectrum->add_option("--method", method, "closed-form|exact|both")
      ->check(CLI::IsMember({"closed-form", "exact", "both"}))
      ->capture_default_str();

  CLI::App* exp = app.add_subcommand("export", "write the graph to a file");
  exp->add_option("spec", spec_text)->required();
  exp->add_option("--format", format, "dot|csv|json")
      ->check(CLI::IsMember({"dot", "csv", "json"}))
      ->required();
  exp->add_option("-o,--output", output, "output path")->required();

  CLI::App* verify = app.add_subcommand("verify", "sweep a closed form against oracles");
  std::string target;
  std::int64_t max_order = 200, max_n = 100, max_pq = 30;
  verify->add_option("target", target, "degrees-abelian|degrees-dihedral|spectra|block")
      ->check(CLI::IsMember({"degrees-abelian", "degrees-dihedral", "spectra", "block"}))
      ->required();
  verify->add_option("--max-order", max_order, "bound for degrees-abelian and spectra sweeps")
      ->capture_default_str();
  verify->add_option("--max-n", max_n, "bound for the dihedral sweep")->capture_default_str();
  verify->add_option("--max-pq", max_pq, "bound for the block sweep")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) return cmd_describe(spec_text, cap);
    if (degrees->parsed()) return cmd_degrees(spec_text, method, cap);
    if (spectrum->parsed()) return cmd_spectrum(spec_text, method, cap);
    if (exp->parsed()) return cmd_export(spec_text, format, output, cap);
    if (verify->parsed()) {
      if (target == "spectra" && max_order == 200 && verify->count("--max-order") == 0) max_order = 750;
      return cmd_verify(target, max_order, max_n, max_pq);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
