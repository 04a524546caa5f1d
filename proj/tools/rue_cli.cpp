// Command-line front end: exact character tables, unit-modulus element
// detection by two independent routes, symmetric group character values, and
// the verification suites over the built-in group catalog.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rue/catalog.hpp"
#include "rue/character_table.hpp"
#include "rue/errors.hpp"
#include "rue/gamma.hpp"
#include "rue/partitions.hpp"
#include "rue/subgroup.hpp"
#include "rue/suites.hpp"

namespace {

using rue::CharacterTable;
using rue::GroupTable;
using rue::Partition;

// "5 8 14 17" with a cap so huge groups stay readable.
std::string index_list(const std::vector<std::size_t>& xs, std::size_t cap = 32) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size() && i < cap; ++i) {
    if (i) out << ' ';
    out << xs[i];
  }
  if (xs.size() > cap) out << " (+" << xs.size() - cap << " more)";
  return out.str();
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
}

int cmd_table(const std::string& spec) {
  GroupTable g = rue::build_group(spec);
  CharacterTable t = rue::character_table(g);
  const auto& cls = t.classes();
  std::cout << "group: " << spec << '\n'
            << "order: " << g.order() << '\n'
            << "classes: " << cls.count() << '\n'
            << "conductor: " << t.conductor() << '\n'
            << "modular prime: " << t.modular_prime() << '\n'
            << '\n';
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"class"};
  std::vector<std::string> sizes{"size"};
  std::vector<std::string> orders{"elt order"};
  for (std::size_t c = 0; c < cls.count(); ++c) {
    head.push_back(std::to_string(c));
    sizes.push_back(std::to_string(cls.cls(c).members.size()));
    orders.push_back(std::to_string(g.element_order(cls.cls(c).representative)));
  }
  cells.push_back(head);
  cells.push_back(sizes);
  cells.push_back(orders);
  cells.push_back({});
  for (std::size_t r = 0; r < t.irreducible_count(); ++r) {
    std::vector<std::string> row{"chi[" + std::to_string(r) + "]"};
    for (std::size_t c = 0; c < cls.count(); ++c) row.push_back(t.value(r, c).to_string());
    cells.push_back(std::move(row));
  }
  print_aligned(std::cout, cells);
  return 0;
}

int cmd_rue(const std::string& spec) {
  GroupTable g = rue::build_group(spec);
  CharacterTable t = rue::character_table(g);
  const auto& cls = t.classes();
  auto verdicts = rue::rue_verdicts(t);

  std::vector<std::size_t> rue_elements;
  for (const auto& v : verdicts) {
    if (v.is_rue) rue_elements.push_back(v.element);
  }
  std::sort(rue_elements.begin(), rue_elements.end());

  std::cout << "group: " << spec << '\n'
            << "order: " << g.order() << '\n'
            << "classes: " << cls.count() << '\n'
            << '\n';

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class", "size", "elt order", "status", "witness row"});
  for (std::size_t c = 0; c < cls.count(); ++c) {
    const auto& v = verdicts[cls.cls(c).representative];
    std::string status = v.is_rue            ? "unit"
                         : v.is_nonvanishing ? "nonvanishing"
                                             : "vanishing";
    std::string witness = v.is_rue ? "-" : std::to_string(v.witness_row);
    cells.push_back({std::to_string(c), std::to_string(cls.cls(c).members.size()),
                     std::to_string(g.element_order(cls.cls(c).representative)), status,
                     witness});
  }
  print_aligned(std::cout, cells);

  std::cout << '\n'
            << "unit elements (character table): " << rue_elements.size() << " of "
            << g.order();
  if (!rue_elements.empty()) std::cout << " - " << index_list(rue_elements);
  std::cout << '\n';

  auto result = rue::theorem_b_classify(g);
  std::cout << "structural verdict: " << rue::verdict_name(result.verdict) << '\n';
  if (result.verdict == rue::TheoremBVerdict::NoRueElement) {
    std::cout << "  failed condition: " << result.failed_condition << '\n';
  } else {
    if (result.decomposition) {
      std::cout << "  factor orders q:";
      for (const auto& f : result.decomposition->factors) std::cout << ' ' << f.q;
      std::cout << '\n';
    }
    std::cout << "  center order: " << result.center.members().size() << '\n';
    auto predicted = rue::predicted_rue_set(result);
    std::cout << "predicted unit elements (structure): " << predicted.size() << " of "
              << g.order();
    if (!predicted.empty()) std::cout << " - " << index_list(predicted);
    std::cout << '\n';
  }

  bool agreement =
      (!rue_elements.empty()) == (result.verdict != rue::TheoremBVerdict::NoRueElement);
  std::cout << "agreement: " << (agreement ? "yes" : "NO") << '\n';
  return agreement ? 0 : 1;
}

int cmd_classify(const std::string& spec) {
  GroupTable g = rue::build_group(spec);
  auto result = rue::theorem_b_classify(g);
  std::cout << "group: " << spec << '\n'
            << "order: " << g.order() << '\n'
            << "verdict: " << rue::verdict_name(result.verdict) << '\n';
  if (result.verdict == rue::TheoremBVerdict::NoRueElement) {
    std::cout << "failed condition: " << result.failed_condition << '\n';
    return 0;
  }
  std::cout << "center order: " << result.center.members().size() << '\n';
  if (result.decomposition) {
    std::cout << "factor orders q:";
    for (const auto& f : result.decomposition->factors) std::cout << ' ' << f.q;
    std::cout << '\n';
  }
  auto predicted = rue::predicted_rue_set(result);
  std::cout << "predicted unit elements: " << predicted.size() << " of " << g.order();
  if (!predicted.empty()) std::cout << " - " << index_list(predicted);
  std::cout << '\n';
  return 0;
}

int cmd_mn(const std::string& lambda_text, const std::string& mu_text) {
  Partition lambda = Partition::parse(lambda_text);
  Partition mu = Partition::parse(mu_text);
  long long value = rue::mn_value(lambda, mu);
  std::cout << "character [" << lambda.to_string() << "] at cycle type [" << mu.to_string()
            << "]: " << value << '\n';
  return 0;
}

int cmd_lemma33(long n) {
  std::vector<Partition> all = rue::partitions_of(n);
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"cycle type", "witness", "value"});
  std::size_t count = 0;
  for (const auto& alpha : all) {
    if (!rue::is_even_cycle_type(alpha)) continue;
    Partition witness = rue::lemma33_witness(alpha);
    long long value = rue::mn_value(witness, alpha);
    cells.push_back({alpha.to_string(), witness.to_string(), std::to_string(value)});
    ++count;
  }
  std::cout << "n = " << n << ": " << count
            << " even cycle types, each separated by a character value outside {1,-1}\n";
  print_aligned(std::cout, cells);
  return 0;
}

int cmd_verify(const std::string& suite, long long max_order, const std::string& json_path) {
  auto catalog = rue::build_catalog(static_cast<std::size_t>(max_order));
  auto t0 = std::chrono::steady_clock::now();
  rue::VerificationReport report = rue::run_suite(suite, catalog, max_order);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << "suite: " << report.suite << '\n'
            << "max order: " << report.max_order << '\n'
            << "groups: " << report.groups.size() << '\n'
            << "checks: " << report.checks.size() << " (passed " << report.passed << ", failed "
            << report.failed << ", skipped " << report.skipped << ")\n"
            << "disagreements: " << report.disagreements.size() << '\n';
  std::size_t shown = 0;
  for (const auto& c : report.checks) {
    if (c.status != "fail") continue;
    if (shown == 20) {
      std::cout << "  (further failures omitted)\n";
      break;
    }
    std::cout << "  FAIL " << c.check << " [" << c.subject << "]: " << c.detail << '\n';
    ++shown;
  }
  for (const auto& d : report.disagreements) {
    std::cout << "  DISAGREEMENT " << d << '\n';
  }
  std::printf("wall time: %.1fs\n", report.wall_seconds);
  std::cout << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << json_path << " for writing\n";
      return 2;
    }
    out << report.to_json();
    std::cout << "report written to " << json_path << '\n';
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact character tables for small finite groups, detection of elements whose\n"
      "irreducible character values all have modulus one, an independent structural\n"
      "classification of the same elements, and verification suites comparing the two."};
  app.require_subcommand(1);

  std::string spec;
  auto* table = app.add_subcommand("table", "Print the exact character table of a group");
  table->add_option("group-spec", spec,
                    "Construction string (e.g. symmetric:4, gamma:5, cyclic:3*cyclic:4) "
                    "or @file of generators")
      ->required();

  auto* ruecmd = app.add_subcommand(
      "rue", "Report unit-modulus elements from the character table and from the structural "
             "classification, and whether the two sides agree");
  ruecmd->add_option("group-spec", spec, "Construction string or @file")->required();

  auto* classify = app.add_subcommand(
      "classify", "Structural classification: does the group have unit-modulus elements, "
                  "and which affine factors realize them");
  classify->add_option("group-spec", spec, "Construction string or @file")->required();

  std::string lambda_text, mu_text;
  auto* mn = app.add_subcommand("mn", "One symmetric group character value chi_lambda(mu)");
  mn->add_option("--lambda", lambda_text, "Character label, comma-separated parts (e.g. 5,2)")
      ->required();
  mn->add_option("--mu", mu_text, "Cycle type, comma-separated parts (e.g. 4,3)")->required();

  long witness_n = 0;
  auto* lemma33 = app.add_subcommand(
      "lemma33", "For every even cycle type of Sym_n, a witness character whose value "
                 "there lies outside {1,-1}");
  lemma33->add_option("--n", witness_n, "Symmetric group degree (n >= 6)")->required();

  std::string suite_name = "all";
  long long max_order = 120;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the group catalog");
  verify->add_option("--suite", suite_name, "Suite name")
      ->check(CLI::IsMember(rue::suite_names()))
      ->capture_default_str();
  verify->add_option("--max-order", max_order, "Catalog bound on group order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--json", json_path, "Write the full report as JSON to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return cmd_table(spec);
    if (*ruecmd) return cmd_rue(spec);
    if (*classify) return cmd_classify(spec);
    if (*mn) return cmd_mn(lambda_text, mu_text);
    if (*lemma33) return cmd_lemma33(witness_n);
    if (*verify) return cmd_verify(suite_name, max_order, json_path);
  } catch (const rue::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
