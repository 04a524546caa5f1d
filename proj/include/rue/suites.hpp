#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rue/catalog.hpp"
#include "rue/rational.hpp"

namespace rue {

// Facts recorded for one catalog group: the class census, the unit-modulus
// elements found in the character table, the structural verdict with its
// invariants, and whether the two independent determinations agree.
struct GroupRecord {
  std::string spec;
  long long order = 0;
  long long class_count = 0;
  Fraction commuting_probability{0, 1};
  std::vector<std::size_t> rue_elements;      // character-side element indices
  std::string verdict;                        // structural verdict name
  std::vector<long> gamma_orders;             // q multiset when decomposed
  long long center_order = 0;
  std::vector<std::size_t> predicted_elements;  // structure-side element indices
  bool agreement = false;  // rue_elements nonempty <=> verdict admits them
};

// One assertion instance: which check, on which group (or standalone input),
// with pass/fail/skip status and a witness string sufficient to reproduce the
// instance with a single-group command.
struct CheckResult {
  std::string check;
  std::string subject;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  long long max_order = 0;
  std::vector<GroupRecord> groups;
  std::vector<CheckResult> checks;
  std::vector<std::string> disagreements;  // specs of groups where the two sides differ
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;
  double wall_seconds = 0.0;  // measured by the caller; never serialized

  bool ok() const { return failed == 0 && disagreements.empty(); }

  // Deterministic serialization: identical inputs give byte-identical output.
  // Wall time is excluded so reruns compare equal.
  std::string to_json() const;
};

// The fixed list of runnable suite names, ending with "all".
const std::vector<std::string>& suite_names();

// Which check identifiers each suite may emit, in a fixed order; the manifest
// is embedded in every serialized report.
const std::vector<std::pair<std::string, std::vector<std::string>>>& suite_manifest();

// Runs one named family of assertions over the catalog. UnknownSuite for a
// name outside suite_names(). The report's `ok()` is the process-level
// verdict: any failed check or any group where the character table and the
// structural classification disagree about the existence of unit-modulus
// elements makes the run a failure.
VerificationReport run_suite(const std::string& suite,
                             const std::vector<CatalogEntry>& catalog,
                             long long max_order);

}  // namespace rue
