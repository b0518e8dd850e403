#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pistruct/factorisation.hpp"
#include "pistruct/primes.hpp"
#include "pistruct/theorems.hpp"

namespace pistruct {

/// A line-oriented group description. G is the SUBGROUP labelled G when one
/// is declared and the group generated by every GEN otherwise; A and B
/// default to G.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::pair<std::string, Permutation>> generators;
  std::vector<std::pair<std::string, std::vector<std::string>>> subgroups;
  std::optional<PiSet> pi;
  /// Pins on statement hypotheses or on named facts, in file order.
  std::vector<std::pair<std::string, bool>> expected;

  const Permutation& generator(std::string_view name) const;
  const std::vector<std::string>* subgroup(std::string_view label) const;
};

/// Throws ParseError with a 1-based line number.
GroupSpec parse_group_spec(std::string_view text, std::string name = "");
std::string print_group_spec(const GroupSpec& spec);

struct ResolvedSpec {
  Factorisation factorisation;
  PiSet pi;
};

/// Builds the groups. `pi_override` wins over the PI line; one of them must be present.
ResolvedSpec resolve(const GroupSpec& spec, const std::optional<PiSet>& pi_override = std::nullopt);

enum class Provenance { paper_example, constructed, random };
std::string_view to_string(Provenance p);

struct CorpusCase {
  GroupSpec spec;
  Provenance provenance = Provenance::constructed;
  std::uint64_t seed = 0;
  std::string notes;
};

/// The eight worked examples, self-checked on construction.
std::vector<CorpusCase> build_paper_corpus();

struct PoolEntry {
  std::string name;
  PermGroup group;
  /// Direct factors as subgroups of `group`, when it was built as a product.
  std::vector<Subgroup> factors;
};

/// The groups random factorisations are drawn from.
std::vector<PoolEntry> constructor_pool(Order max_order);

/// Deterministic per seed. May return fewer than `count` cases if the pool
/// under `max_order` is too thin.
std::vector<CorpusCase> random_factorisations(Order max_order, std::size_t count, std::uint64_t seed);

struct ReportOptions {
  std::optional<PiSet> pi_override;
  VerifyOptions verify;
  /// Exit code 3 when more verdicts abstain than this.
  std::optional<std::size_t> max_abstain;
  bool check_expectations = true;
};

struct CaseVerdict {
  std::string case_name;
  Verdict verdict;
};

struct ExpectationCheck {
  std::string case_name;
  std::string id;
  bool expected = false;
  bool actual = false;
};

struct Report {
  std::vector<CaseVerdict> verdicts;
  std::vector<ExpectationCheck> mismatches;
  std::size_t expectations_checked = 0;
  std::size_t consistent = 0;
  std::size_t inconsistent = 0;
  std::size_t abstained = 0;
  int exit_code = 0;
};

/// Verdicts ordered by case name, then statement id.
Report run_report(const std::vector<CorpusCase>& cases, const std::vector<std::string>& statements,
                  const ReportOptions& opts = {});

std::string render_text(const Report& r);
/// One "case=... statement=... hypothesis=... conclusion=... consistent=... abstained=..." line per verdict.
std::string render_records(const Report& r);

}  // namespace pistruct
