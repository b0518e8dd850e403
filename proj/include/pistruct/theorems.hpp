#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pistruct/factorisation.hpp"
#include "pistruct/pi.hpp"
#include "pistruct/structure.hpp"

namespace pistruct {

enum class ElementFilter { pi_prime_power, all_prime_power, pi_elements, all_elements };
enum class Scope { factor_a, factor_b, union_ab, whole_g, hall_union, hall_minus_center };
enum class Arithmetic { pi_number, pi_prime_number, pi_or_pi_prime, prime_power, coprime_to_p };

/// A class-size condition: every x passing `filter` in `scope` has |x^G|
/// satisfying `arithmetic`.
struct Hypothesis {
  ElementFilter filter = ElementFilter::all_elements;
  Scope scope = Scope::union_ab;
  Arithmetic arithmetic = Arithmetic::pi_number;
  std::uint64_t p = 0;  // for coprime_to_p
};

struct Witness {
  std::string element;
  Order class_size = 0;
  std::string reason;
};

struct HypothesisResult {
  bool holds = true;
  std::vector<Witness> witnesses;  // the first failing element, if any
};

enum class Abstention { none, precondition, resource };

struct Verdict {
  std::string statement_id;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool consistent = true;
  std::vector<Witness> witnesses;
  Abstention abstention = Abstention::none;
  std::string note;

  bool abstained() const { return abstention != Abstention::none; }
};

enum class CaseTag { pi_group, pi_prime_group, dolfi_frobenius, case_1a, case_1b, case_2, unclassified };
std::string_view to_string(CaseTag tag);

struct StructureCase {
  CaseTag tag = CaseTag::unclassified;
  Order kernel_order = 0;
  Order complement_order = 0;
  std::vector<Order> spectrum;
  Order stripped_order = 1;
  bool cap_bound = false;
  std::vector<std::uint64_t> primes;  // q (and r) for the prime-power cases
  std::string failure;                // a check that contradicts the case analysis
};

/// Per-factorisation cache of the derived data the verifiers share.
class Analysis {
 public:
  Analysis(Factorisation f, PiSet pi);

  const Factorisation& factorisation() const { return f_; }
  const PermGroup& G() const { return f_.G; }
  const PiSet& pi() const { return pi_; }
  const PiSet& pi_prime() const { return pi_prime_; }

  const ClassTable& classes();
  Order class_size(const Permutation& x);
  bool is_core();
  const CoreDecision& core_decision();
  bool is_pi_separable();
  unsigned pi_length();
  /// Some Hall pi-subgroup of G.
  const std::optional<Subgroup>& hall();
  /// Prefactorised Hall pi- and pi'-subgroups; requires pi-separability.
  const PrefactorisedHall& prefactorised_hall_pi();
  const PrefactorisedHall& prefactorised_hall_pi_prime();
  const Subgroup& o_pi();
  const Subgroup& o_pi_prime();
  bool is_pi_decomposable();

 private:
  Factorisation f_;
  PiSet pi_;
  PiSet pi_prime_;
  std::optional<ClassTable> classes_;
  std::optional<CoreDecision> core_;
  std::optional<PiSeries> series_;
  std::optional<std::optional<Subgroup>> hall_;
  std::optional<PrefactorisedHall> pre_pi_;
  std::optional<PrefactorisedHall> pre_pi_prime_;
  std::optional<Subgroup> o_pi_;
  std::optional<Subgroup> o_pi_prime_;
};

HypothesisResult eval_hypothesis(Analysis& an, const Hypothesis& h);
HypothesisResult eval_hypothesis(const Factorisation& f, const PiSet& pi, const Hypothesis& h);

/// Every class size is a pi-number or a pi'-number.
bool is_class_pi_separable_group(const PermGroup& g, const PiSet& pi);
/// Classifies G, after stripping abelian direct factors, into the
/// pi/pi'-group case, the Frobenius case, or unclassified.
StructureCase dolfi_case(const PermGroup& g, const PiSet& pi);
enum class Factor { A, B };
StructureCase teosilvio_factor_case(const Factorisation& f, const PiSet& pi, Factor which);
/// Case analysis for a factor whose pi-elements have prime-power G-class
/// sizes. `failure` is set when a claimed property does not hold.
StructureCase teoprime_factor_case(Analysis& an, Factor which);
StructureCase teoprime_factor_case(const Factorisation& f, const PiSet& pi, Factor which);

struct VerifyOptions {
  bool drop_core_precondition = false;
};

/// Stable identifiers accepted by verify_statement.
const std::vector<std::string>& statement_ids();
bool is_statement_id(std::string_view id);
/// Statements whose verdict compares both directions.
bool is_biconditional(std::string_view id);

/// Throws InvalidArgument for an unknown id. Resource limits and unmet
/// preconditions become abstentions.
Verdict verify_statement(std::string_view id, Analysis& an, const VerifyOptions& opts = {});
Verdict verify_statement(std::string_view id, const Factorisation& f, const PiSet& pi,
                         const VerifyOptions& opts = {});

/// Named boolean properties usable in EXPECT lines alongside statement ids.
const std::vector<std::string>& fact_ids();
bool is_fact_id(std::string_view id);
bool evaluate_fact(std::string_view id, Analysis& an);

}  // namespace pistruct
