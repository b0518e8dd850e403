#include <algorithm>
#include <map>
#include <sstream>

#include "pistruct/corpus.hpp"

namespace pistruct {

Report run_report(const std::vector<CorpusCase>& cases, const std::vector<std::string>& statements,
                  const ReportOptions& opts) {
  Report r;
  std::vector<const CorpusCase*> order;
  for (const auto& c : cases) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const CorpusCase* a, const CorpusCase* b) { return a->spec.name < b->spec.name; });
  std::vector<std::string> ids = statements;
  std::sort(ids.begin(), ids.end());

  for (const CorpusCase* c : order) {
    ResolvedSpec spec = resolve(c->spec, opts.pi_override);
    Analysis an(spec.factorisation, spec.pi);
    std::map<std::string, Verdict, std::less<>> done;
    for (const auto& id : ids) {
      Verdict v = verify_statement(id, an, opts.verify);
      if (v.abstained())
        ++r.abstained;
      else if (v.consistent)
        ++r.consistent;
      else
        ++r.inconsistent;
      done.emplace(id, v);
      r.verdicts.push_back({c->spec.name, std::move(v)});
    }
    if (!opts.check_expectations) continue;
    for (const auto& [id, expected] : c->spec.expected) {
      bool actual;
      if (is_statement_id(id)) {
        auto it = done.find(id);
        if (it == done.end()) it = done.emplace(id, verify_statement(id, an, opts.verify)).first;
        actual = !it->second.abstained() && it->second.hypothesis_holds;
      } else {
        actual = evaluate_fact(id, an);
      }
      ++r.expectations_checked;
      if (actual != expected) r.mismatches.push_back({c->spec.name, id, expected, actual});
    }
  }
  if (r.inconsistent > 0 || !r.mismatches.empty())
    r.exit_code = 1;
  else if (opts.max_abstain && r.abstained > *opts.max_abstain)
    r.exit_code = 3;
  return r;
}

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& [name, v] : r.verdicts) {
    out << name << "  " << v.statement_id << "  ";
    if (v.abstained()) {
      out << "ABSTAIN (" << (v.abstention == Abstention::resource ? "resource" : "precondition") << ": " << v.note << ")\n";
      continue;
    }
    out << "hypothesis=" << yn(v.hypothesis_holds) << " conclusion=" << yn(v.conclusion_holds) << "  "
        << (v.consistent ? "consistent" : "INCONSISTENT");
    if (!v.note.empty()) out << "  [" << v.note << "]";
    out << "\n";
    for (const auto& w : v.witnesses)
      out << "    witness " << w.element << " |x^G|=" << w.class_size << "  " << w.reason << "\n";
  }
  for (const auto& m : r.mismatches)
    out << "EXPECT mismatch: " << m.case_name << " " << m.id << " expected " << yn(m.expected) << " got " << yn(m.actual) << "\n";
  out << "summary: consistent=" << r.consistent << " inconsistent=" << r.inconsistent << " abstained=" << r.abstained
      << " expectations=" << r.expectations_checked << " mismatches=" << r.mismatches.size() << "\n";
  return out.str();
}

std::string render_records(const Report& r) {
  std::ostringstream out;
  for (const auto& [name, v] : r.verdicts)
    out << "case=" << name << " statement=" << v.statement_id << " hypothesis=" << yn(v.hypothesis_holds)
        << " conclusion=" << yn(v.conclusion_holds) << " consistent=" << yn(v.consistent) << " abstained=" << yn(v.abstained())
        << "\n";
  return out.str();
}

}  // namespace pistruct
