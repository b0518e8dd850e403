#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pistruct/corpus.hpp"
#include "pistruct/error.hpp"
#include "pistruct/pi.hpp"
#include "pistruct/structure.hpp"

using namespace pistruct;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GroupSpec load_spec(const std::string& path) {
  return parse_group_spec(read_file(path), std::filesystem::path(path).stem().string());
}

std::optional<PiSet> pi_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return PiSet::parse(text);
}

std::vector<std::string> statement_list(const std::string& text) {
  if (text.empty() || text == "all") return statement_ids();
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string id;
  while (std::getline(in, id, ','))
    if (!id.empty()) {
      if (!is_statement_id(id)) throw InvalidArgument("unknown statement id " + id);
      out.push_back(id);
    }
  return out;
}

const char* yn(bool b) { return b ? "true" : "false"; }

std::string sizes(const ClassTable& t) {
  std::string s;
  for (auto n : t.size_spectrum()) s += (s.empty() ? "" : ",") + std::to_string(n);
  return "{" + s + "}";
}

void print_chain(const std::vector<Subgroup>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i)
    std::cout << "  " << i << ": order " << chain[i].order() << "  " << chain[i].to_string() << "\n";
}

int analyze(const std::string& file, const std::string& pi_text) {
  auto spec = load_spec(file);
  auto r = resolve(spec, pi_option(pi_text));
  const auto& f = r.factorisation;
  Analysis an(f, r.pi);
  std::cout << "case " << spec.name << "\n";
  std::cout << "|G| = " << f.G.order() << "  |A| = " << f.A.order() << "  |B| = " << f.B.order()
            << "  |A∩B| = " << f.intersection_order << "\n";
  std::cout << "pi = {" << r.pi.to_string() << "}\n";
  std::cout << "classes " << an.classes().classes().size() << "  sizes " << sizes(an.classes()) << "\n";
  std::cout << "soluble " << yn(is_soluble(f.G)) << "  nilpotent " << yn(is_nilpotent(f.G)) << "\n";
  std::cout << "|Z(G)| = " << center(f.G).order() << "  |G'| = " << derived_subgroup(f.G).order()
            << "  |F(G)| = " << fitting_subgroup(f.G).order() << "\n";
  std::cout << "pi-separable " << yn(an.is_pi_separable());
  if (an.is_pi_separable()) std::cout << "  pi-length " << an.pi_length();
  std::cout << "\n|O_pi| = " << an.o_pi().order() << "  |O_pi'| = " << an.o_pi_prime().order()
            << "  pi-decomposable " << yn(an.is_pi_decomposable()) << "\n";
  try {
    const auto& h = an.hall();
    if (h)
      std::cout << "Hall pi-subgroup order " << h->order() << " abelian " << yn(h->is_abelian()) << "\n";
    else
      std::cout << "no Hall pi-subgroup\n";
  } catch (const ResourceLimit& e) {
    std::cout << "Hall search capped: " << e.what() << "\n";
  }
  std::cout << "core-factorisation " << yn(an.is_core()) << "\n";
  print_chain(an.core_decision().series.chain);
  for (const auto& id : fact_ids()) {
    try {
      std::cout << "fact " << id << " " << yn(evaluate_fact(id, an)) << "\n";
    } catch (const ResourceLimit&) {
      std::cout << "fact " << id << " capped\n";
    }
  }
  return 0;
}

int check(const std::string& id, const std::string& file, const std::string& pi_text, bool drop_core) {
  if (!is_statement_id(id)) throw InvalidArgument("unknown statement id " + id);
  auto spec = load_spec(file);
  auto r = resolve(spec, pi_option(pi_text));
  CorpusCase c{spec, Provenance::constructed, 0, ""};
  ReportOptions opts;
  opts.pi_override = r.pi;
  opts.verify.drop_core_precondition = drop_core;
  opts.check_expectations = false;
  Report rep = run_report({c}, {id}, opts);
  std::cout << render_text(rep);
  return rep.exit_code;
}

int series(const std::string& file, const std::string& type, const std::string& pi_text) {
  auto spec = load_spec(file);
  if (type == "chief") {
    auto g = resolve(spec, pi_option(pi_text).value_or(PiSet{2})).factorisation.G;
    print_chain(chief_series(g).chain);
    return 0;
  }
  if (type == "coreA" || type == "coreB") {
    auto f = resolve(spec, pi_option(pi_text).value_or(PiSet{2})).factorisation;
    auto s = core_series(f, type == "coreA" ? CoreStart::a_first : CoreStart::b_first);
    for (std::size_t i = 0; i < s.terms.size(); ++i) std::cout << "  term " << i << ": order " << s.terms[i].order() << "\n";
    std::cout << "terminated_at_G " << yn(s.terminated_at_G) << "\n";
    auto len = core_length(f, type == "coreA" ? CoreStart::a_first : CoreStart::b_first);
    std::cout << "core-length " << (len ? std::to_string(*len) : "none") << "\n";
    return 0;
  }
  if (type == "upper-pi") {
    auto r = resolve(spec, pi_option(pi_text));
    auto s = upper_pi_series(r.factorisation.G, r.pi);
    for (std::size_t i = 0; i < s.chain.size(); ++i) {
      std::cout << "  " << i << ": order " << s.chain[i].order();
      if (i > 0) std::cout << "  " << (s.labels[i - 1] == PiLabel::pi ? "pi" : "pi'");
      std::cout << "\n";
    }
    std::cout << "reaches G " << yn(s.reaches_group);
    if (s.reaches_group) std::cout << "  pi-length " << s.pi_length;
    std::cout << "\n";
    return 0;
  }
  throw InvalidArgument("unknown series type " + type);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pistruct: factorised groups, class sizes and pi-structure"};
  app.require_subcommand(1);

  std::string file, pi_text, id, type, statements, filter, format = "text", out_dir, candidates;
  std::vector<std::string> extra_files;
  bool drop_core = false;
  std::size_t max_abstain = 0;
  Order max_order = 200;
  std::size_t count = 10;
  std::uint64_t seed = 0;

  auto* a = app.add_subcommand("analyze", "structural report for a group spec file");
  a->add_option("FILE", file)->required();
  a->add_option("--pi", pi_text);

  auto* c = app.add_subcommand("check", "verify one statement on a group spec file");
  c->add_option("STATEMENT_ID", id)->required();
  c->add_option("FILE", file)->required();
  c->add_option("--pi", pi_text);
  c->add_flag("--drop-core-precondition", drop_core);

  auto* corpus = app.add_subcommand("corpus", "worked example corpus");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "verify statements and EXPECT pins over the corpus");
  run->add_option("--filter", filter, "only cases whose name contains this");
  run->add_option("--statements", statements, "comma-separated ids or 'all'");
  auto* max_abstain_opt = run->add_option("--max-abstain", max_abstain);
  run->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
  run->add_option("--file", extra_files, "extra spec files; a file named like a corpus case replaces it");
  run->add_option("--pi", pi_text);
  run->add_flag("--drop-core-precondition", drop_core);
  auto* exp = corpus->add_subcommand("export", "write the corpus as spec files");
  exp->add_option("DIR", out_dir)->required();

  auto* search = app.add_subcommand("search", "random factorisations");
  search->add_option("--max-order", max_order)->required();
  search->add_option("--count", count)->required();
  search->add_option("--seed", seed)->required();
  search->add_option("--statements", statements)->required();
  search->add_flag("--drop-core-precondition", drop_core);
  search->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
  search->add_option("--candidates", candidates, "directory for spec files of inconsistent cases");

  auto* ser = app.add_subcommand("series", "print a series");
  ser->add_option("FILE", file)->required();
  ser->add_option("--type", type)->required()->check(CLI::IsMember({"chief", "coreA", "coreB", "upper-pi"}));
  ser->add_option("--pi", pi_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*a) return analyze(file, pi_text);
    if (*c) return check(id, file, pi_text, drop_core);
    if (*ser) return series(file, type, pi_text);
    if (*exp) {
      std::filesystem::create_directories(out_dir);
      for (const auto& k : build_paper_corpus()) {
        std::ofstream out(std::filesystem::path(out_dir) / (k.spec.name + ".spec"), std::ios::binary);
        out << "# " << to_string(k.provenance) << ": " << k.notes << "\n" << print_group_spec(k.spec);
      }
      return 0;
    }
    ReportOptions opts;
    opts.pi_override = pi_option(pi_text);
    opts.verify.drop_core_precondition = drop_core;
    std::vector<CorpusCase> cases;
    if (*run) {
      if (*max_abstain_opt) opts.max_abstain = max_abstain;
      for (auto& k : build_paper_corpus())
        if (filter.empty() || k.spec.name.find(filter) != std::string::npos) cases.push_back(std::move(k));
      for (const auto& path : extra_files) {
        CorpusCase k{load_spec(path), Provenance::constructed, 0, path};
        std::erase_if(cases, [&](const CorpusCase& old) { return old.spec.name == k.spec.name; });
        cases.push_back(std::move(k));
      }
    } else {
      cases = random_factorisations(max_order, count, seed);
      opts.check_expectations = false;
      std::cerr << "generated " << cases.size() << " factorisations\n";
    }
    Report rep = run_report(cases, statement_list(statements), opts);
    std::cout << (format == "records" ? render_records(rep) : render_text(rep));
    if (*run) {
      for (const auto& m : rep.mismatches)
        std::cerr << "mismatch in case " << m.case_name << ": " << m.id << "\n";
    }
    if (*search && !candidates.empty() && rep.inconsistent > 0) {
      std::filesystem::create_directories(candidates);
      for (const auto& k : cases) {
        bool bad = std::any_of(rep.verdicts.begin(), rep.verdicts.end(), [&](const CaseVerdict& v) {
          return v.case_name == k.spec.name && !v.verdict.abstained() && !v.verdict.consistent;
        });
        if (!bad) continue;
        std::ofstream out(std::filesystem::path(candidates) / (k.spec.name + ".spec"), std::ios::binary);
        out << print_group_spec(k.spec);
      }
    }
    return rep.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
