#include "pistruct/corpus.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "pistruct/error.hpp"

using namespace pistruct;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t error_line(std::string_view text) {
  try {
    parse_group_spec(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST(GroupSpec, ParsesSym4File) {
  auto spec = parse_group_spec(slurp(PISTRUCT_DATA_DIR "/sym4-noncore.spec"), "sym4");
  EXPECT_EQ(spec.degree, 4u);
  ASSERT_NE(spec.subgroup("A"), nullptr);
  EXPECT_EQ(spec.subgroup("A")->size(), 2u);
  EXPECT_EQ(spec.subgroup("B")->size(), 2u);
  EXPECT_EQ(spec.subgroup("G"), nullptr);
  ASSERT_TRUE(spec.pi.has_value());
  EXPECT_EQ(*spec.pi, PiSet{2});
  EXPECT_EQ(spec.expected.size(), 2u);
  auto r = resolve(spec);
  EXPECT_EQ(r.factorisation.G.order(), 24u);
}

TEST(GroupSpec, Errors) {
  EXPECT_EQ(error_line("GEN a (1,2)\n"), 1u);
  EXPECT_EQ(error_line("# nothing\n"), 1u);
  EXPECT_EQ(error_line("DEGREE 3\nGEN a (1,2)\nPI 4\n"), 3u);
  EXPECT_EQ(error_line("DEGREE 3\nGEN a (1,2)\nSUBGROUP A b\n"), 3u);
  EXPECT_EQ(error_line("DEGREE 3\nGEN a (1,4)\n"), 2u);
  EXPECT_EQ(error_line("DEGREE 3\nGEN 1a (1,2)\n"), 2u);
  EXPECT_EQ(error_line("DEGREE 3\nGEN a (1,2)\nGEN a (2,3)\n"), 3u);
  EXPECT_EQ(error_line("DEGREE 3\nEXPECT THM-Q true\n"), 2u);
  EXPECT_EQ(error_line("DEGREE 3\nEXPECT THM-A1 maybe\n"), 2u);
  EXPECT_EQ(error_line("DEGREE 3\nFROB 2\n"), 2u);
  EXPECT_EQ(error_line("DEGREE x\n"), 1u);
}

TEST(GroupSpec, ResolveNeedsPi) {
  auto spec = parse_group_spec("DEGREE 3\nGEN a (1,2,3)\n");
  EXPECT_THROW(resolve(spec), InvalidArgument);
  EXPECT_EQ(resolve(spec, PiSet{3}).factorisation.G.order(), 3u);
}

TEST(GroupSpec, RoundTripOnCorpus) {
  auto cases = build_paper_corpus();
  auto random = random_factorisations(200, 20, 4);
  cases.insert(cases.end(), random.begin(), random.end());
  for (const auto& c : cases) {
    std::string printed = print_group_spec(c.spec);
    GroupSpec again = parse_group_spec(printed, c.spec.name);
    EXPECT_EQ(print_group_spec(again), printed);
    EXPECT_EQ(again.expected, c.spec.expected);
  }
}

TEST(PaperCorpus, ShapeAndOrders) {
  auto cases = build_paper_corpus();
  ASSERT_EQ(cases.size(), 8u);
  EXPECT_EQ(cases[0].spec.name, "sym4-noncore");
  EXPECT_EQ(resolve(cases[0].spec).factorisation.G.order(), 24u);
  for (const auto& c : cases) {
    EXPECT_EQ(c.provenance, Provenance::paper_example);
    EXPECT_FALSE(c.notes.empty());
    EXPECT_FALSE(c.spec.expected.empty());
    if (c.spec.name == "a5x203") EXPECT_EQ(resolve(c.spec).factorisation.G.order(), 12180u);
  }
}

TEST(RandomCorpus, DeterministicAndCertified) {
  EXPECT_TRUE(random_factorisations(200, 0, 0).empty());
  auto first = random_factorisations(200, 10, 0);
  auto second = random_factorisations(200, 10, 0);
  ASSERT_EQ(first.size(), 10u);
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(print_group_spec(first[i].spec), print_group_spec(second[i].spec));
  auto other = random_factorisations(200, 10, 1);
  bool differs = false;
  for (std::size_t i = 0; i < other.size(); ++i) differs = differs || print_group_spec(first[i].spec) != print_group_spec(other[i].spec);
  EXPECT_TRUE(differs);
  for (const auto& c : random_factorisations(300, 60, 9)) {
    auto f = resolve(c.spec).factorisation;
    // Independent certificate: count distinct products ab.
    std::set<Permutation> products;
    for (const auto& a : f.A.elements())
      for (const auto& b : f.B.elements()) products.insert(a * b);
    EXPECT_EQ(products.size(), f.G.order());
    EXPECT_LE(f.G.order(), 300u);
  }
}

TEST(Report, ExitCodesAndOrdering) {
  auto cases = build_paper_corpus();
  std::vector<CorpusCase> small{cases[2], cases[0]};
  Report r = run_report(small, {"THM-A1", "COR-C"});
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_EQ(r.verdicts.size(), 4u);
  EXPECT_EQ(r.verdicts[0].case_name, "sym4-noncore");
  EXPECT_EQ(r.verdicts[0].verdict.statement_id, "COR-C");
  EXPECT_EQ(r.verdicts[3].case_name, "wreath-sym3");

  ReportOptions strict;
  strict.max_abstain = 0;
  EXPECT_EQ(run_report(small, {"THM-A1"}, strict).exit_code, 3);

  small[1].spec.expected = {{"CORE-FACTORISATION", true}};
  Report bad = run_report(small, {"COR-C"});
  EXPECT_EQ(bad.exit_code, 1);
  ASSERT_EQ(bad.mismatches.size(), 1u);
  EXPECT_EQ(bad.mismatches[0].case_name, "sym4-noncore");

  std::string records = render_records(r);
  EXPECT_NE(records.find("case=sym4-noncore statement=THM-A1 hypothesis=false conclusion=false consistent=true abstained=true"),
            std::string::npos);
}
