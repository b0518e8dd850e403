#include "pistruct/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pistruct/error.hpp"
#include "pistruct/group_ops.hpp"
#include "pistruct/pi.hpp"
#include "pistruct/structure.hpp"

namespace pistruct {

const Permutation& GroupSpec::generator(std::string_view n) const {
  for (const auto& [name, perm] : generators)
    if (name == n) return perm;
  throw InvalidArgument("undeclared generator " + std::string(n));
}

const std::vector<std::string>* GroupSpec::subgroup(std::string_view label) const {
  for (const auto& [l, names] : subgroups)
    if (l == label) return &names;
  return nullptr;
}

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text, std::string name) {
  GroupSpec spec;
  spec.name = std::move(name);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool any_directive = false;
  std::set<std::string> gen_names, labels;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    auto fail = [&](const std::string& why) -> ParseError { return ParseError("line " + std::to_string(line_no) + ": " + why, line_no); };
    const std::string& d = words[0];
    if (!any_directive && d != "DEGREE") throw fail("expected DEGREE as the first directive");
    any_directive = true;
    if (d == "DEGREE") {
      if (spec.degree != 0) throw fail("duplicate DEGREE");
      if (words.size() != 2) throw fail("DEGREE takes one integer");
      try {
        std::size_t used = 0;
        long long v = std::stoll(words[1], &used);
        if (used != words[1].size() || v <= 0) throw fail("DEGREE must be a positive integer");
        spec.degree = static_cast<std::size_t>(v);
      } catch (const std::logic_error&) {
        throw fail("DEGREE must be a positive integer");
      }
    } else if (d == "GEN") {
      if (words.size() < 3) throw fail("GEN takes a name and a permutation");
      if (!valid_name(words[1])) throw fail("invalid generator name '" + words[1] + "'");
      if (!gen_names.insert(words[1]).second) throw fail("duplicate generator '" + words[1] + "'");
      std::string cycles;
      for (std::size_t i = 2; i < words.size(); ++i) cycles += words[i];
      try {
        spec.generators.emplace_back(words[1], parse_permutation(cycles, spec.degree));
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
    } else if (d == "SUBGROUP") {
      if (words.size() < 2) throw fail("SUBGROUP takes a label");
      if (!valid_name(words[1])) throw fail("invalid subgroup label '" + words[1] + "'");
      if (!labels.insert(words[1]).second) throw fail("duplicate subgroup '" + words[1] + "'");
      std::vector<std::string> names(words.begin() + 2, words.end());
      for (const auto& n : names)
        if (!gen_names.count(n)) throw fail("undeclared generator '" + n + "'");
      spec.subgroups.emplace_back(words[1], std::move(names));
    } else if (d == "PI") {
      if (spec.pi) throw fail("duplicate PI");
      if (words.size() != 2) throw fail("PI takes a comma-separated prime list");
      try {
        spec.pi = PiSet::parse(words[1]);
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
    } else if (d == "EXPECT") {
      if (words.size() != 3) throw fail("EXPECT takes an id and true|false");
      if (!is_statement_id(words[1]) && !is_fact_id(words[1])) throw fail("unknown statement or fact '" + words[1] + "'");
      if (words[2] != "true" && words[2] != "false") throw fail("expected true or false");
      spec.expected.emplace_back(words[1], words[2] == "true");
    } else {
      throw fail("unknown directive '" + d + "'");
    }
  }
  if (spec.degree == 0) throw ParseError("line 1: missing DEGREE", 1);
  return spec;
}

std::string print_group_spec(const GroupSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "# " + spec.name + "\n";
  out += "DEGREE " + std::to_string(spec.degree) + "\n";
  for (const auto& [name, perm] : spec.generators) out += "GEN " + name + " " + perm.to_string() + "\n";
  for (const auto& [label, names] : spec.subgroups) {
    out += "SUBGROUP " + label;
    for (const auto& n : names) out += " " + n;
    out += "\n";
  }
  if (spec.pi) out += "PI " + spec.pi->to_string() + "\n";
  for (const auto& [id, value] : spec.expected) out += "EXPECT " + id + (value ? " true\n" : " false\n");
  return out;
}

ResolvedSpec resolve(const GroupSpec& spec, const std::optional<PiSet>& pi_override) {
  auto build = [&](const std::vector<std::string>& names) {
    std::vector<Permutation> gens;
    for (const auto& n : names) gens.push_back(spec.generator(n));
    return PermGroup(spec.degree, std::move(gens));
  };
  std::vector<std::string> all;
  for (const auto& [n, p] : spec.generators) all.push_back(n);
  PermGroup g = build(spec.subgroup("G") ? *spec.subgroup("G") : all);
  Subgroup a = spec.subgroup("A") ? build(*spec.subgroup("A")) : g;
  Subgroup b = spec.subgroup("B") ? build(*spec.subgroup("B")) : g;
  std::optional<PiSet> pi = pi_override ? pi_override : spec.pi;
  if (!pi) throw InvalidArgument(spec.name + ": no PI line and no --pi given");
  return {make_factorisation(g, a, b), *pi};
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::paper_example: return "paper-example";
    case Provenance::constructed: return "constructed";
    case Provenance::random: return "random";
  }
  return "?";
}

namespace {

Permutation map_points(std::size_t degree, std::size_t offset, std::size_t n, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < n; ++i) img[offset + i] = static_cast<Point>(offset + f(i));
  return Permutation(std::move(img));
}

struct Certificate {
  Order g, a, b;
};

CorpusCase paper_case(std::string name, std::size_t degree, std::vector<std::pair<std::string, Permutation>> gens,
                      std::vector<std::pair<std::string, std::vector<std::string>>> subgroups, PiSet pi,
                      std::vector<std::pair<std::string, bool>> expected, std::string notes, Certificate cert) {
  CorpusCase c;
  c.spec.name = std::move(name);
  c.spec.degree = degree;
  c.spec.generators = std::move(gens);
  c.spec.subgroups = std::move(subgroups);
  c.spec.pi = std::move(pi);
  c.spec.expected = std::move(expected);
  c.provenance = Provenance::paper_example;
  c.notes = std::move(notes);
  auto r = resolve(c.spec);
  const auto& f = r.factorisation;
  if (f.G.order() != cert.g || f.A.order() != cert.a || f.B.order() != cert.b)
    throw Error("corpus self-check failed for " + c.spec.name + ": orders " + std::to_string(f.G.order()) + "/" +
                std::to_string(f.A.order()) + "/" + std::to_string(f.B.order()) + ", expected " + std::to_string(cert.g) +
                "/" + std::to_string(cert.a) + "/" + std::to_string(cert.b));
  return c;
}

Permutation P(const char* text, std::size_t degree) { return parse_permutation(text, degree); }

}  // namespace

std::vector<CorpusCase> build_paper_corpus() {
  std::vector<CorpusCase> out;

  out.push_back(paper_case("sym4-noncore", 4,
                           {{"a1", P("(1,3,2,4)", 4)}, {"a2", P("(1,2)(3,4)", 4)}, {"b1", P("(3,4)", 4)}, {"b2", P("(2,3,4)", 4)}},
                           {{"A", {"a1", "a2"}}, {"B", {"b1", "b2"}}}, PiSet{2},
                           {{"CORE-FACTORISATION", false}, {"SOLUBLE", true}, {"PI-SEPARABLE", true}},
                           "Sym(4) = AB with |A| = 4, |B| = 6; V4 is covered by neither factor", {24, 4, 6}));

  out.push_back(paper_case("sym4xC2-core", 6,
                           {{"a1", P("(1,2)(5,6)", 6)},
                            {"a2", P("(3,4)(5,6)", 6)},
                            {"a3", P("(1,3)(2,4)(5,6)", 6)},
                            {"b1", P("(2,3,4)", 6)},
                            {"b2", P("(3,4)", 6)},
                            {"b3", P("(5,6)", 6)}},
                           {{"A", {"a1", "a2", "a3"}}, {"B", {"b1", "b2", "b3"}}}, PiSet{2},
                           {{"CORE-FACTORISATION", true}, {"CORE-A-TRIVIAL", true}, {"CORE-B-SELF-CENTRALISING", false}},
                           "Sym(4) x <x> with x = (5,6); core_G(A) = 1 and core_G(B) = <x>", {48, 8, 12}));

  out.push_back(paper_case("wreath-sym3", 6,
                           {{"s", P("(1,2)", 6)},
                            {"t", P("(1,2,3)", 6)},
                            {"z", P("(1,4)(2,5)(3,6)", 6)},
                            {"a1", P("(2,3)", 6)},
                            {"a2", P("(4,5,6)", 6)},
                            {"a3", P("(5,6)", 6)},
                            {"b1", P("(1,2,3)(4,6,5)", 6)},
                            {"b2", P("(1,2,3)(4,6,5)", 6) * P("(1,4)(2,5)(3,6)", 6)}},
                           {{"G", {"s", "t", "z"}}, {"A", {"a1", "a2", "a3"}}, {"B", {"b1", "b2"}}}, PiSet{2},
                           {{"CORE-FACTORISATION", false}, {"B-SUBNORMAL", true}},
                           "Sym(3) wr C2 on 6 points, top z = (1,4)(2,5)(3,6), g^z expanded", {72, 12, 6}));

  auto c55 = semidirect_by_power_map(11, 3).group;
  {
    std::vector<std::pair<std::string, Permutation>> gens{{"s", P("(1,2)", 14)}, {"t", P("(1,2,3)", 14)}};
    for (std::size_t i = 0; i < c55.generators().size(); ++i)
      gens.emplace_back("c" + std::to_string(i + 1), embed(c55.generators()[i], 3, 14));
    out.push_back(paper_case("sym3x55", 14, std::move(gens), {}, PiSet{2, 3, 11},
                             {{"HALL-PI-ABELIAN", false},
                              {"PI-DECOMPOSABLE", false},
                              {"HYP-HALL-MINUS-CENTRE-PP", true},
                              {"LEM-BK-SUP", false}},
                             "Sym(3) x (C11 : C5), trivial factorisation", {330, 330, 330}));
  }

  {
    auto d8 = dihedral_group(4), d10 = dihedral_group(5);
    std::vector<std::pair<std::string, Permutation>> gens;
    std::vector<std::string> an, bn;
    for (std::size_t i = 0; i < d8.generators().size(); ++i) {
      gens.emplace_back("a" + std::to_string(i + 1), embed(d8.generators()[i], 0, 9));
      an.push_back(gens.back().first);
    }
    for (std::size_t i = 0; i < d10.generators().size(); ++i) {
      gens.emplace_back("b" + std::to_string(i + 1), embed(d10.generators()[i], 4, 9));
      bn.push_back(gens.back().first);
    }
    out.push_back(paper_case("d8xd10", 9, std::move(gens), {{"A", an}, {"B", bn}}, PiSet{2},
                             {{"THM-NONCENTRAL", true}, {"PI-DECOMPOSABLE", false}, {"CORE-FACTORISATION", true}},
                             "D8 x D10 as A x B", {80, 8, 10}));
  }

  {
    // C7 on points 1..7, C5 on points 8..12; one involution inverts both.
    auto t7 = map_points(12, 0, 7, [](std::size_t i) { return (i + 1) % 7; });
    auto m = map_points(12, 0, 7, [](std::size_t i) { return (2 * i) % 7; });
    auto t5 = map_points(12, 7, 5, [](std::size_t i) { return (i + 1) % 5; });
    auto inv = map_points(12, 0, 7, [](std::size_t i) { return (7 - i) % 7; }) *
               map_points(12, 7, 5, [](std::size_t i) { return (5 - i) % 5; });
    out.push_back(paper_case("order210", 12, {{"t7", t7}, {"m", m}, {"t5", t5}, {"inv", inv}},
                             {{"A", {"t7", "m"}}, {"B", {"t5", "inv"}}}, PiSet{3, 7},
                             {{"CORE-FACTORISATION", true},
                              {"CLASS-PI-SEP-FACTORISATION", false},
                              {"A-CLASS-PI-SEP", true},
                              {"B-CLASS-PI-SEP", true},
                              {"SOLUBLE", true}},
                             "(C7 : C3) x C5 extended by an involution inverting C7 and C5 and centralising C3",
                             {210, 21, 10}));
  }

  {
    auto a5 = alternating_group(5);
    auto b = semidirect_by_power_map(29, 16).group;
    std::vector<std::pair<std::string, Permutation>> gens;
    std::vector<std::string> an, bn;
    for (std::size_t i = 0; i < a5.generators().size(); ++i) {
      gens.emplace_back("a" + std::to_string(i + 1), embed(a5.generators()[i], 0, 34));
      an.push_back(gens.back().first);
    }
    for (std::size_t i = 0; i < b.generators().size(); ++i) {
      gens.emplace_back("b" + std::to_string(i + 1), embed(b.generators()[i], 5, 34));
      bn.push_back(gens.back().first);
    }
    out.push_back(paper_case("a5x203", 34, std::move(gens), {{"A", an}, {"B", bn}}, PiSet{2, 3, 5},
                             {{"CLASS-PI-SEP-FACTORISATION", true},
                              {"CLASS-PI-SEP-GROUP", false},
                              {"SOLUBLE", false},
                              {"HALL-PI-ABELIAN", false},
                              {"HALL-PIPRIME-ABELIAN", false}},
                             "Alt(5) x (C29 : C7) as A x B", {12180, 60, 203}));
  }

  {
    auto d10 = dihedral_group(5);
    std::vector<std::pair<std::string, Permutation>> gens{{"s", P("(1,2)", 8)}, {"t", P("(1,2,3)", 8)}};
    for (std::size_t i = 0; i < d10.generators().size(); ++i)
      gens.emplace_back("b" + std::to_string(i + 1), embed(d10.generators()[i], 3, 8));
    out.push_back(paper_case("final-example-substitute", 8, std::move(gens), {{"A", {"s", "t"}}, {"B", {"b1", "b2"}}},
                             PiSet{2, 3},
                             {{"THM-D", true}, {"HALL-PI-ABELIAN", false}, {"PI-DECOMPOSABLE", false}},
                             "Sym(3) x D10; stands in for a C5 acting on C6, where every such action is trivial",
                             {60, 6, 10}));
  }
  return out;
}

namespace {

PoolEntry product_entry(const std::string& name, const PermGroup& x, const PermGroup& y) {
  PermGroup g = direct_product(x, y);
  std::vector<Permutation> gx, gy;
  for (const auto& p : x.generators()) gx.push_back(embed(p, 0, g.degree()));
  for (const auto& p : y.generators()) gy.push_back(embed(p, x.degree(), g.degree()));
  return {name, g, {Subgroup(g.degree(), gx), Subgroup(g.degree(), gy)}};
}

}  // namespace

std::vector<PoolEntry> constructor_pool(Order max_order) {
  std::vector<PoolEntry> pool;
  auto add = [&](std::string name, PermGroup g) { pool.push_back({std::move(name), std::move(g), {}}); };
  auto s3 = symmetric_group(3), s4 = symmetric_group(4), a4 = alternating_group(4);
  auto d8 = dihedral_group(4), d10 = dihedral_group(5);
  auto sd = [](std::uint64_t n, std::uint64_t k) { return semidirect_by_power_map(n, k).group; };
  for (std::size_t n : {4, 6, 8, 9, 12}) add("C" + std::to_string(n), cyclic_group(n));
  for (std::size_t n = 3; n <= 15; ++n) add("D" + std::to_string(2 * n), dihedral_group(n));
  add("D40", dihedral_group(20));
  add("Sym3", s3);
  add("Sym4", s4);
  add("Alt4", a4);
  add("Alt5", alternating_group(5));
  add("Sym5", symmetric_group(5));
  add("C5:C4", sd(5, 2));
  add("C7:C3", sd(7, 2));
  add("C7:C6", sd(7, 3));
  add("C9:C6", sd(9, 2));
  add("C13:C3", sd(13, 3));
  add("C11:C5", sd(11, 3));
  add("C19:C3", sd(19, 7));
  add("C31:C5", sd(31, 2));
  add("C29:C7", sd(29, 16));
  add("C2wrC2", wreath_natural(cyclic_group(2), 2));
  add("C3wrC2", wreath_natural(cyclic_group(3), 2));
  add("C2wrC3", wreath_natural(cyclic_group(2), 3));
  add("Sym3wrC2", wreath_natural(s3, 2));
  add("C2wrC4", wreath_natural(cyclic_group(2), 4));
  add("Alt4wrC2", wreath_natural(a4, 2));
  pool.push_back(product_entry("Sym3xSym3", s3, s3));
  pool.push_back(product_entry("Sym3xC4", s3, cyclic_group(4)));
  pool.push_back(product_entry("Sym3xD10", s3, d10));
  pool.push_back(product_entry("D8xD10", d8, d10));
  pool.push_back(product_entry("D8xSym3", d8, s3));
  pool.push_back(product_entry("Sym4xC2", s4, cyclic_group(2)));
  pool.push_back(product_entry("Sym4xC3", s4, cyclic_group(3)));
  pool.push_back(product_entry("Alt4xC3", a4, cyclic_group(3)));
  pool.push_back(product_entry("Alt4xSym3", a4, s3));
  pool.push_back(product_entry("Alt4xD10", a4, d10));
  pool.push_back(product_entry("Sym4xSym3", s4, s3));
  pool.push_back(product_entry("D8xD8", d8, d8));
  pool.push_back(product_entry("Sym3x(C11:C5)", s3, sd(11, 3)));
  pool.push_back(product_entry("Sym3x(C7:C3)", s3, sd(7, 2)));
  pool.push_back(product_entry("(C7:C3)xC5", sd(7, 2), cyclic_group(5)));
  pool.push_back(product_entry("(C7:C3)xD10", sd(7, 2), d10));
  pool.push_back(product_entry("(C13:C3)xSym3", sd(13, 3), s3));
  pool.push_back(product_entry("Alt5xC2", alternating_group(5), cyclic_group(2)));
  pool.push_back(product_entry("Sym4xD10", s4, d10));
  pool.push_back(product_entry("(C5:C4)xSym3", sd(5, 2), s3));
  pool.push_back(product_entry("D10xD10", d10, d10));
  pool.push_back(product_entry("(C7:C6)xSym3", sd(7, 3), s3));
  std::erase_if(pool, [&](const PoolEntry& e) { return e.group.order() > max_order; });
  return pool;
}

namespace {

// Portable across standard libraries: only raw engine output is used.
struct Rng {
  std::mt19937_64 engine;
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
};

Subgroup random_subgroup(const PermGroup& g, Rng& rng, std::size_t max_gens) {
  const auto& els = g.elements();
  std::size_t k = 1 + rng.below(max_gens);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(els[rng.below(els.size())]);
  return Subgroup(g.degree(), std::move(gens));
}

PiSet random_pi(Order order, Rng& rng) {
  auto primes = prime_divisors(order);
  if (primes.size() == 1) return PiSet{primes[0]};
  for (;;) {
    std::vector<std::uint64_t> chosen;
    for (auto p : primes)
      if (rng.below(2)) chosen.push_back(p);
    if (!chosen.empty() && chosen.size() < primes.size()) return PiSet(chosen);
  }
}

Subgroup random_sylow_or_normaliser(const PermGroup& g, Rng& rng) {
  auto primes = prime_divisors(g.order());
  Subgroup p = sylow_subgroup(g, primes[rng.below(primes.size())]);
  return rng.below(2) ? p : normaliser(g, p);
}

std::optional<std::pair<Subgroup, Subgroup>> sample_pair(const PoolEntry& e, const PiSet& pi, Rng& rng) {
  const PermGroup& g = e.group;
  const auto& els = g.elements();
  std::size_t strategy = rng.below(8);
  for (int attempt = 0; attempt < 80; ++attempt) {
    Subgroup a, b;
    switch (strategy) {
      case 0:
        a = random_subgroup(g, rng, 3);
        b = random_subgroup(g, rng, 3);
        break;
      case 1: {
        auto h = hall_subgroup(g, pi);
        if (!h) return std::nullopt;
        a = *h;
        b = rng.below(2) ? random_subgroup(g, rng, 2) : hall_subgroup(g, pi.complement_within(g.order())).value_or(g);
        break;
      }
      case 2: {
        Permutation x = els[rng.below(els.size())];
        a = normal_closure(g, std::span<const Permutation>(&x, 1));
        b = random_subgroup(g, rng, 2);
        break;
      }
      case 3:
        a = g;
        b = random_subgroup(g, rng, 1);
        break;
      case 4:
      case 5:
        a = random_sylow_or_normaliser(g, rng);
        b = rng.below(2) ? random_sylow_or_normaliser(g, rng) : random_subgroup(g, rng, 2);
        break;
      case 6: {
        a = random_subgroup(g, rng, 2);
        b = rng.below(2) ? random_sylow_or_normaliser(g, rng) : random_subgroup(g, rng, 2);
        if (!core(g, a).is_trivial() || !core(g, b).is_trivial()) continue;
        break;
      }
      default: {
        if (e.factors.empty()) {
          strategy = 0;
          continue;
        }
        auto ga = e.factors[0].generators(), gb = e.factors[1].generators();
        if (rng.below(2)) ga.push_back(els[rng.below(els.size())]);
        if (rng.below(2)) gb.push_back(els[rng.below(els.size())]);
        a = Subgroup(g.degree(), ga);
        b = Subgroup(g.degree(), gb);
      }
    }
    if (rng.below(2)) std::swap(a, b);
    if (product_order(a, b) == g.order()) return std::make_pair(a, b);
  }
  return std::nullopt;
}

GroupSpec spec_for(const std::string& name, const PermGroup& g, const Subgroup& a, const Subgroup& b, const PiSet& pi) {
  GroupSpec s;
  s.name = name;
  s.degree = g.degree();
  auto add = [&](const std::string& label, const std::vector<Permutation>& gens) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      names.push_back(label + std::to_string(i + 1));
      s.generators.emplace_back(names.back(), gens[i]);
    }
    s.subgroups.emplace_back(label == "g" ? "G" : label == "a" ? "A" : "B", std::move(names));
  };
  add("g", g.generators());
  add("a", a.generators());
  add("b", b.generators());
  s.pi = pi;
  return s;
}

}  // namespace

std::vector<CorpusCase> random_factorisations(Order max_order, std::size_t count, std::uint64_t seed) {
  std::vector<CorpusCase> out;
  if (count == 0) return out;
  auto pool = constructor_pool(max_order);
  if (pool.empty()) return out;
  Rng rng{std::mt19937_64(seed)};
  for (std::size_t tries = 0; out.size() < count && tries < 20 * count; ++tries) {
    const PoolEntry& e = pool[rng.below(pool.size())];
    PiSet pi = random_pi(e.group.order(), rng);
    auto pair = sample_pair(e, pi, rng);
    if (!pair) continue;
    CorpusCase c;
    std::string name = "rand-" + std::to_string(seed) + "-" + std::to_string(out.size()) + "-" + e.name;
    c.spec = spec_for(name, e.group, pair->first, pair->second, pi);
    c.provenance = Provenance::random;
    c.seed = seed;
    c.notes = e.name;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pistruct
