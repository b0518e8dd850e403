#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pistruct/error.hpp"
#include "pistruct/pi.hpp"
#include "pistruct/small_group.hpp"
#include "pistruct/theorems.hpp"

namespace pistruct {

namespace {

Witness note_witness(std::string reason) { return {"()", 1, std::move(reason)}; }

void abstain(Verdict& v, Abstention a, std::string note) {
  v.abstention = a;
  v.note = std::move(note);
  v.hypothesis_holds = v.conclusion_holds = false;
  v.consistent = true;
  v.witnesses.clear();
}

// Fills the verdict for "hypothesis implies conclusion".
void implication(Verdict& v, const HypothesisResult& hyp, bool concl, std::string failure) {
  v.hypothesis_holds = hyp.holds;
  v.conclusion_holds = concl;
  v.consistent = !hyp.holds || concl;
  if (!v.consistent) v.witnesses.push_back(note_witness(std::move(failure)));
}

void implication(Verdict& v, bool hyp, bool concl, std::string failure) {
  implication(v, HypothesisResult{hyp, {}}, concl, std::move(failure));
}

void biconditional(Verdict& v, const HypothesisResult& hyp, bool concl, std::string failure) {
  v.hypothesis_holds = hyp.holds;
  v.conclusion_holds = concl;
  v.consistent = hyp.holds == concl;
  if (v.consistent) return;
  if (!hyp.holds)
    v.witnesses = hyp.witnesses;
  else
    v.witnesses.push_back(note_witness(std::move(failure)));
}

// Marks an extra claim that must hold regardless of the verdict direction.
void require(Verdict& v, bool ok, std::string failure) {
  if (ok) return;
  v.consistent = false;
  v.witnesses.push_back(note_witness(std::move(failure)));
}

Hypothesis hyp(ElementFilter f, Scope s, Arithmetic a, std::uint64_t p = 0) { return {f, s, a, p}; }

bool centralises(const Subgroup& x, const Subgroup& y) {
  for (const auto& a : x.generators())
    for (const auto& b : y.generators())
      if (a * b != b * a) return false;
  return true;
}

Subgroup factor_of(const Factorisation& f, Factor which) { return which == Factor::A ? f.A : f.B; }

std::string factor_name(Factor which) { return which == Factor::A ? "A" : "B"; }

// Smallest subgroup containing G \ H, grown one element at a time.
bool complement_generates(const PermGroup& g, const Subgroup& h) {
  Subgroup k = Subgroup::trivial(g.degree());
  for (const auto& x : g.elements()) {
    if (h.contains(x) || k.contains(x)) continue;
    auto gens = k.generators();
    gens.push_back(x);
    k = Subgroup(g.degree(), std::move(gens));
    if (k.order() == g.order()) return true;
  }
  return k.order() == g.order();
}

struct Dichotomy {
  bool in_center[2] = {false, false};
  bool centralises_all[2] = {false, false};
  Subgroup part[2];
};

Dichotomy dichotomy(Analysis& an) {
  Dichotomy d;
  const auto& f = an.factorisation();
  const Subgroup& h = an.prefactorised_hall_pi().H;
  Subgroup zh = center(h);
  auto conj = hall_conjugates(f.G, an.pi_prime(), an.prefactorised_hall_pi_prime().H);
  for (int i = 0; i < 2; ++i) {
    d.part[i] = intersect(h, i == 0 ? f.A : f.B);
    d.in_center[i] = d.part[i].is_subgroup_of(zh);
    d.centralises_all[i] =
        std::all_of(conj.begin(), conj.end(), [&](const Subgroup& fc) { return centralises(d.part[i], fc); });
  }
  return d;
}

// The per-factor consequences shared by the two dichotomy theorems.
void dichotomy_consequences(Verdict& v, Analysis& an, const Dichotomy& d) {
  const auto& f = an.factorisation();
  for (int i = 0; i < 2; ++i) {
    const Subgroup& x = i == 0 ? f.A : f.B;
    std::string name = i == 0 ? "A" : "B";
    if (d.in_center[i]) require(v, pi_length(x, an.pi()) <= 1, "H∩" + name + " central in H but pi-length of " + name + " exceeds 1");
    if (d.centralises_all[i])
      require(v, is_pi_decomposable(x, an.pi()), "H∩" + name + " centralises every Hall pi'-subgroup but " + name + " is not pi-decomposable");
  }
}

bool all_sizes(Analysis& an, const Subgroup& x, const std::function<bool(Order)>& ok) {
  for (const auto& e : x.elements())
    if (!ok(an.class_size(e))) return false;
  return true;
}

using Verifier = std::function<void(Analysis&, Verdict&, const VerifyOptions&)>;

void thm_a(Analysis& an, Verdict& v, const VerifyOptions& opts, bool all_prime_power) {
  if (!opts.drop_core_precondition && !an.is_core()) return abstain(v, Abstention::precondition, "not a core-factorisation");
  if (!an.hall()) return abstain(v, Abstention::precondition, "no Hall pi-subgroup");
  auto h = eval_hypothesis(an, hyp(all_prime_power ? ElementFilter::all_prime_power : ElementFilter::pi_prime_power,
                                   Scope::union_ab, Arithmetic::pi_number));
  bool concl = an.is_pi_decomposable();
  if (all_prime_power) concl = concl && an.o_pi_prime().is_abelian();
  biconditional(v, h, concl, all_prime_power ? "not pi-decomposable with abelian Hall pi'-subgroup" : "not pi-decomposable");
}

void cor_zgs(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.hall()) return abstain(v, Abstention::precondition, "no Hall pi-subgroup");
  auto h = eval_hypothesis(an, hyp(ElementFilter::pi_prime_power, Scope::whole_g, Arithmetic::pi_number));
  biconditional(v, h, an.is_pi_decomposable(), "not pi-decomposable");
}

void prop_piprime(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.is_pi_separable()) return abstain(v, Abstention::precondition, "not pi-separable");
  auto h = eval_hypothesis(an, hyp(ElementFilter::pi_prime_power, Scope::union_ab, Arithmetic::pi_prime_number));
  bool abelian = an.hall()->is_abelian();
  biconditional(v, h, abelian, "Hall pi-subgroup is not abelian");
  if (h.holds) require(v, an.pi_length() <= 1, "pi-length exceeds 1");
}

void prop_pprime(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.is_pi_separable()) return abstain(v, Abstention::precondition, "not pi-separable");
  const auto& g = an.G();
  Subgroup n = normaliser(g, *an.hall());
  bool any = false, all = true;
  std::string failure;
  for (auto p : prime_divisors(g.order())) {
    auto h = eval_hypothesis(an, hyp(ElementFilter::pi_prime_power, Scope::union_ab, Arithmetic::coprime_to_p, p));
    if (!h.holds) continue;
    any = true;
    if (p_part(n.order(), p) != p_part(g.order(), p)) {
      all = false;
      failure = "no Sylow " + std::to_string(p) + "-subgroup normalises a Hall pi-subgroup";
    }
  }
  implication(v, any, all, failure);
}

void lem_gen(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& f = an.factorisation();
  const auto& g = f.G;
  std::vector<Subgroup> named{f.A, f.B, intersect(f.A, f.B), center(g), derived_subgroup(g)};
  bool concl = true;
  std::string failure;
  auto check = [&](const Subgroup& h) {
    if (h.order() == g.order() || !concl) return;
    if (!complement_generates(g, h)) {
      concl = false;
      failure = "G \\ H does not generate G for H = " + h.to_string();
    }
  };
  for (const auto& h : named) check(h);
  if (g.order() <= 500) {
    try {
      SmallGroup sg(g);
      for (const auto& m : sg.subgroups([](const Permutation&) { return true; }, g.order())) {
        if (SmallGroup::count(m) == g.order()) continue;
        std::vector<std::size_t> gens;
        auto closure = sg.generate(gens);
        for (std::size_t i = 0; i < m.size() && SmallGroup::count(closure) < g.order(); ++i)
          if (!m[i] && !closure[i]) {
            gens.push_back(i);
            closure = sg.generate(gens);
          }
        if (SmallGroup::count(closure) != g.order()) {
          concl = false;
          failure = "G \\ H does not generate G for H = " + sg.subgroup_of(m).to_string();
          break;
        }
      }
    } catch (const ResourceLimit&) {
      v.note = "exhaustive subgroup search capped; named subgroups only";
    }
  }
  implication(v, !g.is_trivial(), concl, failure);
}

void lem_bk_sup(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& hall = an.hall();
  if (!hall || hall->is_abelian()) return implication(v, false, an.is_pi_decomposable(), "");
  Subgroup z = center(*hall);
  HypothesisResult h;
  for (const auto& x : hall->elements()) {
    if (z.contains(x)) continue;
    Order n = an.class_size(x);
    if (!an.pi().is_pi_number(n)) {
      h.holds = false;
      h.witnesses.push_back({x.to_string(), n, "class size not a pi-number"});
      break;
    }
  }
  implication(v, h, an.is_pi_decomposable(), "not pi-decomposable");
}

void thm_noncentral(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.is_core()) return abstain(v, Abstention::precondition, "not a core-factorisation");
  if (!an.is_pi_separable()) return abstain(v, Abstention::precondition, "not pi-separable");
  if (an.prefactorised_hall_pi().H.is_abelian()) return abstain(v, Abstention::precondition, "Hall pi-subgroup is abelian");
  auto h = eval_hypothesis(an, hyp(ElementFilter::all_elements, Scope::hall_minus_center, Arithmetic::pi_number));
  Dichotomy d = dichotomy(an);
  bool concl = (d.in_center[0] || d.centralises_all[0]) && (d.in_center[1] || d.centralises_all[1]);
  biconditional(v, h, concl, "some H∩X is neither central in H nor centralising every Hall pi'-subgroup");
  dichotomy_consequences(v, an, d);
}

void thm_b(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.is_core()) return abstain(v, Abstention::precondition, "not a core-factorisation");
  if (!an.is_pi_separable()) return abstain(v, Abstention::precondition, "not pi-separable");
  auto h = eval_hypothesis(an, hyp(ElementFilter::all_elements, Scope::hall_union, Arithmetic::pi_or_pi_prime));
  Dichotomy d = dichotomy(an);
  bool concl = (d.in_center[0] || d.centralises_all[0]) && (d.in_center[1] || d.centralises_all[1]);
  biconditional(v, h, concl, "some H∩X is neither central in H nor centralising every Hall pi'-subgroup");
  const PiSet& pi = an.pi();
  for (int i = 0; i < 2; ++i) {
    std::string name = i == 0 ? "A" : "B";
    bool all_pi_prime = all_sizes(an, d.part[i], [&](Order n) { return pi.is_pi_prime_number(n); });
    bool all_pi = all_sizes(an, d.part[i], [&](Order n) { return pi.is_pi_number(n); });
    if (d.in_center[i]) require(v, all_pi_prime, "H∩" + name + " central in H but a class size is not a pi'-number");
    if (d.centralises_all[i]) require(v, all_pi, "H∩" + name + " centralises every Hall pi'-subgroup but a class size is not a pi-number");
    if (h.holds) {
      require(v, d.in_center[i] == all_pi_prime, "clause (a) fails for " + name);
      require(v, d.centralises_all[i] == all_pi, "clause (b) fails for " + name);
    }
  }
  dichotomy_consequences(v, an, d);
}

void cor_c(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.is_pi_separable()) return abstain(v, Abstention::precondition, "not pi-separable");
  auto h = eval_hypothesis(an, hyp(ElementFilter::pi_elements, Scope::whole_g, Arithmetic::pi_or_pi_prime));
  bool concl = an.is_pi_decomposable() || (an.hall()->is_abelian() && an.pi_length() <= 1);
  biconditional(v, h, concl, "neither pi-decomposable nor abelian Hall with pi-length at most 1");
}

void thm_dolfi(Analysis& an, Verdict& v, const VerifyOptions&) {
  HypothesisResult h = eval_hypothesis(an, hyp(ElementFilter::all_elements, Scope::whole_g, Arithmetic::pi_or_pi_prime));
  StructureCase c = dolfi_case(an.G(), an.pi());
  if (c.cap_bound) return abstain(v, Abstention::resource, "direct factor search capped");
  biconditional(v, h, c.tag != CaseTag::unclassified, "class-pi-separable but unclassified");
  v.note = std::string("case ") + std::string(to_string(c.tag));
}

HypothesisResult class_pi_sep_core(Analysis& an) {
  HypothesisResult h;
  if (!an.is_core()) {
    h.holds = false;
    return h;
  }
  return eval_hypothesis(an, hyp(ElementFilter::all_elements, Scope::union_ab, Arithmetic::pi_or_pi_prime));
}

void prop_sep_crit(Analysis& an, Verdict& v, const VerifyOptions&) {
  implication(v, class_pi_sep_core(an), an.is_pi_separable(), "not pi-separable");
}

void thm_csf(Analysis& an, Verdict& v, const VerifyOptions&) {
  auto h = class_pi_sep_core(an);
  bool concl = true;
  std::string failure;
  std::string note;
  for (Factor which : {Factor::A, Factor::B}) {
    StructureCase c = teosilvio_factor_case(an.factorisation(), an.pi(), which);
    if (c.cap_bound) return abstain(v, Abstention::resource, "direct factor search capped");
    bool sep = is_class_pi_separable_group(factor_of(an.factorisation(), which), an.pi());
    note += factor_name(which) + "=" + std::string(to_string(c.tag)) + " ";
    if (c.tag == CaseTag::unclassified || !sep) {
      concl = false;
      failure = "factor " + factor_name(which) + " is unclassified or not class-pi-separable";
    }
  }
  implication(v, h, concl, failure);
  v.note = note;
}

void lem_bf(Analysis& an, Verdict& v, const VerifyOptions&) {
  const PiSet& pi = an.pi();
  if (pi.primes().size() > 1 && !an.is_pi_separable())
    return abstain(v, Abstention::precondition, "not pi-separable");
  const auto& g = an.G();
  Subgroup opp = o_pi_pi_prime(g, pi);
  bool concl = true;
  std::string failure;
  for (const auto& c : an.classes().classes()) {
    if (!pi.is_pi_number(c.size)) continue;
    Permutation x = c.representative;
    Subgroup d = derived_subgroup(normal_closure(g, std::span<const Permutation>(&x, 1)));
    if (!pi.is_pi_number(d.order())) {
      concl = false;
      failure = "derived subgroup of the normal closure of " + x.to_string() + " is not a pi-group";
      break;
    }
    if (!opp.contains(x)) {
      concl = false;
      failure = x.to_string() + " is not in O_{pi,pi'}(G)";
      break;
    }
  }
  implication(v, true, concl, failure);
}

void lem_ito(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& f = an.factorisation();
  bool any = false, all = true;
  std::string failure;
  for (const auto* x : {&f.G, &f.A, &f.B}) {
    ClassTable t(*x);
    auto sizes = t.size_spectrum();
    auto primes = prime_divisors(x->order());
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        auto p = primes[i], q = primes[j];
        bool dp = false, dq = false, dpq = false;
        for (auto n : sizes) {
          dp = dp || n % p == 0;
          dq = dq || n % q == 0;
          dpq = dpq || n % (p * q) == 0;
        }
        if (!dp || !dq || dpq) continue;
        any = true;
        if (!is_p_nilpotent(*x, p) && !is_p_nilpotent(*x, q)) {
          all = false;
          failure = x->to_string() + " is neither " + std::to_string(p) + "- nor " + std::to_string(q) + "-nilpotent";
        }
      }
  }
  implication(v, any, all, failure);
}

void prop_pbaer(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& f = an.factorisation();
  const auto& g = f.G;
  Subgroup fit = fitting_subgroup(g);
  bool any = false, all = true;
  std::string failure;
  for (auto p : prime_divisors(g.order())) {
    PiSet single{p};
    bool holds = true;
    for (const auto* x : {&f.A, &f.B})
      for (const auto& e : x->elements())
        if (holds && single.is_pi_number(e.order()) && !is_prime_power_or_one(an.class_size(e))) holds = false;
    if (!holds) continue;
    any = true;
    if (!is_normal(g, join(sylow_subgroup(g, p), fit))) {
      all = false;
      failure = "P F(G) is not normal for p = " + std::to_string(p);
    }
    for (const auto* x : {&f.A, &f.B}) {
      std::set<std::uint64_t> primes;
      for (const auto& e : x->elements())
        if (single.is_pi_number(e.order()))
          for (auto q : prime_divisors(an.class_size(e))) primes.insert(q);
      if (primes.size() > 1) {
        all = false;
        failure = "class sizes of " + std::to_string(p) + "-elements of a factor involve two primes";
      }
    }
  }
  implication(v, any, all, failure);
}

void lem_bk_pp(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& g = an.G();
  const PiSet& pi = an.pi();
  const auto& table = an.classes();
  bool any = false, all = true;
  std::string failure;
  auto qualifies = [&](const Permutation& x, Order n) {
    return n > 1 && pi.is_pi_number(x.order()) && prime_power_base(n).has_value();
  };
  for (const auto& c : table.classes()) {
    const Permutation& x = c.representative;
    if (!qualifies(x, c.size)) continue;
    auto px = *prime_power_base(c.size);
    for (const auto& y : g.elements()) {
      Order ny = an.class_size(y);
      if (!qualifies(y, ny) || *prime_power_base(ny) == px) continue;
      Order nxy = an.class_size(x * y);
      if (!is_prime_power_or_one(nxy)) continue;
      any = true;
      bool ok = an.o_pi().contains(x) && an.o_pi().contains(y) && nxy == std::max(c.size, ny) &&
                pi.contains(*prime_power_base(nxy));
      if (!ok) {
        all = false;
        failure = "pair " + x.to_string() + ", " + y.to_string() + " violates the conclusion";
        break;
      }
    }
    if (!all) break;
  }
  if (any && all) {
    const auto& hall = an.hall();
    if (hall && hall->is_abelian()) {
      all = false;
      failure = "Hall pi-subgroup is abelian";
    }
  }
  implication(v, any, all, failure);
}

void thm_d(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.is_core()) return abstain(v, Abstention::precondition, "not a core-factorisation");
  auto h = eval_hypothesis(an, hyp(ElementFilter::pi_elements, Scope::union_ab, Arithmetic::prime_power));
  bool concl = an.is_pi_separable() && an.pi_length() <= 1;
  std::string failure = concl ? "" : "not pi-separable of pi-length at most 1";
  if (h.holds && concl) {
    for (Factor which : {Factor::A, Factor::B}) {
      StructureCase c = teoprime_factor_case(an, which);
      v.note += factor_name(which) + "=" + std::string(to_string(c.tag)) + " ";
      if (!c.failure.empty()) {
        concl = false;
        failure = factor_name(which) + ": " + c.failure;
      }
    }
  }
  implication(v, h, concl, failure);
}

void cor_d(Analysis& an, Verdict& v, const VerifyOptions&) {
  auto h = eval_hypothesis(an, hyp(ElementFilter::pi_elements, Scope::whole_g, Arithmetic::prime_power));
  if (!h.holds) {
    v.hypothesis_holds = false;
    v.conclusion_holds = false;
    v.note = "conclusion only defined under the hypothesis";
    return;
  }
  const auto& g = an.G();
  const PiSet& pi = an.pi();
  std::set<std::uint64_t> s;
  for (const auto& c : an.classes().classes())
    if (pi.is_pi_number(c.representative.order()))
      for (auto q : prime_divisors(c.size)) s.insert(q);
  std::vector<std::uint64_t> primes(s.begin(), s.end());
  bool ok = true;
  std::string failure;
  auto fail = [&](std::string why) {
    if (ok) failure = std::move(why);
    ok = false;
  };
  if (!an.is_pi_separable() || an.pi_length() > 1) fail("not pi-separable of pi-length at most 1");
  if (ok && primes.size() > 2) fail("more than two primes");
  if (ok) {
    const Subgroup& hall = *an.hall();
    bool abelian = hall.is_abelian();
    if (primes.empty()) {
      if (!abelian || !an.is_pi_decomposable()) fail("central pi-elements but Hall subgroup not abelian direct factor");
    } else if (primes.size() == 1) {
      auto q = primes[0];
      bool decomp_nilp = an.is_pi_decomposable() && is_nilpotent(hall);
      if (decomp_nilp)
        for (auto p : prime_divisors(hall.order()))
          if (p != q && !sylow_subgroup(hall, p).is_abelian()) decomp_nilp = false;
      if ((!pi.contains(q)) != abelian) fail("(a)(1): q outside pi does not match abelian Hall subgroup");
      if (pi.contains(q) != decomp_nilp) fail("(a)(2): q in pi does not match the decomposable nilpotent case");
      if (!pi.contains(q) && !is_normal(g, join(hall, o_p(g, q)))) fail("(a)(1): H O_q(G) is not normal");
    } else {
      auto q = primes[0], r = primes[1];
      if (!pi.contains(q) || !pi.contains(r)) fail("(b): primes not both in pi");
      else if (!an.is_pi_decomposable()) fail("(b): not pi-decomposable");
      else {
        Analysis trivial(trivial_factorisation(g), pi);
        StructureCase c = teoprime_factor_case(trivial, Factor::A);
        if (c.tag != CaseTag::case_2 || !c.failure.empty()) fail("(b): H/Z(H) is not of the required Frobenius shape");
      }
    }
  }
  implication(v, h, ok, failure);
}

void lem_wielandt(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& hall = an.hall();
  if (!hall) return implication(v, false, true, "");
  bool concl = true;
  std::string failure;
  for (const auto& x : hall->elements()) {
    if (!an.pi().is_pi_number(an.class_size(x))) continue;
    if (!an.o_pi().contains(x)) {
      concl = false;
      failure = x.to_string() + " has pi-number class size but is not in O_pi(G)";
      break;
    }
  }
  implication(v, true, concl, failure);
}

void lem_sep(Analysis& an, Verdict& v, const VerifyOptions&) {
  auto h = eval_hypothesis(an, hyp(ElementFilter::pi_prime_power, Scope::union_ab, Arithmetic::pi_number));
  if (h.holds && !an.hall()) h.holds = false;
  bool concl = an.o_pi().order() == an.pi().pi_part(an.G().order()) && an.is_pi_separable();
  implication(v, h, concl, "O_pi(G) is not a Hall pi-subgroup");
}

void lem_div(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& f = an.factorisation();
  const auto& g = f.G;
  const PiSet& pi = an.pi();
  bool ok = true;
  std::string failure;
  auto series = chief_series(g);
  for (std::size_t i = 1; i < series.chain.size() && ok; ++i) {
    const Subgroup& n = series.chain[i];
    ClassTable tn(n);
    for (const auto& x : n.elements())
      if (an.class_size(x) % tn.class_size(x) != 0) {
        ok = false;
        failure = "(a) fails at " + x.to_string();
        break;
      }
    QuotientMap q = quotient(g, n);
    ClassTable tq(q.image());
    for (const auto& c : an.classes().classes())
      if (ok && c.size % tq.class_size(q.forward(c.representative)) != 0) {
        ok = false;
        failure = "(b) fails at " + c.representative.to_string();
      }
    for (const auto* x : {&f.A, &f.B}) {
      if (!ok) break;
      std::set<Permutation> lifted;
      for (const auto& e : x->elements())
        if (pi.is_pi_number(e.order())) lifted.insert(q.forward(e));
      Subgroup image = q.image_of(*x);
      for (const auto& y : image.elements())
        if (pi.is_pi_number(y.order()) && !lifted.count(y)) {
          ok = false;
          failure = "(c) fails at " + y.to_string();
          break;
        }
    }
  }
  implication(v, true, ok, failure);
}

void lem_prefact(Analysis& an, Verdict& v, const VerifyOptions&) {
  if (!an.is_pi_separable()) return implication(v, false, false, "");
  const auto& f = an.factorisation();
  const PiSet& pi = an.pi();
  bool ok = true;
  std::string failure;
  std::optional<PrefactorisedHall> ph;
  try {
    ph = prefactorised_hall(f, pi);
  } catch (const ResourceLimit&) {
    throw;
  } catch (const Error& e) {
    ok = false;
    failure = e.what();
  }
  if (ok && !ph) {
    ok = false;
    failure = "a factor has no Hall pi-subgroup";
  }
  if (ok) {
    const Subgroup& h = ph->H;
    ok = h.order() == pi.pi_part(f.G.order()) && intersect(h, f.A).order() == pi.pi_part(f.A.order()) &&
         intersect(h, f.B).order() == pi.pi_part(f.B.order()) && is_prefactorised(f, h);
    if (!ok) failure = "found subgroup is not a prefactorised Hall subgroup";
    if (ok && ph->induced_is_core && !*ph->induced_is_core) {
      ok = false;
      failure = "induced factorisation of H is not a core-factorisation";
    }
  }
  implication(v, true, ok, failure);
}

void lem_core_char(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& f = an.factorisation();
  if (f.G.is_trivial()) return implication(v, false, true, "");
  bool core = an.is_core();
  bool ok = true;
  std::string failure;
  auto fail = [&](std::string why) {
    if (ok) failure = std::move(why);
    ok = false;
  };
  if (f.G.order() <= limits().oracle_cap && core_factorisation_oracle(f) != core) fail("greedy decision disagrees with the oracle");
  if (core_series(f, CoreStart::a_first).terminated_at_G != core) fail("core A-series termination disagrees");
  if (core_series(f, CoreStart::b_first).terminated_at_G != core) fail("core B-series termination disagrees");
  if (core) {
    const auto& chain = an.core_decision().series.chain;
    for (std::size_t i = 1; i < chain.size() && ok; ++i) {
      if (!is_prefactorised(f, chain[i])) fail("series term " + chain[i].to_string() + " is not prefactorised");
      else if (!is_core_factorisation(induced_factorisation(f, chain[i])).is_core_factorisation)
        fail("series term " + chain[i].to_string() + " does not inherit a core-factorisation");
    }
    auto minimal = minimal_normal_subgroups(f.G);
    if (std::none_of(minimal.begin(), minimal.end(),
                     [&](const Subgroup& m) { return m.is_subgroup_of(f.A) || m.is_subgroup_of(f.B); }))
      fail("no minimal normal subgroup lies in A or B");
  }
  implication(v, true, ok, failure);
}

void lem_quot(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& f = an.factorisation();
  bool core = an.is_core();
  bool ok = true;
  std::string failure;
  if (core) {
    std::vector<Subgroup> normals = an.core_decision().series.chain;
    for (const auto& m : minimal_normal_subgroups(f.G)) normals.push_back(m);
    for (const auto& m : normals) {
      if (m.order() == f.G.order()) continue;
      QuotientMap q = quotient(f.G, m);
      if (!is_core_factorisation(quotient_factorisation(f, q)).is_core_factorisation) {
        ok = false;
        failure = "quotient by " + m.to_string() + " is not a core-factorisation";
        break;
      }
    }
  }
  implication(v, core, ok, failure);
}

void rem_iv(Analysis& an, Verdict& v, const VerifyOptions&) {
  const auto& g = an.G();
  if (g.is_trivial() || !an.is_pi_separable()) return implication(v, false, true, "");
  auto h = hall_subgroup(g, an.pi());
  auto l = hall_subgroup(g, an.pi_prime());
  bool ok = h && l && is_core_factorisation(make_factorisation(g, *h, *l)).is_core_factorisation;
  implication(v, true, ok, "G = HL is not a core-factorisation");
}

const std::map<std::string, Verifier, std::less<>>& registry() {
  static const std::map<std::string, Verifier, std::less<>> r{
      {"THM-A1", [](Analysis& a, Verdict& v, const VerifyOptions& o) { thm_a(a, v, o, false); }},
      {"THM-A2", [](Analysis& a, Verdict& v, const VerifyOptions& o) { thm_a(a, v, o, true); }},
      {"COR-ZGS", cor_zgs},
      {"PROP-PIPRIME", prop_piprime},
      {"PROP-PPRIME", prop_pprime},
      {"LEM-GEN", lem_gen},
      {"LEM-BK-SUP", lem_bk_sup},
      {"THM-NONCENTRAL", thm_noncentral},
      {"THM-B", thm_b},
      {"COR-C", cor_c},
      {"THM-DOLFI", thm_dolfi},
      {"PROP-SEP-CRIT", prop_sep_crit},
      {"THM-CSF", thm_csf},
      {"LEM-BF", lem_bf},
      {"LEM-ITO", lem_ito},
      {"PROP-PBAER", prop_pbaer},
      {"LEM-BK-PP", lem_bk_pp},
      {"THM-D", thm_d},
      {"COR-D", cor_d},
      {"LEM-WIELANDT", lem_wielandt},
      {"LEM-SEP", lem_sep},
      {"LEM-DIV", lem_div},
      {"LEM-PREFACT", lem_prefact},
      {"LEM-CORE-CHAR", lem_core_char},
      {"DEF-CORE", lem_core_char},
      {"LEM-QUOT", lem_quot},
      {"REM-IV", rem_iv},
  };
  return r;
}

const std::set<std::string, std::less<>> kBiconditional{"THM-A1", "THM-A2",  "COR-ZGS",    "PROP-PIPRIME", "THM-NONCENTRAL",
                                                         "THM-B",  "COR-C",   "THM-DOLFI",  "COR-D"};

}  // namespace

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_statement_id(std::string_view id) { return registry().count(id) > 0; }

bool is_biconditional(std::string_view id) { return kBiconditional.count(id) > 0; }

Verdict verify_statement(std::string_view id, Analysis& an, const VerifyOptions& opts) {
  auto it = registry().find(id);
  if (it == registry().end()) throw InvalidArgument("unknown statement id: " + std::string(id));
  Verdict v;
  v.statement_id = std::string(id);
  try {
    it->second(an, v, opts);
  } catch (const ResourceLimit& e) {
    abstain(v, Abstention::resource, e.what());
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error& e) {
    v.consistent = false;
    v.witnesses.push_back(note_witness(std::string("internal failure: ") + e.what()));
  }
  return v;
}

Verdict verify_statement(std::string_view id, const Factorisation& f, const PiSet& pi, const VerifyOptions& opts) {
  Analysis an(f, pi);
  return verify_statement(id, an, opts);
}

namespace {

using Fact = std::function<bool(Analysis&)>;

const std::map<std::string, Fact, std::less<>>& facts() {
  static const std::map<std::string, Fact, std::less<>> r{
      {"CORE-FACTORISATION", [](Analysis& a) { return a.is_core(); }},
      {"PI-DECOMPOSABLE", [](Analysis& a) { return a.is_pi_decomposable(); }},
      {"PI-SEPARABLE", [](Analysis& a) { return a.is_pi_separable(); }},
      {"SOLUBLE", [](Analysis& a) { return is_soluble(a.G()); }},
      {"CLASS-PI-SEP-FACTORISATION",
       [](Analysis& a) {
         return eval_hypothesis(a, hyp(ElementFilter::all_elements, Scope::union_ab, Arithmetic::pi_or_pi_prime)).holds;
       }},
      {"CLASS-PI-SEP-GROUP", [](Analysis& a) { return is_class_pi_separable_group(a.G(), a.pi()); }},
      {"A-CLASS-PI-SEP", [](Analysis& a) { return is_class_pi_separable_group(a.factorisation().A, a.pi()); }},
      {"B-CLASS-PI-SEP", [](Analysis& a) { return is_class_pi_separable_group(a.factorisation().B, a.pi()); }},
      {"HALL-PI-ABELIAN",
       [](Analysis& a) {
         const auto& h = a.hall();
         return h && h->is_abelian();
       }},
      {"HALL-PIPRIME-ABELIAN",
       [](Analysis& a) {
         auto h = hall_subgroup(a.G(), a.pi_prime());
         return h && h->is_abelian();
       }},
      {"CORE-A-TRIVIAL", [](Analysis& a) { return core(a.G(), a.factorisation().A).is_trivial(); }},
      {"CORE-B-SELF-CENTRALISING",
       [](Analysis& a) {
         Subgroup c = core(a.G(), a.factorisation().B);
         return centraliser(a.G(), c).is_subgroup_of(c);
       }},
      {"B-SUBNORMAL", [](Analysis& a) { return is_subnormal(a.G(), a.factorisation().B); }},
      {"HYP-HALL-MINUS-CENTRE-PP",
       [](Analysis& a) {
         return eval_hypothesis(a, hyp(ElementFilter::pi_prime_power, Scope::hall_minus_center, Arithmetic::pi_number))
             .holds;
       }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& fact_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : facts()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_fact_id(std::string_view id) { return facts().count(id) > 0; }

bool evaluate_fact(std::string_view id, Analysis& an) {
  auto it = facts().find(id);
  if (it == facts().end()) throw InvalidArgument("unknown fact id: " + std::string(id));
  return it->second(an);
}

}  // namespace pistruct
