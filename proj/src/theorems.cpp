#include "pistruct/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pistruct/error.hpp"
#include "pistruct/pi.hpp"

namespace pistruct {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::pi_group: return "pi-group";
    case CaseTag::pi_prime_group: return "pi-prime-group";
    case CaseTag::dolfi_frobenius: return "dolfi-frobenius";
    case CaseTag::case_1a: return "case-1a";
    case CaseTag::case_1b: return "case-1b";
    case CaseTag::case_2: return "case-2";
    case CaseTag::unclassified: return "unclassified";
  }
  return "unclassified";
}

Analysis::Analysis(Factorisation f, PiSet pi)
    : f_(std::move(f)), pi_(std::move(pi)), pi_prime_(pi_.complement_within(f_.G.order())) {}

const ClassTable& Analysis::classes() {
  if (!classes_) classes_.emplace(f_.G);
  return *classes_;
}

Order Analysis::class_size(const Permutation& x) { return classes().class_size(x); }

const CoreDecision& Analysis::core_decision() {
  if (!core_) core_ = is_core_factorisation(f_);
  return *core_;
}

bool Analysis::is_core() { return core_decision().is_core_factorisation; }

bool Analysis::is_pi_separable() {
  if (!series_) series_ = upper_pi_series(f_.G, pi_);
  return series_->reaches_group;
}

unsigned Analysis::pi_length() {
  is_pi_separable();
  return series_->pi_length;
}

const std::optional<Subgroup>& Analysis::hall() {
  if (!hall_) {
    if (is_pi_separable())
      hall_ = std::optional<Subgroup>(prefactorised_hall_pi().H);
    else
      hall_ = hall_subgroup(f_.G, pi_);
  }
  return *hall_;
}

const PrefactorisedHall& Analysis::prefactorised_hall_pi() {
  if (!pre_pi_) {
    if (!is_pi_separable()) throw InvalidArgument("prefactorised Hall subgroup needs pi-separability");
    pre_pi_ = *prefactorised_hall(f_, pi_);
  }
  return *pre_pi_;
}

const PrefactorisedHall& Analysis::prefactorised_hall_pi_prime() {
  if (!pre_pi_prime_) {
    if (!is_pi_separable()) throw InvalidArgument("prefactorised Hall subgroup needs pi-separability");
    pre_pi_prime_ = *prefactorised_hall(f_, pi_prime_);
  }
  return *pre_pi_prime_;
}

const Subgroup& Analysis::o_pi() {
  if (!o_pi_) o_pi_ = pistruct::o_pi(f_.G, pi_);
  return *o_pi_;
}

const Subgroup& Analysis::o_pi_prime() {
  if (!o_pi_prime_) o_pi_prime_ = pistruct::o_pi_prime(f_.G, pi_);
  return *o_pi_prime_;
}

bool Analysis::is_pi_decomposable() { return o_pi().order() * o_pi_prime().order() == f_.G.order(); }

namespace {

bool passes_filter(const PiSet& pi, ElementFilter f, const Permutation& x) {
  auto o = x.order();
  switch (f) {
    case ElementFilter::pi_prime_power: return pi.is_pi_number(o) && is_prime_power_or_one(o);
    case ElementFilter::all_prime_power: return is_prime_power_or_one(o);
    case ElementFilter::pi_elements: return pi.is_pi_number(o);
    case ElementFilter::all_elements: return true;
  }
  return true;
}

bool passes_arithmetic(const PiSet& pi, const Hypothesis& h, Order n) {
  switch (h.arithmetic) {
    case Arithmetic::pi_number: return pi.is_pi_number(n);
    case Arithmetic::pi_prime_number: return pi.is_pi_prime_number(n);
    case Arithmetic::pi_or_pi_prime: return pi.is_pi_number(n) || pi.is_pi_prime_number(n);
    case Arithmetic::prime_power: return is_prime_power_or_one(n);
    case Arithmetic::coprime_to_p: return n % h.p != 0;
  }
  return false;
}

std::string_view arithmetic_name(const Hypothesis& h) {
  switch (h.arithmetic) {
    case Arithmetic::pi_number: return "not a pi-number";
    case Arithmetic::pi_prime_number: return "not a pi'-number";
    case Arithmetic::pi_or_pi_prime: return "neither a pi- nor a pi'-number";
    case Arithmetic::prime_power: return "not a prime power";
    case Arithmetic::coprime_to_p: return "divisible by p";
  }
  return "";
}

std::vector<const Subgroup*> scope_groups(Analysis& an, Scope s, std::vector<Subgroup>& storage) {
  const auto& f = an.factorisation();
  switch (s) {
    case Scope::factor_a: return {&f.A};
    case Scope::factor_b: return {&f.B};
    case Scope::union_ab: return {&f.A, &f.B};
    case Scope::whole_g: return {&f.G};
    case Scope::hall_union:
    case Scope::hall_minus_center: {
      const Subgroup& h = an.prefactorised_hall_pi().H;
      storage = {intersect(h, f.A), intersect(h, f.B), center(h)};
      return {&storage[0], &storage[1]};
    }
  }
  return {};
}

// Whether every element of a group list satisfies `test`; fills a witness.
bool for_all_elements(const std::vector<const Subgroup*>& groups, const std::function<bool(const Permutation&)>& skip,
                      const std::function<std::optional<Witness>(const Permutation&)>& test,
                      std::vector<Witness>& out) {
  for (const auto* g : groups)
    for (const auto& x : g->elements()) {
      if (skip(x)) continue;
      if (auto w = test(x)) {
        out.push_back(*w);
        return false;
      }
    }
  return true;
}

Subgroup factor(const Factorisation& f, Factor which) { return which == Factor::A ? f.A : f.B; }

bool normalises(const Subgroup& x, const Subgroup& j) {
  for (const auto& a : x.generators())
    for (const auto& b : j.generators())
      if (!j.contains(conjugate(b, a))) return false;
  return true;
}

std::vector<std::uint64_t> support(const std::set<Order>& sizes) {
  std::set<std::uint64_t> primes;
  for (auto n : sizes)
    for (auto p : prime_divisors(n)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

bool sylows_abelian_except(const PermGroup& g, std::optional<std::uint64_t> q) {
  for (auto p : prime_divisors(g.order())) {
    if (q && p == *q) continue;
    if (!sylow_subgroup(g, p).is_abelian()) return false;
  }
  return true;
}

// H/Z(H) is Frobenius with abelian kernel a q-group and complement an r-group.
bool frobenius_mod_center(const PermGroup& h, std::uint64_t q, std::uint64_t r) {
  QuotientMap m = quotient(h, center(h));
  const PermGroup& img = m.image();
  Subgroup k = sylow_subgroup(img, q);
  Subgroup c = sylow_subgroup(img, r);
  if (!is_normal(img, k) || !k.is_abelian()) return false;
  return is_frobenius_with(img, k, c);
}

}  // namespace

HypothesisResult eval_hypothesis(Analysis& an, const Hypothesis& h) {
  HypothesisResult r;
  std::vector<Subgroup> storage;
  auto groups = scope_groups(an, h.scope, storage);
  const PiSet& pi = an.pi();
  auto skip = [&](const Permutation& x) {
    if (!passes_filter(pi, h.filter, x)) return true;
    return h.scope == Scope::hall_minus_center && storage[2].contains(x);
  };
  auto test = [&](const Permutation& x) -> std::optional<Witness> {
    Order n = an.class_size(x);
    if (passes_arithmetic(pi, h, n)) return std::nullopt;
    return Witness{x.to_string(), n, std::string("class size ") + std::string(arithmetic_name(h))};
  };
  r.holds = for_all_elements(groups, skip, test, r.witnesses);
  return r;
}

HypothesisResult eval_hypothesis(const Factorisation& f, const PiSet& pi, const Hypothesis& h) {
  Analysis an(f, pi);
  return eval_hypothesis(an, h);
}

bool is_class_pi_separable_group(const PermGroup& g, const PiSet& pi) {
  ClassTable t(g);
  for (auto n : t.size_spectrum())
    if (!pi.is_pi_number(n) && !pi.is_pi_prime_number(n)) return false;
  return true;
}

StructureCase dolfi_case(const PermGroup& g, const PiSet& pi) {
  StructureCase c;
  c.spectrum = ClassTable(g).size_spectrum();
  DirectSplit split = strip_abelian_direct_factors(g);
  c.stripped_order = split.abelian.order();
  if (split.cap_bound) {
    c.cap_bound = true;
    return c;
  }
  const Subgroup& y = split.rest;
  if (pi.is_pi_number(y.order())) {
    c.tag = CaseTag::pi_group;
    return c;
  }
  if (pi.is_pi_prime_number(y.order())) {
    c.tag = CaseTag::pi_prime_group;
    return c;
  }
  PiSet pi_prime = pi.complement_within(y.order());
  std::vector<Order> spectrum = ClassTable(y).size_spectrum();
  for (const auto& [sigma, sigma_prime] : {std::pair{pi, pi_prime}, std::pair{pi_prime, pi}}) {
    auto h = hall_subgroup(y, sigma);
    auto l = hall_subgroup(y, sigma_prime);
    if (!h || !l) continue;
    if (!is_normal(y, *l) || !h->is_abelian() || !l->is_abelian()) continue;
    Subgroup o = o_pi(y, sigma);
    if (!(o == center(y))) continue;
    QuotientMap q = quotient(y, o);
    if (!is_frobenius_with(q.image(), q.image_of(*l), q.image_of(*h))) continue;
    std::vector<Order> expected{1, h->order() / o.order(), l->order()};
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (spectrum != expected) continue;
    if (!is_soluble(y)) continue;
    c.tag = CaseTag::dolfi_frobenius;
    c.kernel_order = l->order();
    c.complement_order = h->order() / o.order();
    return c;
  }
  return c;
}

StructureCase teosilvio_factor_case(const Factorisation& f, const PiSet& pi, Factor which) {
  return dolfi_case(factor(f, which), pi);
}

StructureCase teoprime_factor_case(Analysis& an, Factor which) {
  StructureCase c;
  const PiSet& pi = an.pi();
  const Subgroup x = factor(an.factorisation(), which);
  std::set<Order> sizes;
  for (const auto& e : x.elements())
    if (pi.is_pi_number(e.order())) sizes.insert(an.class_size(e));
  c.spectrum.assign(sizes.begin(), sizes.end());
  c.primes = support(sizes);
  if (c.primes.size() > 2) {
    c.failure = "class sizes of pi-elements involve more than two primes";
    return c;
  }
  auto xpi_opt = hall_subgroup(x, pi);
  if (!xpi_opt) {
    c.failure = "factor has no Hall pi-subgroup";
    return c;
  }
  const Subgroup& xpi = *xpi_opt;
  const bool decomposable = is_pi_decomposable(x, pi);
  if (c.primes.size() <= 1) {
    std::optional<std::uint64_t> q;
    if (!c.primes.empty()) q = c.primes.front();
    if (q && !pi.contains(*q)) {
      c.tag = CaseTag::case_1a;
      if (!xpi.is_abelian())
        c.failure = "Hall pi-subgroup of the factor is not abelian";
      else if (!normalises(x, join(xpi, o_p(an.G(), *q))))
        c.failure = "factor does not normalise X_pi O_q(G)";
      return c;
    }
    c.tag = CaseTag::case_1b;
    if (!decomposable)
      c.failure = "factor is not pi-decomposable";
    else if (!is_nilpotent(xpi))
      c.failure = "Hall pi-subgroup of the factor is not nilpotent";
    else if (!sylows_abelian_except(xpi, q))
      c.failure = "a Sylow subgroup of X_pi other than at q is not abelian";
    return c;
  }
  c.tag = CaseTag::case_2;
  std::uint64_t q = c.primes[0], r = c.primes[1];
  if (!pi.contains(q) || !pi.contains(r)) {
    c.failure = "the two primes are not both in pi";
    return c;
  }
  if (!decomposable) {
    c.failure = "factor is not pi-decomposable";
    return c;
  }
  if (!frobenius_mod_center(xpi, q, r)) {
    if (!frobenius_mod_center(xpi, r, q)) {
      c.failure = "X_pi/Z(X_pi) is not Frobenius with the required kernel and complement";
      return c;
    }
    std::swap(c.primes[0], c.primes[1]);
  }
  QuotientMap m = quotient(xpi, center(xpi));
  c.kernel_order = p_part(m.image().order(), c.primes[0]);
  c.complement_order = p_part(m.image().order(), c.primes[1]);
  return c;
}

StructureCase teoprime_factor_case(const Factorisation& f, const PiSet& pi, Factor which) {
  Analysis an(f, pi);
  return teoprime_factor_case(an, which);
}

}  // namespace pistruct
