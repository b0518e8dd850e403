#include "pistruct/pi.hpp"

#include <functional>
#include <set>

#include "pistruct/error.hpp"
#include "pistruct/small_group.hpp"
#include "pistruct/structure.hpp"

namespace pistruct {

namespace {

using OrderTest = std::function<bool(Order)>;

Subgroup largest_normal(const PermGroup& g, const OrderTest& ok) {
  Subgroup result = Subgroup::trivial(g.degree());
  if (ok(g.order())) return g;
  ClassTable table(g);
  for (const auto& c : table.classes()) {
    const Permutation& x = c.representative;
    if (x.is_identity() || !ok(x.order()) || result.contains(x)) continue;
    Subgroup n = normal_closure(g, std::span<const Permutation>(&x, 1));
    if (ok(n.order())) result = join(result, n);
  }
  return result;
}

std::optional<Subgroup> first_of_order(const PermGroup& g, const PiSet& pi, Order target) {
  SmallGroup sg(g);
  auto allow = [&](const Permutation& x) { return pi.is_pi_number(x.order()); };
  for (const auto& m : sg.subgroups(allow, target))
    if (SmallGroup::count(m) == target) return sg.subgroup_of(m);
  return std::nullopt;
}

std::optional<Subgroup> hall_rec(const PermGroup& g, const PiSet& pi);

// G has a normal Hall pi'-subgroup M with G/M a pi-group: find a complement.
std::optional<Subgroup> complement_of_normal_hall(const PermGroup& g, const PiSet& pi,
                                                  const Subgroup& m) {
  const Order target = g.order() / m.order();
  auto p = prime_divisors(m.order()).front();
  Subgroup sp = sylow_subgroup(m, p);
  Subgroup n = normaliser(g, sp);
  // Frattini: G = M N_G(P), so N_G(P) contains a Hall pi-subgroup of G.
  if (n.order() < g.order()) return hall_rec(n, pi);
  if (sp.order() < m.order()) {
    QuotientMap q = quotient(g, sp);
    auto hbar = hall_rec(q.image(), pi);
    if (!hbar) return std::nullopt;
    return hall_rec(q.preimage(*hbar), pi);
  }
  if (auto r = prime_power_base(target)) return sylow_subgroup(g, *r);
  QuotientMap q = quotient(g, m);
  Subgroup k = q.preimage(minimal_normal_subgroups(q.image()).front());
  if (k.order() < g.order()) {
    auto c = hall_rec(k, pi);
    if (!c) return std::nullopt;
    Subgroup nc = normaliser(g, *c);
    if (nc.order() < g.order()) return hall_rec(nc, pi);
    QuotientMap qc = quotient(g, *c);
    auto hbar = hall_rec(qc.image(), pi);
    if (!hbar) return std::nullopt;
    return qc.preimage(*hbar);
  }
  return first_of_order(g, pi, target);
}

std::optional<Subgroup> hall_rec(const PermGroup& g, const PiSet& pi) {
  const Order target = pi.pi_part(g.order());
  if (target == g.order()) return g;
  if (target == 1) return Subgroup::trivial(g.degree());
  Subgroup m = o_pi_prime(g, pi);
  if (!m.is_trivial()) {
    QuotientMap q = quotient(g, m);
    auto hbar = hall_rec(q.image(), pi);
    if (!hbar) return std::nullopt;
    Subgroup l = q.preimage(*hbar);
    if (l.order() < g.order()) return hall_rec(l, pi);
    return complement_of_normal_hall(g, pi, m);
  }
  Subgroup o = o_pi(g, pi);
  if (!o.is_trivial()) {
    QuotientMap q = quotient(g, o);
    auto hbar = hall_rec(q.image(), pi);
    if (!hbar) return std::nullopt;
    return q.preimage(*hbar);
  }
  return first_of_order(g, pi, target);
}

}  // namespace

std::vector<Permutation> pi_elements(const PermGroup& g, const PiSet& pi, PiFilter filter) {
  std::vector<Permutation> out;
  for (const auto& x : g.elements()) {
    auto o = x.order();
    if (!pi.is_pi_number(o)) continue;
    if (filter == PiFilter::prime_power_only && !is_prime_power_or_one(o)) continue;
    out.push_back(x);
  }
  return out;
}

bool is_pi_group(const PermGroup& g, const PiSet& pi) { return pi.is_pi_number(g.order()); }
bool is_pi_prime_group(const PermGroup& g, const PiSet& pi) { return pi.is_pi_prime_number(g.order()); }

Subgroup o_pi(const PermGroup& g, const PiSet& pi) {
  return largest_normal(g, [&](Order n) { return pi.is_pi_number(n); });
}

Subgroup o_pi_prime(const PermGroup& g, const PiSet& pi) {
  return largest_normal(g, [&](Order n) { return pi.is_pi_prime_number(n); });
}

Subgroup o_pi_pi_prime(const PermGroup& g, const PiSet& pi) {
  QuotientMap q = quotient(g, o_pi(g, pi));
  return q.preimage(o_pi_prime(q.image(), pi));
}

PiSeries upper_pi_series(const PermGroup& g, const PiSet& pi) {
  PiSeries s;
  Subgroup n = Subgroup::trivial(g.degree());
  s.chain.push_back(n);
  PiLabel phase = PiLabel::pi_prime;
  int empty_steps = 0;
  while (n.order() != g.order() && empty_steps < 2) {
    QuotientMap q = quotient(g, n);
    Subgroup top = phase == PiLabel::pi ? o_pi(q.image(), pi) : o_pi_prime(q.image(), pi);
    if (top.is_trivial()) {
      ++empty_steps;
    } else {
      empty_steps = 0;
      n = q.preimage(top);
      s.chain.push_back(n);
      s.labels.push_back(phase);
      if (phase == PiLabel::pi) ++s.pi_length;
    }
    phase = phase == PiLabel::pi ? PiLabel::pi_prime : PiLabel::pi;
  }
  s.reaches_group = n.order() == g.order();
  return s;
}

bool is_pi_separable(const PermGroup& g, const PiSet& pi) { return upper_pi_series(g, pi).reaches_group; }

unsigned pi_length(const PermGroup& g, const PiSet& pi) { return upper_pi_series(g, pi).pi_length; }

std::optional<Subgroup> hall_subgroup(const PermGroup& g, const PiSet& pi) { return hall_rec(g, pi); }

std::vector<Subgroup> hall_conjugates(const PermGroup& g, const PiSet& pi, const Subgroup& h) {
  if (h.order() != pi.pi_part(g.order()) || !h.is_subgroup_of(g))
    throw InvalidArgument("hall_conjugates: not a Hall subgroup");
  std::vector<Subgroup> orbit{h};
  std::set<std::vector<Permutation>> seen{h.elements()};
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& t : g.generators()) {
      Subgroup c = conjugate(orbit[head], t);
      if (seen.insert(c.elements()).second) orbit.push_back(std::move(c));
    }
  return orbit;
}

std::vector<Subgroup> hall_subgroups_exhaustive(const PermGroup& g, const PiSet& pi) {
  const Order target = pi.pi_part(g.order());
  SmallGroup sg(g);
  auto allow = [&](const Permutation& x) { return pi.is_pi_number(x.order()); };
  std::vector<Subgroup> out;
  for (const auto& m : sg.subgroups(allow, target))
    if (SmallGroup::count(m) == target) out.push_back(sg.subgroup_of(m));
  return out;
}

bool is_pi_decomposable(const PermGroup& g, const PiSet& pi) {
  return o_pi(g, pi).order() * o_pi_prime(g, pi).order() == g.order();
}

}  // namespace pistruct
