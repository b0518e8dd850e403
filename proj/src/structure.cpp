#include "pistruct/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pistruct/error.hpp"
#include "pistruct/pi.hpp"
#include "pistruct/small_group.hpp"

namespace pistruct {

namespace {

bool print_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.to_string() < b.to_string();
}

void sort_subgroups(std::vector<Subgroup>& v) { std::sort(v.begin(), v.end(), print_less); }

std::vector<Permutation> conjugation_orbit(const PermGroup& g, const Permutation& x) {
  std::vector<Permutation> orbit{x};
  std::unordered_set<Permutation> seen{x};
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& s : g.generators()) {
      Permutation y = conjugate(orbit[head], s);
      if (seen.insert(y).second) orbit.push_back(std::move(y));
    }
  return orbit;
}

}  // namespace

ClassTable::ClassTable(const PermGroup& g) : group_(g) {
  const auto& elements = g.elements();
  index_.reserve(elements.size());
  for (const auto& x : elements) {
    if (index_.count(x)) continue;
    auto orbit = conjugation_orbit(g, x);
    std::size_t id = classes_.size();
    for (const auto& y : orbit) index_.emplace(y, id);
    Order size = orbit.size();
    classes_.push_back({x, size, g.order() / size});
    std::sort(orbit.begin(), orbit.end());
    members_.push_back(std::move(orbit));
  }
}

std::size_t ClassTable::class_index(const Permutation& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw InvalidArgument("element not in group: " + x.to_string());
  return it->second;
}

std::vector<Order> ClassTable::size_spectrum() const {
  std::vector<Order> sizes;
  for (const auto& c : classes_) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
  ClassTable table(g);
  return table.classes();
}

Order class_size(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw InvalidArgument("element not in group: " + x.to_string());
  return conjugation_orbit(g, x).size();
}

Subgroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  std::vector<Permutation> gens;
  for (const auto& x : s) {
    if (!g.contains(x)) throw InvalidArgument("normal_closure: element not in group");
    if (!x.is_identity()) gens.push_back(x);
  }
  Subgroup h(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& t : g.generators()) {
      Permutation c = conjugate(gens[i], t);
      if (!h.contains(c)) {
        gens.push_back(c);
        h = Subgroup(g.degree(), gens);
      }
    }
  return h;
}

Subgroup normal_closure(const PermGroup& g, const Subgroup& h) {
  return normal_closure(g, std::span<const Permutation>(h.generators()));
}

Subgroup core(const PermGroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) throw InvalidArgument("core: not a subgroup");
  Subgroup k = h;
  bool changed = true;
  while (changed && !k.is_trivial()) {
    changed = false;
    for (const auto& t : g.generators()) {
      Subgroup kt = conjugate(k, t);
      if (!k.is_subgroup_of(kt)) {
        k = intersect(k, kt);
        changed = true;
      }
    }
  }
  return k;
}

std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g) {
  if (g.is_trivial()) return {};
  ClassTable table(g);
  std::vector<Subgroup> closures;
  for (const auto& c : table.classes()) {
    if (c.representative.is_identity()) continue;
    Permutation rep = c.representative;
    Subgroup n = normal_closure(g, std::span<const Permutation>(&rep, 1));
    if (std::none_of(closures.begin(), closures.end(), [&](const Subgroup& m) { return m == n; }))
      closures.push_back(std::move(n));
  }
  std::vector<Subgroup> minimal;
  for (const auto& n : closures) {
    bool is_min = std::none_of(closures.begin(), closures.end(), [&](const Subgroup& m) {
      return m.order() < n.order() && m.is_subgroup_of(n);
    });
    if (is_min) minimal.push_back(n);
  }
  sort_subgroups(minimal);
  return minimal;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  ClassTable table(g);
  const auto& classes = table.classes();
  auto key = [&](const Subgroup& n) {
    std::vector<bool> k(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) k[i] = n.contains(classes[i].representative);
    return k;
  };
  std::vector<Subgroup> closures;
  for (const auto& c : classes) {
    if (c.representative.is_identity()) continue;
    Permutation rep = c.representative;
    closures.push_back(normal_closure(g, std::span<const Permutation>(&rep, 1)));
  }
  std::vector<Subgroup> found{Subgroup::trivial(g.degree())};
  std::unordered_set<std::vector<bool>> seen{key(found[0])};
  for (std::size_t head = 0; head < found.size(); ++head)
    for (const auto& c : closures) {
      if (c.is_subgroup_of(found[head])) continue;
      Subgroup j = join(found[head], c);
      if (!seen.insert(key(j)).second) continue;
      found.push_back(std::move(j));
      if (found.size() > limits().subgroup_search_cap)
        throw ResourceLimit("normal subgroup search exceeded cap");
    }
  sort_subgroups(found);
  return found;
}

ChiefSeries chief_series(const PermGroup& g) {
  ChiefSeries series;
  Subgroup n = Subgroup::trivial(g.degree());
  series.chain.push_back(n);
  while (n.order() != g.order()) {
    QuotientMap q = quotient(g, n);
    auto minimal = minimal_normal_subgroups(q.image());
    Subgroup next = q.preimage(minimal.front());
    series.factors.push_back({next.order() / n.order(), {}, {}, {}, {}});
    series.chain.push_back(next);
    n = std::move(next);
  }
  return series;
}

void annotate_pi(ChiefSeries& series, const PiSet& pi) {
  for (auto& f : series.factors) {
    f.is_pi_group = pi.is_pi_number(f.order);
    f.is_pi_prime_group = pi.is_pi_prime_number(f.order);
  }
}

bool covers(const Subgroup& u, const Subgroup& v, const Subgroup& w) {
  return product_order(w, intersect(u, v)) == v.order();
}

Subgroup center(const PermGroup& g) { return centraliser(g, g); }

Subgroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

Subgroup o_p(const PermGroup& g, std::uint64_t p) {
  if (g.order() % p != 0) return Subgroup::trivial(g.degree());
  return core(g, sylow_subgroup(g, p));
}

Subgroup fitting_subgroup(const PermGroup& g) {
  Subgroup f = Subgroup::trivial(g.degree());
  for (auto p : prime_divisors(g.order())) f = join(f, o_p(g, p));
  return f;
}

Subgroup socle(const PermGroup& g) {
  Subgroup s = Subgroup::trivial(g.degree());
  for (const auto& m : minimal_normal_subgroups(g)) s = join(s, m);
  return s;
}

Subgroup characteristic_subgroup(const PermGroup& g, Characteristic which, std::uint64_t p) {
  switch (which) {
    case Characteristic::center: return center(g);
    case Characteristic::derived: return derived_subgroup(g);
    case Characteristic::fitting: return fitting_subgroup(g);
    case Characteristic::o_p:
      if (!is_prime(p)) throw InvalidArgument("O_p needs a prime");
      return o_p(g, p);
    case Characteristic::socle: return socle(g);
  }
  throw InvalidArgument("unknown characteristic subgroup");
}

bool is_soluble(const PermGroup& g) {
  Subgroup d = g;
  while (!d.is_trivial()) {
    Subgroup next = derived_subgroup(d);
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
  return true;
}

bool is_nilpotent(const PermGroup& g) {
  for (auto p : prime_divisors(g.order()))
    if (o_p(g, p).order() != p_part(g.order(), p)) return false;
  return true;
}

bool is_subnormal(const PermGroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) return false;
  Subgroup current = g;
  while (true) {
    Subgroup next = normal_closure(current, h);
    if (next.order() == current.order()) break;
    current = std::move(next);
  }
  return current.order() == h.order();
}

Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("sylow_subgroup needs a prime");
  const Order target = p_part(g.order(), p);
  Subgroup s = Subgroup::trivial(g.degree());
  while (s.order() < target) {
    // N_G(P)/P has order divisible by p, so some p-element of N_G(P) lies outside P.
    Subgroup n = normaliser(g, s);
    bool grown = false;
    for (const auto& x : n.elements()) {
      std::uint64_t o = x.order();
      Permutation y = x.pow(static_cast<std::int64_t>(o / p_part(o, p)));
      if (y.is_identity() || s.contains(y)) continue;
      auto gens = s.generators();
      gens.push_back(y);
      s = Subgroup(g.degree(), std::move(gens));
      grown = true;
      break;
    }
    if (!grown) throw Error("sylow_subgroup: growth stalled");
  }
  return s;
}

bool is_frobenius_with(const PermGroup& g, const Subgroup& k, const Subgroup& h) {
  if (k.is_trivial() || h.is_trivial()) return false;
  if (!h.is_subgroup_of(g) || !is_normal(g, k)) return false;
  if (k.order() * h.order() != g.order()) return false;
  if (!intersect(k, h).is_trivial()) return false;
  const auto& kel = k.elements();
  for (const auto& x : h.elements()) {
    if (x.is_identity()) continue;
    for (const auto& y : kel)
      if (!y.is_identity() && x * y == y * x) return false;
  }
  return true;
}

std::optional<std::pair<Subgroup, Subgroup>> frobenius_decomposition(const PermGroup& g) {
  for (const auto& k : normal_subgroups(g)) {
    if (k.is_trivial() || k.order() == g.order()) continue;
    Order index = g.order() / k.order();
    if (std::gcd(k.order(), index) != 1) continue;
    auto h = hall_subgroup(g, PiSet(prime_divisors(index)));
    if (h && is_frobenius_with(g, k, *h)) return std::make_pair(k, *h);
  }
  return std::nullopt;
}

bool is_p_nilpotent(const PermGroup& g, std::uint64_t p) {
  if (g.order() % p != 0) return true;
  std::vector<Permutation> p_prime;
  ClassTable table(g);
  for (const auto& c : table.classes())
    if (c.representative.order() % p != 0) p_prime.push_back(c.representative);
  return normal_closure(g, p_prime).order() == g.order() / p_part(g.order(), p);
}

DirectSplit strip_abelian_direct_factors(const PermGroup& g) {
  const Subgroup trivial = Subgroup::trivial(g.degree());
  if (g.is_abelian()) return {g, trivial, false};
  Subgroup z = center(g);
  if (z.is_trivial()) return {trivial, g, false};
  if (g.order() > limits().direct_factor_cap) return {trivial, g, true};

  SmallGroup zs(z);
  std::vector<Subgroup> candidates;
  for (const auto& m : zs.subgroups([](const Permutation&) { return true; }, z.order()))
    candidates.push_back(zs.subgroup_of(m));
  std::sort(candidates.begin(), candidates.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.to_string() < b.to_string();
  });
  auto normals = normal_subgroups(g);
  for (const auto& d : candidates) {
    if (d.is_trivial()) break;
    for (const auto& y : normals) {
      if (y.order() * d.order() != g.order()) continue;
      if (intersect(d, y).is_trivial()) return {d, y, false};
    }
  }
  return {trivial, g, false};
}

}  // namespace pistruct
