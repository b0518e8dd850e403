#include "pistruct/factorisation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pistruct/error.hpp"
#include "pistruct/pi.hpp"
#include "pistruct/structure.hpp"

namespace pistruct {

Factorisation make_factorisation(const PermGroup& g, const Subgroup& a, const Subgroup& b) {
  if (!a.is_subgroup_of(g) || !b.is_subgroup_of(g))
    throw InvalidArgument("factor is not a subgroup of G");
  Order i = intersect(a, b).order();
  if (a.order() / i * b.order() != g.order())
    throw InvalidArgument("not a product: |A||B|/|A∩B| = " + std::to_string(a.order() / i * b.order()) +
                          " but |G| = " + std::to_string(g.order()));
  return {g, a, b, i};
}

Factorisation trivial_factorisation(const PermGroup& g) { return {g, g, g, g.order()}; }

bool is_prefactorised(const Factorisation& f, const Subgroup& s) {
  Subgroup sa = intersect(s, f.A);
  Subgroup sb = intersect(s, f.B);
  return product_order(sa, sb) == s.order();
}

Factorisation induced_factorisation(const Factorisation& f, const Subgroup& s) {
  return make_factorisation(s, intersect(s, f.A), intersect(s, f.B));
}

Factorisation quotient_factorisation(const Factorisation& f, const QuotientMap& q) {
  return make_factorisation(q.image(), q.image_of(f.A), q.image_of(f.B));
}

CoreDecision is_core_factorisation(const Factorisation& f) {
  CoreDecision d;
  Subgroup n = Subgroup::trivial(f.G.degree());
  d.series.chain.push_back(n);
  while (n.order() != f.G.order()) {
    QuotientMap q = quotient(f.G, n);
    Subgroup ca = core(q.image(), q.image_of(f.A));
    Subgroup cb = core(q.image(), q.image_of(f.B));
    Subgroup next = q.preimage(join(ca, cb));
    if (next.order() == n.order()) break;
    d.series.parts.emplace_back(q.preimage(ca), q.preimage(cb));
    d.series.chain.push_back(next);
    d.series.labels.push_back(CoreLabel::both);
    n = std::move(next);
  }
  d.series.terminated_at_G = n.order() == f.G.order();
  d.is_core_factorisation = d.series.terminated_at_G;
  return d;
}

CoreSeries core_series(const Factorisation& f, CoreStart start) {
  CoreSeries s;
  Subgroup n = Subgroup::trivial(f.G.degree());
  s.chain.push_back(n);
  bool use_a = start == CoreStart::a_first;
  int idle = 0;
  while (n.order() != f.G.order() && idle < 2) {
    QuotientMap q = quotient(f.G, n);
    Subgroup c = core(q.image(), q.image_of(use_a ? f.A : f.B));
    Subgroup next = q.preimage(c);
    s.terms.push_back(next);
    if (next.order() == n.order()) {
      ++idle;
    } else {
      idle = 0;
      s.chain.push_back(next);
      s.labels.push_back(use_a ? CoreLabel::a : CoreLabel::b);
      n = std::move(next);
    }
    use_a = !use_a;
  }
  s.terminated_at_G = n.order() == f.G.order();
  return s;
}

std::optional<unsigned> core_length(const Factorisation& f, CoreStart start) {
  CoreSeries s = core_series(f, start);
  if (!s.terminated_at_G) return std::nullopt;
  return static_cast<unsigned>(s.labels.size());
}

namespace {

// Element table for the oracle, built by plain closure.
struct Table {
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t> index;
  std::vector<std::vector<std::size_t>> mul;

  explicit Table(const PermGroup& g) {
    elements = enumerate_by_closure(g, limits().oracle_cap);
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
    mul.assign(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < elements.size(); ++j) mul[i][j] = index.at(elements[i] * elements[j]);
  }

  std::size_t identity() const { return index.at(Permutation(elements[0].degree())); }

  std::vector<bool> generate(const std::vector<std::size_t>& gens) const {
    std::vector<bool> m(elements.size(), false);
    std::vector<std::size_t> queue{identity()};
    m[identity()] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (auto s : gens) {
        auto y = mul[queue[h]][s];
        if (!m[y]) {
          m[y] = true;
          queue.push_back(y);
        }
      }
    return m;
  }

  std::vector<bool> mask_of(const Subgroup& h) const {
    std::vector<std::size_t> gens;
    for (const auto& x : h.generators()) gens.push_back(index.at(x));
    return generate(gens);
  }

  // {xy : x in a, y in b}
  std::vector<bool> product(const std::vector<bool>& a, const std::vector<bool>& b) const {
    std::vector<bool> m(elements.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i])
        for (std::size_t j = 0; j < b.size(); ++j)
          if (b[j]) m[mul[i][j]] = true;
    return m;
  }
};

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::size_t popcount(const std::vector<bool>& a) { return static_cast<std::size_t>(std::count(a.begin(), a.end(), true)); }

}  // namespace

bool core_factorisation_oracle(const Factorisation& f) {
  if (f.G.order() > limits().oracle_cap) throw ResourceLimit("oracle needs |G| <= " + std::to_string(limits().oracle_cap));
  Table t(f.G);
  const std::size_t n = t.elements.size();

  // Conjugacy classes by conjugating with every element.
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t.mul[i][j] == t.identity()) inverse[i] = j;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g) {
      auto y = t.mul[t.mul[inverse[g]][x]][g];
      if (!assigned[y]) {
        assigned[y] = true;
        cls.push_back(y);
      }
    }
    classes.push_back(std::move(cls));
  }

  // Normal subgroups: subgroups generated by unions of classes.
  std::vector<std::vector<bool>> normals;
  std::set<std::vector<bool>> seen;
  std::vector<bool> one(n, false);
  one[t.identity()] = true;
  normals.push_back(one);
  seen.insert(one);
  for (std::size_t h = 0; h < normals.size(); ++h)
    for (const auto& cls : classes) {
      if (normals[h][cls[0]]) continue;
      std::vector<std::size_t> gens;
      for (std::size_t i = 0; i < n; ++i)
        if (normals[h][i]) gens.push_back(i);
      gens.insert(gens.end(), cls.begin(), cls.end());
      auto m = t.generate(gens);
      if (seen.insert(m).second) normals.push_back(std::move(m));
    }

  auto a = t.mask_of(f.A);
  auto b = t.mask_of(f.B);
  std::vector<bool> all(n, true);
  std::set<std::vector<bool>> dead;

  // Depth-first search for a chief series with every factor covered.
  auto search = [&](auto&& self, const std::vector<bool>& bottom) -> bool {
    if (popcount(bottom) == n) return true;
    if (dead.count(bottom)) return false;
    auto an = t.product(a, bottom);
    auto bn = t.product(b, bottom);
    for (const auto& m : normals) {
      if (m == bottom || !subset(bottom, m)) continue;
      bool chief = true;
      for (const auto& k : normals)
        if (k != bottom && k != m && subset(bottom, k) && subset(k, m)) {
          chief = false;
          break;
        }
      if (!chief) continue;
      if (!subset(m, an) && !subset(m, bn)) continue;
      if (self(self, m)) return true;
    }
    dead.insert(bottom);
    return false;
  };
  return search(search, one);
}

std::optional<PrefactorisedHall> prefactorised_hall(const Factorisation& f, const PiSet& pi) {
  const Order target = pi.pi_part(f.G.order());
  auto ha = hall_subgroup(f.A, pi);
  auto hb = hall_subgroup(f.B, pi);
  if (!ha || !hb) return std::nullopt;

  auto accept = [&](const Subgroup& x, const Subgroup& y) -> std::optional<Subgroup> {
    Subgroup h = join(x, y);
    if (h.order() != target) return std::nullopt;
    if (intersect(h, f.A).order() != x.order() || intersect(h, f.B).order() != y.order()) return std::nullopt;
    if (product_order(x, y) != target) return std::nullopt;
    return h;
  };
  auto conjugates = [](const Subgroup& h, const PermGroup& by) {
    std::vector<Subgroup> out{h};
    std::set<std::vector<Permutation>> seen{h.elements()};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto& t : by.generators()) {
        Subgroup c = conjugate(out[i], t);
        if (seen.insert(c.elements()).second) out.push_back(std::move(c));
      }
    return out;
  };

  std::optional<Subgroup> found;
  auto b_conj = conjugates(*hb, f.B);
  for (const auto& y : b_conj)
    if ((found = accept(*ha, y))) break;
  if (!found) {
    auto a_conj = conjugates(*ha, f.A);
    for (std::size_t i = 1; i < a_conj.size() && !found; ++i)
      for (const auto& y : b_conj)
        if ((found = accept(a_conj[i], y))) break;
  }
  if (!found) throw Error("prefactorised_hall: no prefactorised Hall subgroup among conjugate pairs");

  PrefactorisedHall out{*found, std::nullopt};
  if (is_core_factorisation(f).is_core_factorisation)
    out.induced_is_core = is_core_factorisation(induced_factorisation(f, *found)).is_core_factorisation;
  return out;
}

}  // namespace pistruct
