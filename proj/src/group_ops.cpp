#include "pistruct/group_ops.hpp"

#include <numeric>
#include <unordered_map>

#include "pistruct/error.hpp"

namespace pistruct {

Subgroup conjugate(const Subgroup& h, const Permutation& g) {
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(conjugate(x, g));
  return Subgroup(h.degree(), std::move(gens));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  std::vector<Permutation> gens = a.generators();
  for (const auto& g : b.generators())
    if (!a.contains(g)) gens.push_back(g);
  return Subgroup(a.degree(), std::move(gens));
}

bool is_normal(const PermGroup& g, const Subgroup& n) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& y : n.generators())
      if (!n.contains(conjugate(y, x))) return false;
  return true;
}

Subgroup subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& elements) {
  return PermGroup::generated_by(degree, elements);
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  if (h.degree() != k.degree()) throw InvalidArgument("intersect: degree mismatch");
  if (h.is_subgroup_of(k)) return h;
  if (k.is_subgroup_of(h)) return k;
  const Subgroup& small = h.order() <= k.order() ? h : k;
  const Subgroup& large = h.order() <= k.order() ? k : h;
  std::vector<Permutation> common;
  for (const auto& x : small.elements())
    if (large.contains(x)) common.push_back(x);
  return subgroup_from_elements(h.degree(), common);
}

Order product_order(const Subgroup& h, const Subgroup& k) {
  return h.order() / intersect(h, k).order() * k.order();
}

Subgroup centraliser(const PermGroup& g, std::span<const Permutation> s) {
  std::vector<Permutation> keep;
  for (const auto& x : g.elements()) {
    bool commutes = true;
    for (const auto& y : s)
      if (x * y != y * x) {
        commutes = false;
        break;
      }
    if (commutes) keep.push_back(x);
  }
  return subgroup_from_elements(g.degree(), keep);
}

Subgroup centraliser(const PermGroup& g, const Subgroup& h) {
  return centraliser(g, std::span<const Permutation>(h.generators()));
}

Subgroup normaliser(const PermGroup& g, const Subgroup& h) {
  std::vector<Permutation> keep;
  for (const auto& x : g.elements()) {
    bool normalises = true;
    for (const auto& y : h.generators())
      if (!h.contains(conjugate(y, x))) {
        normalises = false;
        break;
      }
    if (normalises) keep.push_back(x);
  }
  return subgroup_from_elements(g.degree(), keep);
}

struct QuotientMap::Data {
  PermGroup source;
  Subgroup kernel;
  PermGroup image;
  bool identity = false;
  std::unordered_map<Permutation, std::uint32_t> coset_of;
  std::vector<Permutation> reps;

  Permutation forward(const Permutation& x) const {
    if (identity) return x;
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) images[c] = coset_of.at(reps[c] * x);
    return Permutation(std::move(images));
  }
};

const PermGroup& QuotientMap::source() const { return data_->source; }
const Subgroup& QuotientMap::kernel() const { return data_->kernel; }
const PermGroup& QuotientMap::image() const { return data_->image; }
bool QuotientMap::is_identity_map() const { return data_->identity; }
std::size_t QuotientMap::coset_count() const {
  return data_->identity ? static_cast<std::size_t>(data_->source.order()) : data_->reps.size();
}

Permutation QuotientMap::forward(const Permutation& x) const { return data_->forward(x); }

Permutation QuotientMap::lift(const Permutation& y) const {
  if (data_->identity) return y;
  // Coset 0 is the kernel itself, and the coset action is regular.
  return data_->reps.at(y(0));
}

Subgroup QuotientMap::image_of(const Subgroup& h) const {
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(forward(x));
  return Subgroup(data_->image.degree(), std::move(gens));
}

Subgroup QuotientMap::preimage(const Subgroup& hbar) const {
  if (data_->identity) return hbar;
  std::vector<Permutation> gens = data_->kernel.generators();
  for (const auto& y : hbar.generators()) gens.push_back(lift(y));
  return Subgroup(data_->source.degree(), std::move(gens));
}

QuotientMap quotient(const PermGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw InvalidArgument("quotient: subgroup is not normal");
  auto data = std::make_shared<QuotientMap::Data>();
  data->source = g;
  data->kernel = n;
  if (n.is_trivial()) {
    data->identity = true;
    data->image = g;
    return QuotientMap(std::move(data));
  }
  Order count = g.order() / n.order();
  if (count > limits().quotient_degree_cap)
    throw ResourceLimit("quotient needs " + std::to_string(count) + " cosets, cap is " +
                        std::to_string(limits().quotient_degree_cap));
  const auto& kernel_elements = n.elements();
  for (const auto& x : g.elements()) {
    if (data->coset_of.count(x)) continue;
    auto id = static_cast<std::uint32_t>(data->reps.size());
    data->reps.push_back(x);
    for (const auto& k : kernel_elements) data->coset_of.emplace(k * x, id);
  }
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(data->forward(x));
  data->image = PermGroup(data->reps.size(), std::move(gens));
  return QuotientMap(std::move(data));
}

Permutation embed(const Permutation& g, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i)
    images[offset + i] = static_cast<Point>(offset + g(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(embed(g, 0, degree));
  for (const auto& g : b.generators()) gens.push_back(embed(g, a.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

PowerMapSemidirect semidirect_by_power_map(std::uint64_t n, std::uint64_t k) {
  if (n < 2) throw InvalidArgument("semidirect_by_power_map: modulus must be at least 2");
  if (std::gcd(k % n, n) != 1) throw InvalidArgument("semidirect_by_power_map: gcd(k, n) != 1");
  std::uint64_t ord = 1;
  for (std::uint64_t power = k % n; power != 1 % n; power = power * k % n) ++ord;
  std::vector<Point> shift(n), mult(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    shift[i] = static_cast<Point>((i + 1) % n);
    mult[i] = static_cast<Point>(i * k % n);
  }
  PermGroup g(n, {Permutation(std::move(shift)), Permutation(std::move(mult))});
  return {std::move(g), ord};
}

PermGroup wreath_natural(const PermGroup& g, std::size_t m) {
  if (m < 2) throw InvalidArgument("wreath_natural: need at least two blocks");
  std::size_t d = g.degree();
  std::size_t degree = d * m;
  std::vector<Permutation> gens;
  for (std::size_t block = 0; block < m; ++block)
    for (const auto& x : g.generators()) gens.push_back(embed(x, block * d, degree));
  std::vector<Point> top(degree);
  for (std::size_t block = 0; block < m; ++block)
    for (std::size_t i = 0; i < d; ++i)
      top[block * d + i] = static_cast<Point>(((block + 1) % m) * d + i);
  gens.emplace_back(std::move(top));
  return PermGroup(degree, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n < 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation(std::move(c))});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral_group: need at least 3 points");
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation(std::move(c))});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

}  // namespace pistruct
