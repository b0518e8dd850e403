#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pistruct/group_ops.hpp"
#include "pistruct/primes.hpp"

namespace pistruct {

struct ConjClass {
  Permutation representative;  // smallest member in image-table order
  Order size = 1;
  Order centraliser_order = 1;
};

/// Conjugacy classes of G with a lookup from element to class. Classes are
/// orbits under conjugation by the generators, listed in order of their
/// smallest member (so the identity class comes first).
class ClassTable {
 public:
  explicit ClassTable(const PermGroup& g);

  const PermGroup& group() const noexcept { return group_; }
  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  const std::vector<Permutation>& members(std::size_t index) const { return members_.at(index); }
  std::size_t class_index(const Permutation& x) const;
  /// |x^G|; x must lie in the group.
  Order class_size(const Permutation& x) const { return classes_[class_index(x)].size; }
  /// The distinct class sizes, ascending.
  std::vector<Order> size_spectrum() const;

 private:
  PermGroup group_;
  std::vector<ConjClass> classes_;
  std::vector<std::vector<Permutation>> members_;
  std::unordered_map<Permutation, std::size_t> index_;
};

std::vector<ConjClass> conjugacy_classes(const PermGroup& g);
/// |x^G| as the length of the orbit of x under generator conjugation.
Order class_size(const PermGroup& g, const Permutation& x);

/// Smallest normal subgroup of G containing S.
Subgroup normal_closure(const PermGroup& g, std::span<const Permutation> s);
Subgroup normal_closure(const PermGroup& g, const Subgroup& h);
/// Largest normal subgroup of G contained in H.
Subgroup core(const PermGroup& g, const Subgroup& h);

/// Sorted by order, then by generator print.
std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g);
/// Every normal subgroup, including 1 and G, sorted by order then print.
std::vector<Subgroup> normal_subgroups(const PermGroup& g);

struct ChiefFactor {
  Order order = 1;
  std::optional<bool> is_pi_group;
  std::optional<bool> is_pi_prime_group;
  std::optional<bool> covered_by_a;
  std::optional<bool> covered_by_b;
};

/// 1 = chain[0] < chain[1] < ... < chain.back() = G; factors[i] describes
/// chain[i+1]/chain[i].
struct ChiefSeries {
  std::vector<Subgroup> chain;
  std::vector<ChiefFactor> factors;
};

/// Bottom-up chief series: each step pulls back the minimal normal subgroup
/// of the current quotient with the smallest order (ties broken by print).
ChiefSeries chief_series(const PermGroup& g);
/// Fills the pi flags of every factor.
void annotate_pi(ChiefSeries& series, const PiSet& pi);

/// U covers V/W when W(U ∩ V) = V. W must be normal in V.
bool covers(const Subgroup& u, const Subgroup& v, const Subgroup& w);

enum class Characteristic { center, derived, fitting, o_p, socle };
/// `p` is only read for Characteristic::o_p.
Subgroup characteristic_subgroup(const PermGroup& g, Characteristic which, std::uint64_t p = 0);
Subgroup center(const PermGroup& g);
Subgroup derived_subgroup(const PermGroup& g);
Subgroup o_p(const PermGroup& g, std::uint64_t p);
Subgroup fitting_subgroup(const PermGroup& g);
Subgroup socle(const PermGroup& g);

bool is_soluble(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);
/// H is reachable from G by a chain of successive normal subgroups.
bool is_subnormal(const PermGroup& g, const Subgroup& h);

/// A Sylow p-subgroup, grown one normalising p-element at a time.
Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p);

/// K normal, G = KH, K ∩ H = 1, K and H nontrivial, and no nontrivial h in H
/// centralises a nontrivial k in K.
bool is_frobenius_with(const PermGroup& g, const Subgroup& k, const Subgroup& h);
/// First (kernel, complement) pair over proper nontrivial normal K in
/// order-then-print order, or nullopt.
std::optional<std::pair<Subgroup, Subgroup>> frobenius_decomposition(const PermGroup& g);

/// The p'-elements form a subgroup of index |G|_p.
bool is_p_nilpotent(const PermGroup& g, std::uint64_t p);

struct DirectSplit {
  Subgroup abelian;  // D: central, of maximal order among those found
  Subgroup rest;     // Y: normal, D ∩ Y = 1, |D||Y| = |G|
  bool cap_bound = false;  // search skipped because |G| exceeded the cap
};
/// G = D x Y with D abelian of maximal order.
DirectSplit strip_abelian_direct_factors(const PermGroup& g);

}  // namespace pistruct
