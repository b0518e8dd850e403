#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pistruct/permutation.hpp"

namespace pistruct {

using Order = std::uint64_t;

/// Resource caps shared by every search and enumeration in the library.
/// Operations that would exceed a cap throw ResourceLimit instead of
/// approximating.
struct Limits {
  /// Maximum group order that may be enumerated element by element.
  Order enumeration_cap = 2'000'000;
  /// Maximum number of cosets in a quotient's coset action.
  std::size_t quotient_degree_cap = 100'000;
  /// Maximum order for the abelian direct factor search.
  Order direct_factor_cap = 5000;
  /// Maximum order accepted by the brute-force chief series oracle.
  Order oracle_cap = 200;
  /// Maximum number of subgroups visited by exhaustive subgroup searches.
  std::size_t subgroup_search_cap = 200'000;
};

/// Process-wide limits. Set once at startup, then treated as read-only.
const Limits& limits();
void set_limits(const Limits& l);

/// A permutation group given by generators, with a base and strong
/// generating set built by the deterministic Schreier-Sims algorithm.
///
/// Base points are chosen as the smallest point moved by the generator that
/// forces a new level. Instances are immutable; the lazily built element list
/// is shared between copies and guarded by a once-flag.
class PermGroup {
 public:
  /// Trivial group of degree 0.
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  /// Subgroup generated by `candidates`, keeping only those that enlarge the
  /// group built so far (in input order).
  static PermGroup generated_by(std::size_t degree, const std::vector<Permutation>& candidates);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  Order order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  bool contains(const Permutation& g) const;
  /// True if every generator of `this` lies in `other`.
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_abelian() const;

  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  std::vector<std::size_t> orbit_lengths() const;

  /// Every element exactly once, sorted by image table (identity first).
  /// Throws ResourceLimit when order() exceeds the enumeration cap.
  const std::vector<Permutation>& elements() const;

  /// "<g1,g2,...>" with generators in cycle notation.
  std::string to_string() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> gens_inv;
    std::vector<std::int32_t> label;  // -1 outside orbit, -2 base point, else index into gens
    std::vector<Point> orbit;
  };
  struct Cache;

  void schreier_sims();
  void add_level(Point base);
  void add_generator(std::size_t level, const Permutation& g);
  void compute_orbit(Level& level) const;
  Permutation transversal(const Level& level, Point b) const;
  /// Strips `g` through levels starting at `from`; returns the residue and
  /// the level at which sifting stopped (levels_.size() if it passed all).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  Order order_ = 1;
  std::shared_ptr<Cache> cache_;
};

/// Exhaustive closure of the generators under multiplication, independent of
/// the stabiliser chain. Throws ResourceLimit past `cap` elements.
std::vector<Permutation> enumerate_by_closure(const PermGroup& g, Order cap);

}  // namespace pistruct
