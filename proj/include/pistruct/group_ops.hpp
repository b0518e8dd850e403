#pragma once

#include <memory>
#include <span>
#include <vector>

#include "pistruct/perm_group.hpp"

namespace pistruct {

/// Subgroups are ordinary PermGroups of the ambient degree; containment in
/// the ambient group is checked where an operation depends on it.
using Subgroup = PermGroup;

Subgroup conjugate(const Subgroup& h, const Permutation& g);
/// Subgroup generated by the union of generators.
Subgroup join(const Subgroup& a, const Subgroup& b);
bool is_normal(const PermGroup& g, const Subgroup& n);
/// Subgroup of `g` containing exactly the elements of the given list.
Subgroup subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& elements);

/// {x : x in h and x in k}, by filtering the smaller group through the
/// larger one's membership test.
Subgroup intersect(const Subgroup& h, const Subgroup& k);
/// |hk| = |h||k| / |h ∩ k|.
Order product_order(const Subgroup& h, const Subgroup& k);

Subgroup centraliser(const PermGroup& g, std::span<const Permutation> s);
Subgroup centraliser(const PermGroup& g, const Subgroup& h);
Subgroup normaliser(const PermGroup& g, const Subgroup& h);

/// The natural map G -> G/N, realised as the action of G on the right
/// cosets of N. When N is trivial the map is the identity on G.
class QuotientMap {
 public:
  const PermGroup& source() const;
  const Subgroup& kernel() const;
  const PermGroup& image() const;
  bool is_identity_map() const;
  std::size_t coset_count() const;

  Permutation forward(const Permutation& x) const;
  /// A preimage of an element of the image.
  Permutation lift(const Permutation& y) const;
  Subgroup image_of(const Subgroup& h) const;
  /// Full preimage of a subgroup of the image; contains the kernel.
  Subgroup preimage(const Subgroup& hbar) const;

 struct Data;

 private:
  explicit QuotientMap(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  friend QuotientMap quotient(const PermGroup& g, const Subgroup& n);
  std::shared_ptr<const Data> data_;
};

/// Throws InvalidArgument if `n` is not a normal subgroup of `g`, and
/// ResourceLimit if the coset count exceeds the quotient degree cap.
QuotientMap quotient(const PermGroup& g, const Subgroup& n);

/// Moves `g` to points offset..offset+g.degree()-1 of a larger domain.
Permutation embed(const Permutation& g, std::size_t offset, std::size_t degree);

/// Disjoint-union action; degree is the sum of the degrees.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

struct PowerMapSemidirect {
  PermGroup group;
  /// Multiplicative order of the multiplier modulo n.
  std::uint64_t multiplier_order;
};
/// <i -> i+1, i -> k*i> acting on Z/n. Requires gcd(k, n) == 1.
PowerMapSemidirect semidirect_by_power_map(std::uint64_t n, std::uint64_t k);

/// Base copies of `g` on m blocks of size g.degree(), with the cyclic block
/// shift as top group. Requires m >= 2.
PermGroup wreath_natural(const PermGroup& g, std::size_t m);

PermGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on n points.
PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);

}  // namespace pistruct
