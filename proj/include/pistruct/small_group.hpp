#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "pistruct/group_ops.hpp"

namespace pistruct {

/// Element-indexed view of a small group, used by the exhaustive searches.
/// Subsets are boolean masks over the sorted element list.
class SmallGroup {
 public:
  using Mask = std::vector<bool>;

  explicit SmallGroup(const PermGroup& g);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t index(const Permutation& x) const { return index_.at(x); }
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const { return inverse_[i]; }

  /// Subgroup generated by the indexed elements.
  Mask generate(const std::vector<std::size_t>& gens) const;
  Mask mask_of(const Subgroup& h) const;
  Subgroup subgroup_of(const Mask& m) const;

  /// Every subgroup generated by elements passing `allow` whose order
  /// divides `order_bound`, found as joins of cyclic subgroups. Throws
  /// ResourceLimit past the subgroup search cap.
  std::vector<Mask> subgroups(const std::function<bool(const Permutation&)>& allow,
                              Order order_bound) const;

  static std::size_t count(const Mask& m);

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> table_;  // filled when the group is small
};

}  // namespace pistruct
