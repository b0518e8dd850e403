#include "pistruct/small_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "pistruct/error.hpp"

namespace pistruct {

namespace {
constexpr std::size_t kTableLimit = 1500;
}

SmallGroup::SmallGroup(const PermGroup& g) : group_(g), elements_(g.elements()) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_.at(elements_[i].inverse());
  if (elements_.size() <= kTableLimit) {
    const std::size_t n = elements_.size();
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table_[i * n + j] = static_cast<std::uint32_t>(index_.at(elements_[i] * elements_[j]));
  }
}

std::size_t SmallGroup::mul(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * elements_.size() + j];
  return index_.at(elements_[i] * elements_[j]);
}

SmallGroup::Mask SmallGroup::generate(const std::vector<std::size_t>& gens) const {
  Mask m(size(), false);
  m[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto s : gens) {
      std::size_t y = mul(queue[head], s);
      if (!m[y]) {
        m[y] = true;
        queue.push_back(y);
      }
    }
  }
  return m;
}

SmallGroup::Mask SmallGroup::mask_of(const Subgroup& h) const {
  Mask m(size(), false);
  for (const auto& x : h.elements()) m[index(x)] = true;
  return m;
}

Subgroup SmallGroup::subgroup_of(const Mask& m) const {
  std::vector<Permutation> members;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) members.push_back(elements_[i]);
  return subgroup_from_elements(group_.degree(), members);
}

std::size_t SmallGroup::count(const Mask& m) { return static_cast<std::size_t>(std::count(m.begin(), m.end(), true)); }

std::vector<SmallGroup::Mask> SmallGroup::subgroups(
    const std::function<bool(const Permutation&)>& allow, Order order_bound) const {
  const std::size_t cap = limits().subgroup_search_cap;
  Mask trivial(size(), false);
  trivial[0] = true;

  std::vector<std::pair<Mask, std::size_t>> cyclic;
  std::unordered_set<Mask> seen_cyclic;
  for (std::size_t i = 1; i < size(); ++i) {
    if (!allow(elements_[i])) continue;
    Mask c = generate({i});
    if (order_bound % count(c) != 0) continue;
    if (seen_cyclic.insert(c).second) cyclic.emplace_back(std::move(c), i);
  }

  std::vector<Mask> found{trivial};
  std::vector<std::vector<std::size_t>> gens{{}};
  std::unordered_set<Mask> seen{trivial};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& [c, gen] : cyclic) {
      if (found[head][gen]) continue;
      auto joined_gens = gens[head];
      joined_gens.push_back(gen);
      Mask joined = generate(joined_gens);
      if (order_bound % count(joined) != 0) continue;
      if (!seen.insert(joined).second) continue;
      found.push_back(std::move(joined));
      gens.push_back(std::move(joined_gens));
      if (found.size() > cap) throw ResourceLimit("subgroup search exceeded cap");
    }
  }
  return found;
}

}  // namespace pistruct
