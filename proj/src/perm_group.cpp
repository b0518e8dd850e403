#include "pistruct/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <unordered_set>

#include "pistruct/error.hpp"

namespace pistruct {

namespace {
Limits g_limits;
}

const Limits& limits() { return g_limits; }
void set_limits(const Limits& l) { g_limits = l; }

struct PermGroup::Cache {
  std::once_flag once;
  std::vector<Permutation> elements;
};

PermGroup::PermGroup() : cache_(std::make_shared<Cache>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " + std::to_string(degree));
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
  schreier_sims();
}

PermGroup PermGroup::generated_by(std::size_t degree, const std::vector<Permutation>& candidates) {
  PermGroup group = trivial(degree);
  std::vector<Permutation> gens;
  for (const auto& c : candidates) {
    if (group.contains(c)) continue;
    gens.push_back(c);
    group = PermGroup(degree, gens);
  }
  return group;
}

void PermGroup::add_level(Point base) {
  Level level;
  level.base = base;
  level.label.assign(degree_, -1);
  levels_.push_back(std::move(level));
}

void PermGroup::compute_orbit(Level& level) const {
  std::fill(level.label.begin(), level.label.end(), -1);
  level.orbit.clear();
  level.label[level.base] = -2;
  level.orbit.push_back(level.base);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point p = level.orbit[head];
    for (std::size_t j = 0; j < level.gens.size(); ++j) {
      Point q = level.gens[j](p);
      if (level.label[q] == -1) {
        level.label[q] = static_cast<std::int32_t>(j);
        level.orbit.push_back(q);
      }
    }
  }
}

void PermGroup::add_generator(std::size_t level, const Permutation& g) {
  levels_[level].gens.push_back(g);
  levels_[level].gens_inv.push_back(g.inverse());
  compute_orbit(levels_[level]);
}

Permutation PermGroup::transversal(const Level& level, Point b) const {
  // Walk the Schreier tree back to the base, then multiply outward.
  std::vector<std::int32_t> path;
  while (level.label[b] != -2) {
    auto j = level.label[b];
    path.push_back(j);
    b = level.gens_inv[static_cast<std::size_t>(j)](b);
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * level.gens[static_cast<std::size_t>(*it)];
  return u;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point b = g(level.base);
    if (level.label[b] == -1) return {std::move(g), i};
    while (level.label[b] != -2) {
      auto j = static_cast<std::size_t>(level.label[b]);
      g = g * level.gens_inv[j];
      b = level.gens_inv[j](b);
    }
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  levels_.clear();
  order_ = 1;
  if (generators_.empty()) return;

  std::vector<Point> base;
  for (const auto& g : generators_) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return g(b) == b; });
    if (fixes_base) base.push_back(g.first_moved_point());
  }
  for (Point b : base) add_level(b);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t k = 0; k < i; ++k)
        if (g(levels_[k].base) != levels_[k].base) fixes_prefix = false;
      if (fixes_prefix) {
        levels_[i].gens.push_back(g);
        levels_[i].gens_inv.push_back(g.inverse());
      }
    }
    compute_orbit(levels_[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    bool restart = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restart; ++oi) {
      Point b = levels_[li].orbit[oi];
      Permutation ub = transversal(levels_[li], b);
      for (std::size_t s = 0; s < levels_[li].gens.size(); ++s) {
        const Permutation& gen = levels_[li].gens[s];
        Point c = gen(b);
        Permutation schreier = ub * gen * transversal(levels_[li], c).inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = sift(std::move(schreier), li + 1);
        if (j == levels_.size() && residue.is_identity()) continue;
        if (j == levels_.size()) add_level(residue.first_moved_point());
        for (std::size_t l = li + 1; l <= j; ++l) add_generator(l, residue);
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }

  for (const auto& level : levels_) {
    Order len = level.orbit.size();
    if (order_ > std::numeric_limits<Order>::max() / len)
      throw ResourceLimit("group order overflows 64 bits");
    order_ *= len;
  }
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, j] = sift(g, 0);
  return j == levels_.size() && residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a)
    for (std::size_t b = a + 1; b < generators_.size(); ++b)
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) return false;
  return true;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  return levels_.empty() ? std::vector<Permutation>{} : levels_.front().gens;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (order_ > limits().enumeration_cap)
    throw ResourceLimit("group of order " + std::to_string(order_) + " exceeds enumeration cap " +
                        std::to_string(limits().enumeration_cap));
  std::call_once(cache_->once, [this] {
    // Products of transversal elements, one per level.
    std::vector<Permutation> out{Permutation(degree_)};
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
      std::vector<Permutation> reps;
      reps.reserve(it->orbit.size());
      for (Point b : it->orbit) reps.push_back(transversal(*it, b));
      std::vector<Permutation> next;
      next.reserve(out.size() * reps.size());
      for (const auto& x : out)
        for (const auto& u : reps) next.push_back(x * u);
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    cache_->elements = std::move(out);
  });
  return cache_->elements;
}

std::string PermGroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ',';
    s += generators_[i].to_string();
  }
  return s + ">";
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.order_ == b.order_ && a.is_subgroup_of(b);
}

std::vector<Permutation> enumerate_by_closure(const PermGroup& g, Order cap) {
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> queue{Permutation(g.degree())};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : g.generators()) {
      Permutation next = queue[head] * s;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw ResourceLimit("closure exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace pistruct
