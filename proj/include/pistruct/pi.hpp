#pragma once

#include <optional>
#include <vector>

#include "pistruct/group_ops.hpp"
#include "pistruct/primes.hpp"

namespace pistruct {

enum class PiFilter { all, prime_power_only };

/// Elements of pi-order, in sorted element order. The identity is included.
std::vector<Permutation> pi_elements(const PermGroup& g, const PiSet& pi,
                                     PiFilter filter = PiFilter::all);

bool is_pi_group(const PermGroup& g, const PiSet& pi);
bool is_pi_prime_group(const PermGroup& g, const PiSet& pi);

/// Largest normal pi-subgroup.
Subgroup o_pi(const PermGroup& g, const PiSet& pi);
/// Largest normal pi'-subgroup.
Subgroup o_pi_prime(const PermGroup& g, const PiSet& pi);
/// O_{pi,pi'}(G): the preimage of O_pi'(G / O_pi(G)).
Subgroup o_pi_pi_prime(const PermGroup& g, const PiSet& pi);

enum class PiLabel { pi, pi_prime };

struct PiSeries {
  std::vector<Subgroup> chain;  // chain[0] = 1
  std::vector<PiLabel> labels;  // labels[i] describes chain[i+1]/chain[i]
  bool reaches_group = false;
  unsigned pi_length = 0;
};

/// 1 <= O_pi' <= O_pi'pi <= ... with empty jumps skipped. Stops when the
/// series reaches G or stalls.
PiSeries upper_pi_series(const PermGroup& g, const PiSet& pi);
bool is_pi_separable(const PermGroup& g, const PiSet& pi);
unsigned pi_length(const PermGroup& g, const PiSet& pi);

/// A Hall pi-subgroup, or nullopt when none exists (only possible for
/// groups that are not pi-separable). Throws ResourceLimit when a search
/// cap is hit.
std::optional<Subgroup> hall_subgroup(const PermGroup& g, const PiSet& pi);
/// The distinct G-conjugates of H, in discovery order starting with H.
std::vector<Subgroup> hall_conjugates(const PermGroup& g, const PiSet& pi, const Subgroup& h);
/// Every subgroup of order |G|_pi, by exhaustive search.
std::vector<Subgroup> hall_subgroups_exhaustive(const PermGroup& g, const PiSet& pi);

bool is_pi_decomposable(const PermGroup& g, const PiSet& pi);

}  // namespace pistruct
