#pragma once

#include <optional>
#include <vector>

#include "pistruct/group_ops.hpp"
#include "pistruct/primes.hpp"

namespace pistruct {

/// G = AB, with |A||B| = |G||A ∩ B| checked on construction.
struct Factorisation {
  PermGroup G;
  Subgroup A;
  Subgroup B;
  Order intersection_order = 1;
};

/// Throws InvalidArgument if A or B is not a subgroup of G, or AB != G.
Factorisation make_factorisation(const PermGroup& g, const Subgroup& a, const Subgroup& b);
/// G = A = B.
Factorisation trivial_factorisation(const PermGroup& g);

/// S = (S ∩ A)(S ∩ B).
bool is_prefactorised(const Factorisation& f, const Subgroup& s);
/// S = (S ∩ A)(S ∩ B) as a factorisation of S; S must be prefactorised.
Factorisation induced_factorisation(const Factorisation& f, const Subgroup& s);
/// G/M = (AM/M)(BM/M).
Factorisation quotient_factorisation(const Factorisation& f, const QuotientMap& q);

enum class CoreStart { a_first, b_first };
enum class CoreLabel { a, b, both };

struct CoreSeries {
  /// Strictly ascending: chain[0] = 1, one entry per nontrivial jump.
  std::vector<Subgroup> chain;
  std::vector<CoreLabel> labels;
  /// Greedy series only: preimages of core(A-bar) and core(B-bar) per jump.
  std::vector<std::pair<Subgroup, Subgroup>> parts;
  /// Alternating series only: every computed term, including repeats.
  std::vector<Subgroup> terms;
  bool terminated_at_G = false;
};

struct CoreDecision {
  bool is_core_factorisation = false;
  CoreSeries series;
};

/// Greedy ascent N_{i+1}/N_i = core(A-bar) core(B-bar) in G/N_i.
CoreDecision is_core_factorisation(const Factorisation& f);
/// The alternating core A-series (or B-series).
CoreSeries core_series(const Factorisation& f, CoreStart start);
/// Number of nontrivial jumps when the series reaches G.
std::optional<unsigned> core_length(const Factorisation& f, CoreStart start);

/// Brute force over chief series on the element table. Independent of the
/// stabiliser chain code. Throws ResourceLimit above the oracle cap.
bool core_factorisation_oracle(const Factorisation& f);

struct PrefactorisedHall {
  Subgroup H;
  /// Set when G = AB is a core-factorisation: whether H = (H∩A)(H∩B) is one.
  std::optional<bool> induced_is_core;
};

/// A Hall pi-subgroup H with H ∩ A, H ∩ B Hall in A, B and H = (H∩A)(H∩B).
/// Returns nullopt if A or B has no Hall pi-subgroup. Throws Error if the
/// search over conjugates is exhausted.
std::optional<PrefactorisedHall> prefactorised_hall(const Factorisation& f, const PiSet& pi);

}  // namespace pistruct
