#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pistruct {

bool is_prime(std::uint64_t n);
/// Prime factorisation as ascending (prime, exponent) pairs; empty for n = 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
/// pi(n): the ascending prime divisors of n.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// The prime p if n = p^k with k >= 1, otherwise nullopt (also for n = 1).
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);
/// n = 1 or n = p^k.
bool is_prime_power_or_one(std::uint64_t n);
/// Largest divisor of n that is a power of p.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// A finite set of primes. A positive integer is a pi-number when all of
/// its prime divisors lie in the set, and a pi'-number when none do.
class PiSet {
 public:
  PiSet() = default;
  /// Throws InvalidArgument if an entry is not prime.
  PiSet(std::initializer_list<std::uint64_t> primes);
  explicit PiSet(std::vector<std::uint64_t> primes);

  /// Parses "2,3,11". Throws ParseError on malformed text or non-primes.
  static PiSet parse(std::string_view text);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(std::uint64_t p) const;

  bool is_pi_number(std::uint64_t n) const;
  bool is_pi_prime_number(std::uint64_t n) const;
  std::uint64_t pi_part(std::uint64_t n) const;
  std::uint64_t pi_prime_part(std::uint64_t n) const { return n / pi_part(n); }

  /// The primes of `n` outside this set: the set pi' restricted to pi(n).
  PiSet complement_within(std::uint64_t n) const;

  /// "2,3,11"; "" for the empty set.
  std::string to_string() const;

  friend bool operator==(const PiSet&, const PiSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace pistruct
