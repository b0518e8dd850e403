#include "pistruct/primes.hpp"

#include <algorithm>
#include <charconv>

#include "pistruct/error.hpp"

namespace pistruct {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

bool is_prime_power_or_one(std::uint64_t n) { return n == 1 || prime_power_base(n).has_value(); }

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

PiSet::PiSet(std::initializer_list<std::uint64_t> primes) : PiSet(std::vector<std::uint64_t>(primes)) {}

PiSet::PiSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_)
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PiSet PiSet::parse(std::string_view text) {
  std::vector<std::uint64_t> primes;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed prime list entry '" + std::string(token) + "'", pos);
    if (!is_prime(value)) throw ParseError(std::to_string(value) + " is not prime", pos);
    primes.push_back(value);
    pos = end + 1;
    if (end + 1 == text.size()) throw ParseError("trailing comma in prime list", end);
  }
  return PiSet(std::move(primes));
}

bool PiSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PiSet::is_pi_number(std::uint64_t n) const { return pi_part(n) == n; }

bool PiSet::is_pi_prime_number(std::uint64_t n) const { return pi_part(n) == 1; }

std::uint64_t PiSet::pi_part(std::uint64_t n) const {
  std::uint64_t part = 1;
  for (auto p : primes_) part *= p_part(n, p);
  return part;
}

PiSet PiSet::complement_within(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(n))
    if (!contains(p)) out.push_back(p);
  return PiSet(std::move(out));
}

std::string PiSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(primes_[i]);
  }
  return s;
}

}  // namespace pistruct
