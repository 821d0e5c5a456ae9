#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace asa {

/// Sieve of Eratosthenes over odd numbers; primes <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Visits every prime <= limit in ascending order using a segmented sieve.
/// Segments may be sieved concurrently; visitation order is always ascending.
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& visit,
                    unsigned threads = 1);

} // namespace asa
