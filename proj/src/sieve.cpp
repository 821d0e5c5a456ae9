#include "asa/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace asa {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2)
        return primes;
    primes.push_back(2);
    // index i represents 2i + 1
    std::vector<bool> composite(limit / 2 + 1, false);
    for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t j = p * p; j <= limit; j += 2 * p)
            composite[j / 2] = true;
    }
    return primes;
}

namespace {

constexpr std::uint64_t kSegment = 1u << 18;

// Marks primes in [lo, hi) (lo odd-aligned handling done by caller).
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<std::uint32_t>& base) {
    std::vector<char> is_prime(hi - lo, 1);
    for (std::uint32_t p32 : base) {
        const std::uint64_t p = p32;
        if (p * p >= hi)
            break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t j = start; j < hi; j += p)
            is_prime[j - lo] = 0;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n)
        if (is_prime[n - lo])
            out.push_back(n);
    return out;
}

} // namespace

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& visit,
                    unsigned threads) {
    if (limit < 2)
        return;
    const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<long double>(limit)) + 2);
    const std::vector<std::uint32_t> base = primes_up_to(root);
    threads = std::max(1u, threads);

    std::uint64_t lo = 0;
    const std::uint64_t end = limit + 1;
    while (lo < end) {
        std::vector<std::vector<std::uint64_t>> batch(threads);
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t a = lo + t * kSegment;
            if (a >= end)
                break;
            const std::uint64_t b = std::min(end, a + kSegment);
            if (threads == 1)
                batch[t] = sieve_segment(a, b, base);
            else
                workers.emplace_back([&batch, &base, t, a, b] { batch[t] = sieve_segment(a, b, base); });
        }
        for (auto& w : workers)
            w.join();
        for (const auto& segment : batch)
            for (std::uint64_t p : segment)
                visit(p);
        lo += threads * kSegment;
    }
}

} // namespace asa
