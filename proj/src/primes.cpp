#include "saplab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace saplab {

bool PrimeTable::contains(std::uint64_t n) const {
    return std::binary_search(primes.begin(), primes.end(), n);
}

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// plain sieve; only used for the base primes up to sqrt(limit)
std::vector<std::uint64_t> small_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<char> mark(limit + 1, 1);
    mark[0] = mark[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (mark[i]) primes.push_back(i);
    return primes;
}

} // namespace

namespace detail {

PrimeTable sieve_segmented(std::uint64_t limit, std::size_t segment_length) {
    if (limit < 2) throw std::domain_error("sieve: limit must be >= 2, got " + std::to_string(limit));
    if (limit > kMaxSieveLimit)
        throw std::runtime_error("sieve: limit " + std::to_string(limit) +
                                 " exceeds the memory budget (max " + std::to_string(kMaxSieveLimit) + ")");
    if (segment_length == 0) segment_length = 1;

    PrimeTable table;
    table.limit = limit;
    if (limit >= 100) {
        double dl = static_cast<double>(limit);
        table.primes.reserve(static_cast<std::size_t>(dl / (std::log(dl) - 1.2)) + 16);
    }

    const std::vector<std::uint64_t> base = small_sieve(isqrt_u64(limit));
    std::vector<char> seg;
    for (std::uint64_t low = 2; low <= limit; low += segment_length) {
        const std::uint64_t high = std::min(limit, low + segment_length - 1);
        seg.assign(static_cast<std::size_t>(high - low + 1), 1);
        for (std::uint64_t p : base) {
            if (p * p > high) break;
            // first multiple of p in the segment, never p itself
            std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (std::uint64_t v = low; v <= high; ++v)
            if (seg[v - low]) table.primes.push_back(v);
    }
    return table;
}

} // namespace detail

PrimeTable sieve(std::uint64_t limit) {
    return detail::sieve_segmented(limit, std::size_t{1} << 18);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// true iff `a` proves n composite; n odd, n - 1 = 2^r * d with d odd
bool witness_composite(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

constexpr std::initializer_list<std::uint64_t> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                             17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : kWitnesses)
        if (witness_composite(n, a, d, r)) return false;
    return true;
}

ConsecutivePairs::ConsecutivePairs(std::span<const std::uint64_t> primes, std::uint64_t start_min) {
    const std::uint64_t* base = primes.data();
    const std::uint64_t* first = std::lower_bound(base, base + primes.size(), start_min);
    const std::uint64_t* last = base + primes.size();
    if (last - first < 2) {
        first_ = last_ = nullptr;
    } else {
        first_ = first;
        last_ = last - 1;  // a pair needs a successor
    }
}

ConsecutivePairs consecutive_pairs(const PrimeTable& table, std::uint64_t start_min) {
    return ConsecutivePairs(table.primes, start_min);
}

} // namespace saplab
