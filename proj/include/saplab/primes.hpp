#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace saplab {

// All primes <= limit in increasing order. Immutable after construction and
// safe to share across threads.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    bool contains(std::uint64_t n) const;  // binary search
    std::size_t size() const { return primes.size(); }
};

// Hard cap on sieve size so a typo cannot exhaust the machine; the primes
// vector alone reaches ~1.6 GiB at this limit.
inline constexpr std::uint64_t kMaxSieveLimit = 1ULL << 32;

// Segmented sieve of Eratosthenes. Throws std::domain_error for limit < 2 and
// std::runtime_error above kMaxSieveLimit.
PrimeTable sieve(std::uint64_t limit);

namespace detail {
// Segment length in values; exposed so tests can force boundary crossings.
PrimeTable sieve_segmented(std::uint64_t limit, std::size_t segment_length);
}

// Deterministic for every 64-bit input: Miller-Rabin with the fixed witness
// set {2,3,5,7,11,13,17,19,23,29,31,37}, which is exact for all n < 3.3e24.
bool is_prime(std::uint64_t n) noexcept;

// Consecutive primes p_prev2 < p_prev1 with no prime strictly between them.
struct PrimePair {
    std::uint64_t p_prev2 = 0;
    std::uint64_t p_prev1 = 0;
    friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

// Lazy ordered view over a table's consecutive pairs whose smaller member is
// >= start_min. Empty when fewer than two primes qualify. The view borrows
// the table's storage and must not outlive it.
class ConsecutivePairs {
public:
    class iterator {
    public:
        using value_type = PrimePair;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        explicit iterator(const std::uint64_t* p) : p_(p) {}
        PrimePair operator*() const { return {p_[0], p_[1]}; }
        iterator& operator++() { ++p_; return *this; }
        iterator operator++(int) { iterator t = *this; ++p_; return t; }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        const std::uint64_t* p_ = nullptr;
    };

    ConsecutivePairs(std::span<const std::uint64_t> primes, std::uint64_t start_min);

    iterator begin() const { return iterator(first_); }
    iterator end() const { return iterator(last_); }
    std::size_t size() const { return static_cast<std::size_t>(last_ - first_); }
    bool empty() const { return first_ == last_; }

private:
    const std::uint64_t* first_ = nullptr;
    const std::uint64_t* last_ = nullptr;
};

ConsecutivePairs consecutive_pairs(const PrimeTable& table, std::uint64_t start_min = 2);

} // namespace saplab
