#pragma once

// Test-only reference implementations. Everything here is deliberately naive
// (trial division, explicit candidate loops, Horner evaluation) and shares no
// code with the library paths it cross-checks.

#include "saplab/conjecture.hpp"
#include "saplab/rational.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace oracle {

inline bool trial_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> trial_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (trial_is_prime(n)) primes.push_back(n);
    return primes;
}

// a0 + a1*x + ... Horner from the top coefficient down
inline saplab::Rational eval_poly(std::span<const saplab::Integer> coeffs,
                                  const saplab::Rational& x) {
    saplab::Rational acc;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * x + saplab::Rational(coeffs[i]);
    return acc;
}

inline std::vector<saplab::Rational> forward_difference(std::vector<saplab::Rational> v) {
    std::vector<saplab::Rational> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
    return out;
}

struct ScanRecord {
    std::uint64_t p_prev2 = 0;
    std::uint64_t p_prev1 = 0;
    std::uint64_t midpoint = 0;
    std::vector<std::uint64_t> primes_found;
    bool hit = false;
};

// Full re-derivation of the window scan: its own prime list, its own pair
// loop, explicit candidates per mode, trial-division primality.
inline std::vector<ScanRecord> scan_by_hand(std::uint64_t limit, saplab::WindowMode mode,
                                            std::uint64_t min_midpoint) {
    const std::vector<std::uint64_t> primes = trial_primes(limit);
    std::vector<ScanRecord> out;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        ScanRecord rec;
        rec.p_prev2 = primes[i];
        rec.p_prev1 = primes[i + 1];
        rec.midpoint = 2 * rec.p_prev1 - rec.p_prev2;
        if (rec.midpoint < min_midpoint) continue;
        switch (mode) {
            case saplab::WindowMode::strict:
                if (trial_is_prime(rec.midpoint - 2)) rec.primes_found.push_back(rec.midpoint - 2);
                if (trial_is_prime(rec.midpoint + 2)) rec.primes_found.push_back(rec.midpoint + 2);
                break;
            case saplab::WindowMode::odd3:
                for (std::uint64_t c : {rec.midpoint - 2, rec.midpoint, rec.midpoint + 2})
                    if (trial_is_prime(c)) rec.primes_found.push_back(c);
                break;
            case saplab::WindowMode::interval:
                for (std::uint64_t c = rec.midpoint - 2; c <= rec.midpoint + 2; ++c)
                    if (trial_is_prime(c)) rec.primes_found.push_back(c);
                break;
        }
        rec.hit = !rec.primes_found.empty();
        out.push_back(std::move(rec));
    }
    return out;
}

// Twin pairs by direct enumeration: odd n with n and n+2 both prime.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> twins_by_hand(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t n = 3; n <= limit; n += 2)
        if (trial_is_prime(n) && trial_is_prime(n + 2)) out.emplace_back(n, n + 2);
    return out;
}

} // namespace oracle
