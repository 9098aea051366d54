#include "saplab/sap.hpp"

#include <stdexcept>

namespace saplab {

SapCoefficients sap_coefficients(unsigned degree) {
    SapCoefficients c;
    c.degree = degree;
    c.weights.reserve(degree + 1);
    for (unsigned q = 1; q <= degree + 1; ++q) {
        Integer w;
        mpz_bin_uiui(w.get_mpz_t(), degree + 1, q);
        if (q % 2 == 0) w = -w;
        c.weights.push_back(std::move(w));
    }
    return c;
}

namespace {

Rational apply_weights(const SapCoefficients& c, std::span<const Rational> values) {
    // weights[q-1] pairs with the q-th value from the end
    Rational acc;
    const std::size_t n = values.size();
    for (unsigned q = 1; q <= c.degree + 1; ++q)
        acc += Rational(c.weights[q - 1]) * values[n - q];
    return acc;
}

} // namespace

ExtrapolationResult extrapolate_next(const SampleWindow& window) {
    const unsigned m = window.declared_degree;
    if (window.values.size() < static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("extrapolate_next: need at least degree+1 samples, got " +
                                    std::to_string(window.values.size()));
    return {apply_weights(sap_coefficients(m), window.values), 1};
}

std::vector<ExtrapolationResult> extrapolate_k(const SampleWindow& window, unsigned k) {
    if (k == 0) throw std::invalid_argument("extrapolate_k: k must be >= 1");
    const unsigned m = window.declared_degree;
    if (window.values.size() < static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("extrapolate_k: need at least degree+1 samples, got " +
                                    std::to_string(window.values.size()));

    const SapCoefficients coeffs = sap_coefficients(m);
    std::vector<Rational> tail(window.values.end() - (m + 1), window.values.end());
    std::vector<ExtrapolationResult> out;
    out.reserve(k);
    for (unsigned step = 1; step <= k; ++step) {
        Rational next = apply_weights(coeffs, tail);
        out.push_back({next, step});
        tail.erase(tail.begin());
        tail.push_back(std::move(next));
    }
    return out;
}

Rational lagrange_extrapolate(std::span<const std::pair<Rational, Rational>> samples,
                              const Rational& target) {
    if (samples.empty())
        throw std::invalid_argument("lagrange_extrapolate: no samples");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("lagrange_extrapolate: duplicate abscissa " +
                                            to_string(samples[i].first));

    Rational acc;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        Rational term = samples[i].second;
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            term *= (target - samples[j].first) / (samples[i].first - samples[j].first);
        }
        acc += term;
    }
    return acc;
}

ShiftIdentityCheck verify_shift_identity(unsigned n, const Rational& x, const Rational& y) {
    const SapCoefficients coeffs = sap_coefficients(n);
    ShiftIdentityCheck check;
    check.lhs = rational_pow(x + y, n);
    for (unsigned q = 1; q <= n + 1; ++q) {
        Rational shifted = x + y - Rational(static_cast<long>(q));
        check.rhs += Rational(coeffs.weights[q - 1]) * rational_pow(shifted, n);
    }
    check.equal = check.lhs == check.rhs;
    return check;
}

double extrapolate_next_fp(std::span<const double> values, unsigned degree) {
    if (values.size() < static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("extrapolate_next_fp: need at least degree+1 samples");
    const std::size_t n = values.size();
    double acc = 0.0;
    double binom = 1.0;  // C(m+1, q) via C(m+1,q) = C(m+1,q-1) * (m+2-q)/q, exact below 2^53
    for (unsigned q = 1; q <= degree + 1; ++q) {
        binom = binom * static_cast<double>(degree + 2 - q) / static_cast<double>(q);
        acc += (q % 2 == 1 ? binom : -binom) * values[n - q];
    }
    return acc;
}

} // namespace saplab
