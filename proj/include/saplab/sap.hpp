#pragma once

#include "saplab/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace saplab {

// Extrapolation weights for a degree-m polynomial over unit-spaced samples:
//
//   next = sum_{q=1}^{m+1} w_q * sample[end - q],   w_q = (-1)^(q+1) * C(m+1, q)
//
// The weights alternate in sign starting positive, their absolute values are
// symmetric, and they sum to 1. Equivalently: the (m+1)-th forward difference
// of a degree-m polynomial's samples vanishes.
struct SapCoefficients {
    unsigned degree = 0;           // m
    std::vector<Integer> weights;  // weights[q-1] applies to the q-th sample from the end
};

SapCoefficients sap_coefficients(unsigned degree);

// An ordered run of samples at consecutive unit-spaced abscissae, oldest
// first. No x-values are stored: any uniform spacing yields the same next
// value, so unit spacing is a normalization, not a restriction.
struct SampleWindow {
    std::vector<Rational> values;
    unsigned declared_degree = 0;  // m; only the trailing m+1 values are consumed
};

struct ExtrapolationResult {
    Rational value;
    unsigned steps_ahead = 1;
};

// Next sample of the degree-m polynomial through the trailing m+1 window
// values. Exact. Throws std::invalid_argument with fewer than m+1 samples.
ExtrapolationResult extrapolate_next(const SampleWindow& window);

// k successive one-step extrapolations, each feeding its output back into the
// window; returns the values k steps ahead in order. Requires k >= 1.
std::vector<ExtrapolationResult> extrapolate_k(const SampleWindow& window, unsigned k);

// Evaluates the unique polynomial through `samples` at `target` with exact
// arithmetic. This is the general-spacing oracle the unit-spaced rule is
// checked against. Throws std::invalid_argument on empty input or duplicate
// abscissae.
Rational lagrange_extrapolate(std::span<const std::pair<Rational, Rational>> samples,
                              const Rational& target);

struct ShiftIdentityCheck {
    bool equal = false;
    Rational lhs;  // (x + y)^n
    Rational rhs;  // sum_q w_q * (x + (y - q))^n with m = n
};

// Reconstructs (x+y)^n from its n+1 previous unit shifts and reports both
// sides. Holds for every n >= 0 and all rational x, y.
ShiftIdentityCheck verify_shift_identity(unsigned n, const Rational& x, const Rational& y);

// Floating-point fast path evaluating the same rule in double. Stays within
// relative 1e-9 of the exact result for moderate degrees and magnitudes; use
// the exact entry points when that is not good enough.
double extrapolate_next_fp(std::span<const double> values, unsigned degree);

} // namespace saplab
