#include "saplab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace saplab {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    // strict grammar: [-]digits[/digits], no whitespace (GMP's own parser is
    // more permissive than we want on a CLI surface)
    const std::size_t slash = text.find('/');
    const std::size_t num_begin = (!text.empty() && text[0] == '-') ? 1 : 0;
    const std::size_t num_end = slash == std::string::npos ? text.size() : slash;
    bool ok = all_digits(text, num_begin, num_end);
    if (ok && slash != std::string::npos) ok = all_digits(text, slash + 1, text.size());
    if (!ok) throw std::invalid_argument("not a rational number: '" + text + "'");

    Rational q(text, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    // powers of a canonical fraction stay coprime, no canonicalize needed
    return r;
}

} // namespace saplab
