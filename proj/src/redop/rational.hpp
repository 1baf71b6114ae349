#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace redop {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, zero as 0/1.
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
inline Rational rational_from_string(const std::string& text) {
    std::string s = text;
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    s = s.substr(first, last - first + 1);

    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace redop
