#pragma once

#include <gmpxx.h>

#include <string>

#include "ietflip/errors.hpp"

namespace ietflip {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw OutOfRange("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw OutOfRange("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "7", "-3/4"
inline Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace ietflip
