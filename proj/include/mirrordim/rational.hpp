/*
   Copyright 2026 The mirrordim authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MIRRORDIM_RATIONAL_HPP
#define MIRRORDIM_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "mirrordim/errors.hpp"

namespace mirrordim {

// Exact arithmetic only; there is no floating-point mode anywhere.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline bool fits_int64(const BigInt& z) {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    return z >= lo && z <= hi;
}

inline std::int64_t to_int64(const BigInt& z) {
    if (!fits_int64(z)) throw Error("to_int64: value out of range: " + z.get_str());
    // mpz fits_slong covers 64-bit long on LP64; go through the string
    // otherwise to stay portable.
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return std::stoll(z.get_str());
}

}  // namespace mirrordim

#endif
