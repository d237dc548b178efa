#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "ptg/errors.hpp"

namespace ptg {

// Exact rational scalar. GMP keeps results canonical (denominator > 0,
// gcd(num, den) = 1) as long as inputs are canonical, which every
// constructor below guarantees.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

// Parses "p/q" or "n" with an optional leading minus. Rejects zero
// denominators and anything else that is not a plain base-10 rational.
std::optional<Rat> try_parse_rat(const std::string& text);

inline Rat parse_rat(const std::string& text) {
    auto r = try_parse_rat(text);
    if (!r) throw usage_error("BadRational", "cannot parse rational '" + text + "'");
    return *r;
}

// Serializes to the same grammar: "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// GMP rational arithmetic assumes canonical operands, so every num/den
// construction must go through here.
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return abs(r); }

}  // namespace ptg
