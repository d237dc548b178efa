#include "ptg/rational.hpp"

#include <cctype>

namespace ptg {

namespace {

bool is_integer_token(const std::string& s, std::size_t begin, std::size_t end, bool allow_sign) {
    std::size_t i = begin;
    if (i < end && allow_sign && (s[i] == '-' || s[i] == '+')) ++i;
    if (i >= end) return false;
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

std::optional<Rat> try_parse_rat(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, 0, text.size(), true)) return std::nullopt;
        Rat r;
        if (r.set_str(text, 10) != 0) return std::nullopt;
        return r;
    }
    if (!is_integer_token(text, 0, slash, true)) return std::nullopt;
    if (!is_integer_token(text, slash + 1, text.size(), false)) return std::nullopt;
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) return std::nullopt;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace ptg
