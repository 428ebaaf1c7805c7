#pragma once

#include <gmpxx.h>

#include <string>

#include "weakpi/error.hpp"

namespace weakpi {

using rational = mpq_class;
using integer = mpz_class;

/// "p" for integral values, "p/q" otherwise.
inline std::string to_string(const rational& q) { return q.get_str(); }

/// Always "p/q", including integral values ("-2/1").
inline std::string to_fraction_string(const rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline rational parse_rational(const std::string& text) {
    rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw argument_error("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace weakpi
