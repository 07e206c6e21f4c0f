#pragma once

#include <boost/rational.hpp>
#include <string>

namespace gspin {

// Exact rational scalar used throughout; no floating point anywhere.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& q) {
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace gspin
