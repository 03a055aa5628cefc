// rational.hpp — exact rational scalar used throughout the Cartan/weight layer.
#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>

namespace sl4 {

using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline long long illcm(long long a, long long b) { return std::lcm(a, b); }

}  // namespace sl4
