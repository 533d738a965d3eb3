#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace sigmat {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace sigmat
