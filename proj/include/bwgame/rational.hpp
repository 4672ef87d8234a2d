// Copyright 2026 The bwgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BWGAME_RATIONAL_HPP_
#define BWGAME_RATIONAL_HPP_

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace bwgame {

// Exact rationals. Expression templates are off so that generic code can
// use `auto` on arithmetic results safely.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts integers, decimals ("0.25", "-1.5e-3") and fractions ("2/3").
// Decimals are converted exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Integer, terminating decimal, or "p/q" -- whichever is exact.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

// Exact binary expansion of a finite double.
Rational from_double(double value);

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Rational>;

template <Scalar T>
inline T from_rational(const Rational& value) {
  if constexpr (std::is_same_v<T, double>) {
    return to_double(value);
  } else {
    return value;
  }
}

template <Scalar T>
inline double as_double(const T& value) {
  if constexpr (std::is_same_v<T, double>) {
    return value;
  } else {
    return to_double(value);
  }
}

template <Scalar T>
inline Rational as_rational(const T& value) {
  if constexpr (std::is_same_v<T, double>) {
    return from_double(value);
  } else {
    return value;
  }
}

template <Scalar T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <Scalar T>
inline T abs_value(const T& value) {
  return value < T(0) ? T(-value) : value;
}

template <Scalar T>
std::vector<T> convert_vector(const std::vector<Rational>& values) {
  std::vector<T> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(from_rational<T>(v));
  return out;
}

}  // namespace bwgame

#endif  // BWGAME_RATIONAL_HPP_
