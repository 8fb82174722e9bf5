// Copyright 2026 The nmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NMG_RATIONAL_HPP
#define NMG_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nmg {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Edge prices and all costs use this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "P/Q" or an integer literal. Floats, empty strings and zero
/// denominators throw std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "P/Q", or just "P" when the denominator is 1.
std::string to_string(const Rational& value);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);

/// floor/ceil narrowed to int64; throws std::overflow_error when out of range.
std::int64_t floor_i64(const Rational& value);
std::int64_t ceil_i64(const Rational& value);

}  // namespace nmg

#endif  // NMG_RATIONAL_HPP
