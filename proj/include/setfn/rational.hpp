// Copyright 2026 The Setfn Authors.
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace setfn {

// Exact arbitrary-precision rational, kept in lowest terms with a positive
// denominator. The only value type in the library; nothing is ever rounded.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside an operation's domain.
class domain_error : public error {
 public:
  using error::error;
};

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

inline bool is_integer(const Rat& value) { return denominator(value) == 1; }

// True when the value lies in Z/2.
inline bool is_half_integer(const Rat& value) {
  return denominator(value) == 1 || denominator(value) == 2;
}

inline std::string to_string(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

// Parses an optional-sign integer or "p/q" with q a positive integer.
inline Rat parse_rat(std::string_view text) {
  const auto malformed = [&] {
    return domain_error("malformed rational '" + std::string(text) + "'");
  };
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto all_digits = [](std::string_view s) {
    return !s.empty() &&
           s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  std::string_view num = rest;
  std::string_view den;
  if (const auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    if (!all_digits(den)) throw malformed();
  }
  if (!all_digits(num)) throw malformed();
  Int n{std::string(num)};
  if (negative) n = -n;
  return make_rat(std::move(n), den.empty() ? Int(1) : Int{std::string(den)});
}

}  // namespace setfn
