// Copyright 2026 The entwit authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTWIT_RATIONAL_HPP
#define ENTWIT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "entwit/common.hpp"

// Exact rationals for the closed-form thresholds, which are all small
// integer ratios. 64-bit with overflow guards; floats appear only in
// bisection and margins.

namespace entwit {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("integer overflow in rational arithmetic");
  }
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("integer overflow in rational arithmetic");
  }
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, int exponent) {
  if (exponent < 0) throw DomainError("checked_pow: negative exponent");
  std::int64_t out = 1;
  for (int k = 0; k < exponent; ++k) out = checked_mul(out, base);
  return out;
}

class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // 1 - r: mirrors a threshold between the visibility and noise conventions.
  Rational complement() const { return Rational(den_ - num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

 private:
  std::int64_t num_, den_;
};

}  // namespace entwit

#endif
