// Copyright 2026 The genpos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENPOS_GF16_HPP_
#define GENPOS_GF16_HPP_

#include <cstdint>

namespace genpos {

/// The field with 16 elements: GF(2)[x] / (x^4 + x + 1), elements encoded as
/// bit masks (bit k = coefficient of x^k). x is a primitive element.
class GF16 {
 public:
  static constexpr unsigned kModulus = 0b10011;  // x^4 + x + 1
  static constexpr unsigned kGenerator = 0b0010;  // x

  constexpr GF16() = default;
  explicit GF16(unsigned value);  // throws std::invalid_argument if value > 15

  unsigned value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend GF16 operator+(GF16 a, GF16 b);  // characteristic 2: xor
  friend GF16 operator*(GF16 a, GF16 b);
  GF16 inverse() const;  // throws on zero

  // Discrete log base x, in [0, 15); throws on zero.
  int log() const;
  // x^e, exponent taken mod 15.
  static GF16 exp(int e);

  bool operator==(const GF16&) const = default;

 private:
  std::uint8_t v_ = 0;
};

}  // namespace genpos

#endif  // GENPOS_GF16_HPP_
