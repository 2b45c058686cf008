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

#include "genpos/gf16.hpp"

#include <array>
#include <stdexcept>

namespace genpos {

namespace {

constexpr unsigned mul_bits(unsigned a, unsigned b) {
  unsigned r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & 0x10u) a ^= GF16::kModulus;
  }
  return r;
}

struct LogTables {
  std::array<std::uint8_t, 16> exp_of{};  // exp_of[e] = x^e for e in [0,15)
  std::array<std::int8_t, 16> log_of{};   // log_of[v], -1 for 0

  constexpr LogTables() {
    for (auto& l : log_of) l = -1;
    unsigned p = 1;
    for (int e = 0; e < 15; ++e) {
      exp_of[e] = static_cast<std::uint8_t>(p);
      log_of[p] = static_cast<std::int8_t>(e);
      p = mul_bits(p, GF16::kGenerator);
    }
  }
};

constexpr LogTables kTables{};

}  // namespace

GF16::GF16(unsigned value) : v_(static_cast<std::uint8_t>(value)) {
  if (value > 15) throw std::invalid_argument("GF16: value must be in [0, 16)");
}

GF16 operator+(GF16 a, GF16 b) { return GF16(a.v_ ^ b.v_); }

GF16 operator*(GF16 a, GF16 b) { return GF16(mul_bits(a.v_, b.v_)); }

GF16 GF16::inverse() const {
  if (v_ == 0) throw std::invalid_argument("GF16: zero has no inverse");
  return exp(15 - log());
}

int GF16::log() const {
  if (v_ == 0) throw std::invalid_argument("GF16: log of zero");
  return kTables.log_of[v_];
}

GF16 GF16::exp(int e) {
  e %= 15;
  if (e < 0) e += 15;
  return GF16(kTables.exp_of[e]);
}

}  // namespace genpos
