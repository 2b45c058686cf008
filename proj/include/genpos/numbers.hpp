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

#ifndef GENPOS_NUMBERS_HPP_
#define GENPOS_NUMBERS_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace genpos {

// Exact scalars used throughout: integers for polynomial coefficients,
// rationals for evaluation and instantiation. Floating point never enters
// any predicate.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace genpos

#endif  // GENPOS_NUMBERS_HPP_
