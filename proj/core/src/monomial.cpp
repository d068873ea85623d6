// Copyright 2026 The Authors.
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

#include "extalg/monomial.hpp"

#include "extalg/errors.hpp"

namespace extalg {

Monomial Monomial::from_indices(std::span<const int> indices) {
  std::uint64_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > static_cast<int>(kMaxGenerators)) {
      throw InvalidArgument("generator index " + std::to_string(i) + " outside 1..64");
    }
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (bits & bit) {
      throw InvalidArgument("repeated generator index " + std::to_string(i));
    }
    bits |= bit;
  }
  return Monomial(bits);
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(grade());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string Monomial::to_string() const {
  if (bits_ == 0) return "1";
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += '^';
    out += 'e' + std::to_string(i);
  }
  return out;
}

std::vector<Monomial> monomials_of_grade(std::size_t n, int grade) {
  std::vector<Monomial> out;
  if (grade < 0 || grade > static_cast<int>(n)) return out;
  // Lexicographic enumeration of increasing index sequences.
  std::vector<int> idx(grade);
  for (int k = 0; k < grade; ++k) idx[k] = k + 1;
  while (true) {
    out.push_back(Monomial::from_indices(idx));
    int k = grade - 1;
    while (k >= 0 && idx[k] == static_cast<int>(n) - (grade - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < grade; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace extalg
