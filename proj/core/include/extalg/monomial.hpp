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

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace extalg {

// Largest number of exterior generators the bitmask representation holds.
inline constexpr std::size_t kMaxGenerators = 64;

// A basis monomial e_{i1} ^ ... ^ e_{ir} with i1 < ... < ir, stored as the
// set {i1, ..., ir}. Generator i (1-based) lives in bit i-1.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  // Indices are 1-based and may come in any order; duplicates and values
  // outside 1..64 throw InvalidArgument.
  static Monomial from_indices(std::span<const int> indices);
  static Monomial from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  static constexpr Monomial generator(int i) { return Monomial(std::uint64_t{1} << (i - 1)); }
  // e_1 ^ ... ^ e_n.
  static constexpr Monomial top(std::size_t n) {
    return Monomial(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int grade() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  // Largest index, 0 for the empty monomial.
  constexpr int max_index() const { return 64 - std::countl_zero(bits_); }
  constexpr bool disjoint(Monomial other) const { return (bits_ & other.bits_) == 0; }
  constexpr bool subset_of(Monomial other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Monomial operator|(Monomial o) const { return Monomial(bits_ | o.bits_); }
  constexpr Monomial operator&(Monomial o) const { return Monomial(bits_ & o.bits_); }
  constexpr Monomial without(Monomial o) const { return Monomial(bits_ & ~o.bits_); }

  // Sorted 1-based indices.
  std::vector<int> indices() const;
  // "e1^e3^e5", or "1" for the empty monomial.
  std::string to_string() const;

  friend constexpr bool operator==(Monomial, Monomial) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Basis order used everywhere output is produced: by grade, then
// lexicographically on the sorted index lists.
struct GradedLexLess {
  constexpr bool operator()(Monomial a, Monomial b) const {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // The smallest index in exactly one of the sets decides.
    return (a.bits() & (diff & (~diff + 1))) != 0;
  }
};

// Number of pairs (s, t) in S x T with s > t.
constexpr int inversions(Monomial s, Monomial t) {
  int count = 0;
  std::uint64_t rest = t.bits();
  while (rest != 0) {
    const int bit = std::countr_zero(rest);
    rest &= rest - 1;
    count += bit == 63 ? 0 : std::popcount(s.bits() >> (bit + 1));
  }
  return count;
}

// Sign of e_S ^ e_T relative to e_{S u T} for disjoint S and T.
constexpr int wedge_sign(Monomial s, Monomial t) { return (inversions(s, t) & 1) ? -1 : 1; }

// All monomials of the given grade in E(n), in lexicographic order.
std::vector<Monomial> monomials_of_grade(std::size_t n, int grade);

}  // namespace extalg
