// Copyright 2026 The RobustEA Authors.
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

#ifndef ROBUSTEA_BITSTRING_H_
#define ROBUSTEA_BITSTRING_H_

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace robustea {

// Deterministic random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard, and every derived quantity below is
// computed with integer arithmetic only, so a seed reproduces bit-exactly on
// every conforming platform. Changing any derivation must bump kAlgorithm.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/lemire-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, bound), exact (Lemire's multiply-shift with
  // rejection). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

  // True with probability exactly 1/den.
  bool OneIn(std::uint64_t den) { return UniformBelow(den) == 0; }

  bool FairBit() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// 64-bit finalizer from SplitMix64.
std::uint64_t Mix64(std::uint64_t x);

// Seed of trial `trial` in cell `cell` of an experiment seeded by `master`.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t cell,
                         std::uint64_t trial);

// Fixed-length bit string with packed storage and a maintained popcount.
// Position i (0-based) corresponds to item i+1 in 1-based notation; for
// deletion-robust instances item 1 carries the largest weight.
class BitString {
 public:
  explicit BitString(int n);

  // Parses a string of '0'/'1' characters, position 0 first.
  static BitString FromString(std::string_view text);
  // The n-bit string with the first `ones` positions set.
  static BitString LeadingOnes(int n, int ones);

  int size() const { return n_; }
  int ones() const { return ones_; }
  int zeros() const { return n_ - ones_; }

  bool operator[](int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void Set(int i, bool value);
  void Flip(int i);

  std::span<const std::uint64_t> words() const { return words_; }

  // Calls f(i) for every set position i in increasing order. Stops early if
  // f returns false.
  template <typename F>
  void ForEachOne(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        word &= word - 1;
        if (!f(static_cast<int>(w * 64) + bit)) return;
      }
    }
  }

  // Low n bits as an integer (bit i = position i). Requires n <= 64.
  std::uint64_t ToIndex() const;
  static BitString FromIndex(int n, std::uint64_t index);

  std::string ToString() const;

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_;
  int ones_ = 0;
  std::vector<std::uint64_t> words_;
};

// Each bit independently 1 with probability 1/2.
BitString SampleUniform(int n, Rng& rng);

// Standard bit-wise mutation: every position flips independently with
// probability exactly 1/n. The input is not modified.
BitString Mutate(const BitString& x, Rng& rng);

// Number of positions where x and y differ.
int Hamming(const BitString& x, const BitString& y);

}  // namespace robustea

#endif  // ROBUSTEA_BITSTRING_H_
