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

#include "robustea/bitstring.h"

#include <limits>

#include "robustea/errors.h"

namespace robustea {

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  Require(bound > 0, "UniformBelow: bound must be positive");
  unsigned __int128 m =
      static_cast<unsigned __int128>(engine_()) * static_cast<unsigned __int128>(bound);
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) *
          static_cast<unsigned __int128>(bound);
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t cell,
                         std::uint64_t trial) {
  return Mix64(Mix64(Mix64(master) ^ cell) ^ trial);
}

BitString::BitString(int n) : n_(n) {
  Require(n >= 1, "BitString: length must be at least 1");
  words_.assign(static_cast<std::size_t>((n + 63) / 64), 0);
}

BitString BitString::FromString(std::string_view text) {
  Require(!text.empty(), "BitString: empty string");
  BitString x(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    Require(text[i] == '0' || text[i] == '1',
            "BitString: characters must be '0' or '1'");
    if (text[i] == '1') x.Set(static_cast<int>(i), true);
  }
  return x;
}

BitString BitString::LeadingOnes(int n, int ones) {
  Require(ones >= 0 && ones <= n, "BitString: leading-ones count out of range");
  BitString x(n);
  for (int i = 0; i < ones; ++i) x.Set(i, true);
  return x;
}

void BitString::Set(int i, bool value) {
  if ((*this)[i] != value) Flip(i);
}

void BitString::Flip(int i) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  std::uint64_t& word = words_[i >> 6];
  ones_ += (word & mask) ? -1 : 1;
  word ^= mask;
}

std::uint64_t BitString::ToIndex() const {
  Require(n_ <= 64, "BitString::ToIndex: length exceeds 64");
  return words_[0];
}

BitString BitString::FromIndex(int n, std::uint64_t index) {
  Require(n <= 64, "BitString::FromIndex: length exceeds 64");
  Require(n == 64 || index < (std::uint64_t{1} << n),
          "BitString::FromIndex: index has bits beyond length");
  BitString x(n);
  x.words_[0] = index;
  x.ones_ = std::popcount(index);
  return x;
}

std::string BitString::ToString() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  ForEachOne([&](int i) {
    s[static_cast<std::size_t>(i)] = '1';
    return true;
  });
  return s;
}

BitString SampleUniform(int n, Rng& rng) {
  Require(n >= 1, "SampleUniform: n must be at least 1");
  BitString x(n);
  for (int i = 0; i < n; ++i) {
    if (rng.FairBit()) x.Flip(i);
  }
  return x;
}

BitString Mutate(const BitString& x, Rng& rng) {
  BitString y = x;
  const auto n = static_cast<std::uint64_t>(x.size());
  for (int i = 0; i < x.size(); ++i) {
    if (rng.OneIn(n)) y.Flip(i);
  }
  return y;
}

int Hamming(const BitString& x, const BitString& y) {
  Require(x.size() == y.size(), "Hamming: length mismatch");
  int distance = 0;
  const auto a = x.words();
  const auto b = y.words();
  for (std::size_t w = 0; w < a.size(); ++w) distance += std::popcount(a[w] ^ b[w]);
  return distance;
}

}  // namespace robustea
