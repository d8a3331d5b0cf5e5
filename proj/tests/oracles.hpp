// Copyright 2026 The dctsteg Authors.
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

// Reference implementations used only by tests. Each one is written from
// the defining formula, independently of the library code it checks.

#ifndef DCTSTEG_TESTS_ORACLES_HPP_
#define DCTSTEG_TESTS_ORACLES_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

using Block = std::array<double, 64>;

inline double c_norm(int k) { return k == 0 ? 1.0 / std::sqrt(2.0) : 1.0; }

// F(u,v) = 1/4 C(u) C(v) sum_x sum_y f(x,y) cos(pi(2x+1)u/16) cos(pi(2y+1)v/16)
inline Block literal_dct(const Block& f) {
  Block out{};
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      double s = 0.0;
      for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
          s += f[x * 8 + y] * std::cos(std::numbers::pi * (2 * x + 1) * u / 16.0) *
               std::cos(std::numbers::pi * (2 * y + 1) * v / 16.0);
        }
      }
      out[u * 8 + v] = 0.25 * c_norm(u) * c_norm(v) * s;
    }
  }
  return out;
}

// f(x,y) = 1/4 sum_u sum_v C(u) C(v) F(u,v) cos(...) cos(...)
inline Block literal_idct(const Block& F) {
  Block out{};
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      double s = 0.0;
      for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) {
          s += c_norm(u) * c_norm(v) * F[u * 8 + v] *
               std::cos(std::numbers::pi * (2 * x + 1) * u / 16.0) *
               std::cos(std::numbers::pi * (2 * y + 1) * v / 16.0);
        }
      }
      out[x * 8 + y] = 0.25 * s;
    }
  }
  return out;
}

inline double naive_mse(const std::vector<std::uint8_t>& f,
                        const std::vector<std::uint8_t>& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = double(f[i]) - double(g[i]);
    s += d * d;
  }
  return s / double(f.size());
}

// Minimal sum freq*len over every length assignment satisfying Kraft, which
// is exactly the set of achievable prefix codes. One symbol costs 1 bit per
// occurrence by convention.
inline std::uint64_t brute_force_min_cost(const std::vector<std::uint64_t>& freq) {
  const int n = static_cast<int>(freq.size());
  if (n == 1) return freq[0];
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<int> len(n, 1);
  while (true) {
    double kraft = 0.0;
    std::uint64_t cost = 0;
    for (int i = 0; i < n; ++i) {
      kraft += std::ldexp(1.0, -len[i]);
      cost += freq[i] * static_cast<std::uint64_t>(len[i]);
    }
    if (kraft <= 1.0 && cost < best) best = cost;
    int i = 0;
    while (i < n && ++len[i] > n - 1) len[i++] = 1;
    if (i == n) break;
  }
  return best;
}

// Canonical codewords from lengths via per-length first codes (the
// count-then-next-code construction). Lengths must be <= 63.
inline std::map<int, std::string> canonical_codes(const std::array<std::uint8_t, 256>& lengths) {
  std::array<std::uint64_t, 64> count{};
  for (auto l : lengths) if (l) ++count[l];
  std::array<std::uint64_t, 64> next{};
  std::uint64_t code = 0;
  for (int l = 1; l < 64; ++l) {
    next[l] = code;
    code = (code + count[l]) << 1;
  }
  std::map<int, std::string> out;
  for (int s = 0; s < 256; ++s) {
    const int l = lengths[s];
    if (!l) continue;
    const std::uint64_t c = next[l]++;
    std::string bits;
    for (int i = l - 1; i >= 0; --i) bits.push_back(((c >> i) & 1) ? '1' : '0');
    out[s] = bits;
  }
  return out;
}

}  // namespace oracle

#endif  // DCTSTEG_TESTS_ORACLES_HPP_
