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

#include "dctsteg/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "dctsteg/error.hpp"

namespace dctsteg {

std::string QualityScore::psnr_string(int precision) const {
  if (infinite) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, psnr_db);
  return buf;
}

double mse(const Image8& f, const Image8& g) {
  if (f.width != g.width || f.height != g.height) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cannot compare " + std::to_string(f.width) + "x" +
                    std::to_string(f.height) + " with " +
                    std::to_string(g.width) + "x" + std::to_string(g.height));
  }
  if (f.pixels.empty()) return 0.0;
  // Squared differences are integers; summing exactly avoids drift.
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < f.pixels.size(); ++i) {
    const int d = int{f.pixels[i]} - int{g.pixels[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(f.pixels.size());
}

QualityScore psnr(const Image8& f, const Image8& g) {
  QualityScore q;
  q.mse = mse(f, g);
  q.infinite = q.mse == 0.0;
  if (!q.infinite) q.psnr_db = 10.0 * std::log10(255.0 * 255.0 / q.mse);
  return q;
}

}  // namespace dctsteg
