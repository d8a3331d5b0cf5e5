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

#ifndef DCTSTEG_METRICS_HPP_
#define DCTSTEG_METRICS_HPP_

#include <string>

#include "dctsteg/image_io.hpp"

namespace dctsteg {

struct QualityScore {
  double mse = 0.0;
  double psnr_db = 0.0;  // meaningless when infinite is set
  bool infinite = true;  // set iff mse == 0

  // "inf" or the value with `precision` decimals.
  std::string psnr_string(int precision = 4) const;
};

// Mean squared error over all pixels. Throws DimensionMismatch.
double mse(const Image8& f, const Image8& g);

// 10 log10(255^2 / mse), or the infinite sentinel for identical images.
QualityScore psnr(const Image8& f, const Image8& g);

}  // namespace dctsteg

#endif  // DCTSTEG_METRICS_HPP_
