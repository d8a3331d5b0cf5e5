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

// Closest-vector search used by the spatial8 adjustment.
//
// We want integer pixels p whose DCT rounds to coefficients with prescribed
// parities. Points (D p + 2 q, lambda p) for integer p, q form a lattice in
// R^128, where D is the 64x64 pixel-to-coefficient matrix. A lattice point
// near (t, lambda * IDCT(t)) has DCT(p) close to t modulo 2 while keeping p
// close to the unconstrained render. lambda trades parity accuracy against
// pixel fidelity.

#ifndef DCTSTEG_SRC_LATTICE_HPP_
#define DCTSTEG_SRC_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "dctsteg/block_dct.hpp"

namespace dctsteg::detail {

class ParityLattice {
 public:
  static constexpr int kDim = 2 * kBlockArea;

  // LLL-reduces the basis (delta = 0.99). Takes tens of milliseconds.
  explicit ParityLattice(double lambda);

  double lambda() const { return lambda_; }

  // Babai nearest-plane rounding toward (target, lambda * render). Returns
  // the integer pixel part of the chosen lattice point; values may fall
  // outside [0, 255].
  std::array<std::int64_t, kBlockArea> nearest_pixels(
      const std::array<std::int32_t, kBlockArea>& target,
      const PixelBlock& render) const;

 private:
  using IntVec = std::array<std::int64_t, kDim>;
  using RealVec = std::array<double, kDim>;

  RealVec embed(const IntVec& v) const;
  void orthogonalize();
  void reduce(double delta);

  double lambda_;
  std::vector<IntVec> basis_;
  std::vector<RealVec> embedded_;
  std::vector<RealVec> gs_;                 // Gram-Schmidt vectors
  std::vector<double> gs_norm2_;
  std::vector<std::vector<double>> mu_;
};

// Shared instances for the adjustment schedule, built on first use.
const std::vector<ParityLattice>& parity_lattices();

}  // namespace dctsteg::detail

#endif  // DCTSTEG_SRC_LATTICE_HPP_
