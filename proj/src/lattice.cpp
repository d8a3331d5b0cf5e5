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

#include "lattice.hpp"

#include <algorithm>
#include <cmath>

namespace dctsteg::detail {
namespace {

// dct_matrix()[k][i]: coefficient k of the DCT of the unit pixel vector e_i.
const std::array<std::array<double, kBlockArea>, kBlockArea>& dct_matrix() {
  static const auto m = [] {
    std::array<std::array<double, kBlockArea>, kBlockArea> d{};
    for (int i = 0; i < kBlockArea; ++i) {
      PixelBlock e;
      e.samples[i] = 1.0;
      const auto col = forward_dct(e);
      for (int k = 0; k < kBlockArea; ++k) d[k][i] = col.coeffs[k];
    }
    return d;
  }();
  return m;
}

double dot(const std::array<double, ParityLattice::kDim>& a,
           const std::array<double, ParityLattice::kDim>& b) {
  double s = 0.0;
  for (int i = 0; i < ParityLattice::kDim; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

ParityLattice::ParityLattice(double lambda) : lambda_(lambda) {
  // Generators: (2 e_k, 0) for the coefficient slack, (D e_i, lambda e_i)
  // for each pixel.
  for (int k = 0; k < kBlockArea; ++k) {
    IntVec v{};
    v[kBlockArea + k] = 1;
    basis_.push_back(v);
  }
  for (int i = 0; i < kBlockArea; ++i) {
    IntVec v{};
    v[i] = 1;
    basis_.push_back(v);
  }
  reduce(0.99);
}

// Integer coordinates: the first 64 entries are pixels p, the rest q.
ParityLattice::RealVec ParityLattice::embed(const IntVec& v) const {
  const auto& d = dct_matrix();
  RealVec r{};
  for (int k = 0; k < kBlockArea; ++k) {
    double s = 2.0 * static_cast<double>(v[kBlockArea + k]);
    for (int i = 0; i < kBlockArea; ++i) s += d[k][i] * static_cast<double>(v[i]);
    r[k] = s;
  }
  for (int i = 0; i < kBlockArea; ++i) r[kBlockArea + i] = lambda_ * static_cast<double>(v[i]);
  return r;
}

void ParityLattice::orthogonalize() {
  const std::size_t n = basis_.size();
  embedded_.resize(n);
  gs_.resize(n);
  gs_norm2_.resize(n);
  mu_.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) embedded_[i] = embed(basis_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    RealVec v = embedded_[i];
    for (std::size_t j = 0; j < i; ++j) {
      mu_[i][j] = dot(embedded_[i], gs_[j]) / gs_norm2_[j];
      for (int t = 0; t < kDim; ++t) v[t] -= mu_[i][j] * gs_[j][t];
    }
    gs_[i] = v;
    gs_norm2_[i] = dot(v, v);
  }
}

// Textbook LLL on the integer coordinates. Only mu and the squared GS norms
// are updated during the loop; the vectors are recomputed at the end.
void ParityLattice::reduce(double delta) {
  orthogonalize();
  const int n = static_cast<int>(basis_.size());
  auto& mu = mu_;
  auto& bn = gs_norm2_;
  int k = 1;
  while (k < n) {
    for (int j = k - 1; j >= 0; --j) {
      if (std::fabs(mu[k][j]) <= 0.5) continue;
      const auto q = std::llround(mu[k][j]);
      for (int t = 0; t < kDim; ++t) basis_[k][t] -= q * basis_[j][t];
      for (int t = 0; t < j; ++t) mu[k][t] -= static_cast<double>(q) * mu[j][t];
      mu[k][j] -= static_cast<double>(q);
    }
    const double m = mu[k][k - 1];
    if (bn[k] < (delta - m * m) * bn[k - 1]) {
      const double merged = bn[k] + m * m * bn[k - 1];
      const double new_mu = m * bn[k - 1] / merged;
      bn[k] = bn[k - 1] * bn[k] / merged;
      bn[k - 1] = merged;
      std::swap(basis_[k], basis_[k - 1]);
      for (int j = 0; j < k - 1; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      mu[k][k - 1] = new_mu;
      for (int i = k + 1; i < n; ++i) {
        const double t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + new_mu * mu[i][k];
      }
      k = std::max(k - 1, 1);
    } else {
      ++k;
    }
  }
  orthogonalize();
}

std::array<std::int64_t, kBlockArea> ParityLattice::nearest_pixels(
    const std::array<std::int32_t, kBlockArea>& target,
    const PixelBlock& render) const {
  RealVec tau{};
  for (int k = 0; k < kBlockArea; ++k) tau[k] = target[k];
  for (int i = 0; i < kBlockArea; ++i) tau[kBlockArea + i] = lambda_ * render.samples[i];

  IntVec acc{};
  for (int i = kDim - 1; i >= 0; --i) {
    const auto q = std::llround(dot(tau, gs_[i]) / gs_norm2_[i]);
    if (q == 0) continue;
    for (int t = 0; t < kDim; ++t) tau[t] -= static_cast<double>(q) * embedded_[i][t];
    for (int t = 0; t < kBlockArea; ++t) acc[t] += q * basis_[i][t];
  }
  std::array<std::int64_t, kBlockArea> pixels{};
  std::copy_n(acc.begin(), kBlockArea, pixels.begin());
  return pixels;
}

const std::vector<ParityLattice>& parity_lattices() {
  static const std::vector<ParityLattice> ladder = [] {
    std::vector<ParityLattice> v;
    for (double lambda : {0.16, 0.14, 0.12, 0.11, 0.10, 0.09, 0.08, 0.07, 0.06, 0.05}) {
      v.emplace_back(lambda);
    }
    return v;
  }();
  return ladder;
}

}  // namespace dctsteg::detail
