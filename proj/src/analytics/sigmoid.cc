// Copyright 2026 The CTI-MHE Authors.
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


#include "cti/analytics/sigmoid.h"

#include <cmath>
#include <string>

#include "cti/common/error.h"

namespace cti::analytics {

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double PolySigmoid::operator()(double x) const {
  double acc = 0.0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

PolySigmoid FitSigmoidPoly(int degree, double b_act, size_t grid) {
  if (degree < 1 || degree % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sigmoid degree must be odd and positive");
  }
  if (degree > 15) {
    throw Error(ErrorCode::kInvalidArgument,
                "degree " + std::to_string(degree) + " is too ill-conditioned to fit");
  }
  if (!(b_act > 0) || grid < 2) throw Error(ErrorCode::kInvalidArgument, "bad fit interval");
  // Work in t = x / b_act so the normal matrix stays well scaled.
  const size_t k = static_cast<size_t>(degree + 1) / 2;
  std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
  for (size_t g = 0; g < grid; ++g) {
    const double t = -1.0 + 2.0 * static_cast<double>(g) / static_cast<double>(grid - 1);
    const double r = Sigmoid(t * b_act) - 0.5;
    std::vector<double> phi(k);
    for (size_t i = 0; i < k; ++i) phi[i] = std::pow(t, static_cast<double>(2 * i + 1));
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) a[i][j] += phi[i] * phi[j];
      a[i][k] += phi[i] * r;
    }
  }
  // Gaussian elimination with partial pivoting.
  for (size_t c = 0; c < k; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < k; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    if (std::fabs(a[c][c]) < 1e-12) {
      throw Error(ErrorCode::kInvalidArgument, "singular sigmoid fit");
    }
    for (size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (size_t j = c; j <= k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  PolySigmoid p;
  p.degree = degree;
  p.b_act = b_act;
  p.coeffs.assign(static_cast<size_t>(degree) + 1, 0.0);
  p.coeffs[0] = 0.5;
  for (size_t i = 0; i < k; ++i) {
    p.coeffs[2 * i + 1] = a[i][k] / a[i][i] / std::pow(b_act, static_cast<double>(2 * i + 1));
  }
  for (size_t g = 0; g < grid; ++g) {
    const double x = b_act * (-1.0 + 2.0 * static_cast<double>(g) / static_cast<double>(grid - 1));
    p.max_grid_error = std::max(p.max_grid_error, std::fabs(p(x) - Sigmoid(x)));
  }
  return p;
}

}  // namespace cti::analytics
