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


#ifndef CTI_ANALYTICS_SIGMOID_H_
#define CTI_ANALYTICS_SIGMOID_H_

#include <cstddef>
#include <vector>

namespace cti::analytics {

double Sigmoid(double x);

// Odd-degree polynomial stand-in for the logistic function on
// [-b_act, b_act]. coeffs[k] multiplies x^k.
struct PolySigmoid {
  int degree = 3;
  double b_act = 8.0;
  std::vector<double> coeffs;
  double max_grid_error = 0.0;

  double operator()(double x) const;
};

// Least-squares fit of sigmoid(x) - 1/2 over the odd monomials on a uniform
// grid (endpoints included); a_0 is set to exactly 1/2 and even terms to 0.
// Throws kInvalidArgument for even or non-positive degree and for
// ill-conditioned systems (degree above 15).
PolySigmoid FitSigmoidPoly(int degree = 3, double b_act = 8.0, size_t grid = 1000);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_SIGMOID_H_
