// Copyright 2026 The qi authors
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

#include "qi/channels.hpp"
#include "qi/random.hpp"
#include "qi/types.hpp"

namespace qi {

double norm_trace(const Matrix& m);
double trace_distance(const Matrix& a, const Matrix& b);

double norm_hs(const Matrix& m);
// Frobenius norm of the difference, no 1/2 factor.
double hs_distance(const Matrix& a, const Matrix& b);

// fidelity_sqrt is the trace norm of sqrt(a) sqrt(b); fidelity is its
// square. Ket arguments are projected.
double fidelity_sqrt(const Matrix& a, const Matrix& b);
double fidelity_sqrt(const Vector& a, const Matrix& b);
double fidelity_sqrt(const Matrix& a, const Vector& b);
double fidelity_sqrt(const Vector& a, const Vector& b);
double fidelity(const Matrix& a, const Matrix& b);
double fidelity(const Vector& a, const Matrix& b);
double fidelity(const Matrix& a, const Vector& b);
double fidelity(const Vector& a, const Vector& b);

// tr(ab) + sqrt(1 - tr(a^2)) sqrt(1 - tr(b^2)); upper bound on fidelity.
double superfidelity(const Matrix& a, const Matrix& b);

// Natural logarithm throughout; 0 log 0 is 0.
double shannon_entropy(const Eigen::VectorXd& p);
// Binary point entropy of (a, 1 - a).
double shannon_entropy(double a);
double vonneumann_entropy(const Matrix& rho);

// Returns +infinity when the support of rho is not contained in the
// support of sigma.
double relative_entropy(const Matrix& rho, const Matrix& sigma);
double kl_divergence(const Matrix& rho, const Matrix& sigma);

// Symmetrized relative entropy (kl(a,b) + kl(b,a)) / 2.
double js_divergence(const Matrix& a, const Matrix& b);

double bures_distance(const Matrix& a, const Matrix& b);
double bures_angle(const Matrix& a, const Matrix& b);

// Entanglement measures on a bipartite state; sys picks the transposed
// factor (1-based, as in tensorops).
double negativity(const Matrix& rho, const std::vector<int>& dims, int sys);
double log_negativity(const Matrix& rho, const std::vector<int>& dims, int sys);
// Minimum eigenvalue of the partial transpose; >= 0 means the state
// passes the positive-partial-transpose test.
double ppt(const Matrix& rho, const std::vector<int>& dims, int sys);

// Two-qubit concurrence via the spin-flip construction.
double concurrence(const Matrix& rho);

// Multi-start ascent maximizing |(Delta (x) I)(|psi><psi|)|_1 over pure
// inputs on the doubled space. Results are certified lower bounds; starts
// and tolerances below are the accuracy contract.
struct DiamondOptions {
  int starts = 20;
  double gain_tol = 1e-9;
  int max_iters = 500;
};

double norm_diamond(const Channel& c, RngStream& rng,
                    const DiamondOptions& opt = {});
double diamond_distance(const Channel& a, const Channel& b, RngStream& rng,
                        const DiamondOptions& opt = {});

}  // namespace qi
