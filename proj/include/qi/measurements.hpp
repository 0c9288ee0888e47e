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

#include <vector>

#include "qi/channels.hpp"
#include "qi/types.hpp"

namespace qi {

// True when every effect is PSD (within tol::eig) and the effects sum to
// the identity (within tol::tp).
bool ispovm(const std::vector<Matrix>& effects);
bool ispovm(const POVMMeasurement& p);

// True when e^dagger e <= I within tol::tp.
bool iseffect(const Matrix& e);
bool iseffect(const PostSelectionMeasurement& m);

// Outcome-probability channel output; exactly diagonal.
Matrix povm_apply(const POVMMeasurement& p, const Matrix& rho);

// Sub-normalized post-measurement state e rho e^dagger; its trace is the
// outcome probability.
Matrix postselect_apply(const PostSelectionMeasurement& m, const Matrix& rho);

}  // namespace qi
