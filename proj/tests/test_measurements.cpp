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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qi/channels.hpp"
#include "qi/measurements.hpp"
#include "qi/states.hpp"
#include "qi/tensorops.hpp"

using namespace qi;

namespace {

Matrix three_level_plus() {
  Vector v(3);
  v << 1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0);
  return proj(v);
}

}  // namespace

TEST_CASE("ispovm accepts projective partitions of the identity") {
  const Matrix e0 = proj(ket(0, 3));
  const Matrix e1 = proj(ket(1, 3)) + proj(ket(2, 3));
  REQUIRE(ispovm({e0, e1}));
  REQUIRE(ispovm(POVMMeasurement({e0, e1})));
}

TEST_CASE("ispovm rejects defective effect lists") {
  const Matrix e0 = proj(ket(0, 2));
  REQUIRE_FALSE(ispovm({e0, Matrix(0.5 * proj(ket(1, 2)))}));  // sum < I

  Matrix skew(2, 2);
  skew << 0.5, 0.3, -0.3, 0.5;  // not Hermitian
  REQUIRE_FALSE(ispovm({skew, Matrix(Matrix::Identity(2, 2) - skew)}));

  Matrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;  // negative eigenvalue, still sums to I
  REQUIRE_FALSE(ispovm({neg, Matrix(Matrix::Identity(2, 2) - neg)}));
}

TEST_CASE("iseffect bounds the operator by the identity") {
  REQUIRE(iseffect(proj(ket(1, 3))));
  REQUIRE(iseffect(PostSelectionMeasurement(proj(ket(1, 3)))));
  REQUIRE(iseffect(Matrix(0.3 * Matrix::Identity(2, 2))));
  REQUIRE_FALSE(iseffect(Matrix(1.1 * Matrix::Identity(2, 2))));
  // rectangular isometry-like effect
  Matrix rect = Matrix::Zero(3, 2);
  rect(0, 0) = 1.0;
  rect(1, 1) = 1.0;
  REQUIRE(iseffect(rect));
}

TEST_CASE("povm outcome distribution matches the printed example") {
  const Matrix rho = three_level_plus();
  const Matrix e0 = proj(ket(0, 3));
  const Matrix e1 = proj(ket(1, 3)) + proj(ket(2, 3));
  const Matrix out = povm_apply(POVMMeasurement({e0, e1}), rho);

  REQUIRE(out.rows() == 2);
  REQUIRE(std::abs(out(0, 0) - cplx(0.5, 0.0)) < 1e-12);
  REQUIRE(std::abs(out(1, 1) - cplx(0.5, 0.0)) < 1e-12);
  REQUIRE(out(0, 1) == cplx(0.0, 0.0));
  REQUIRE(out(1, 0) == cplx(0.0, 0.0));
}

TEST_CASE("post-selection keeps the sub-normalized branch") {
  const Matrix rho = three_level_plus();
  const Matrix e1 = proj(ket(1, 3)) + proj(ket(2, 3));
  const Matrix out = postselect_apply(PostSelectionMeasurement(e1), rho);

  Matrix ref = Matrix::Zero(3, 3);
  ref(2, 2) = 0.5;
  REQUIRE((out - ref).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("post-selection composes with channels") {
  // swap-and-damp channel with alpha = 0.3 feeding the same selection
  const double alpha = 0.3;
  Matrix k0 = Matrix::Zero(3, 3);
  k0(0, 2) = std::sqrt(alpha);
  k0(1, 1) = 1.0;
  Matrix k1 = Matrix::Zero(3, 3);
  k1(0, 0) = 1.0;
  k1(2, 2) = std::sqrt(1.0 - alpha);
  const Channel phi = KrausSet({k0, k1});
  REQUIRE(validate(phi) == Validity::cptp);

  const Matrix e1 = proj(ket(1, 3)) + proj(ket(2, 3));
  const Channel pm = PostSelectionMeasurement(e1);
  const Matrix out = qi::apply(compose_sequential(pm, phi), three_level_plus());

  Matrix ref = Matrix::Zero(3, 3);
  ref(2, 2) = 0.35;
  REQUIRE((out - ref).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("post-selection probability is the branch trace") {
  const Matrix rho = three_level_plus();
  const PostSelectionMeasurement pm(proj(ket(0, 3)));
  const Matrix out = postselect_apply(pm, rho);
  REQUIRE(std::abs(out.trace().real() - 0.5) < 1e-12);
  REQUIRE(validate(Channel(pm)) == Validity::cptni);
}
