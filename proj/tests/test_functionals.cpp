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
#include <limits>

#include "qi/channels.hpp"
#include "qi/functionals.hpp"
#include "qi/random.hpp"
#include "qi/states.hpp"
#include "qi/tensorops.hpp"

using namespace qi;
using Catch::Matchers::WithinAbs;

namespace {

Vector psi_plus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

Vector phi_tilted() {
  Vector v(2);
  v << 0.5, std::sqrt(3.0) / 2.0;
  return v;
}

Matrix rho_ref() {
  Matrix m(2, 2);
  m << cplx(0.25, 0.0), cplx(0.0, 0.25), cplx(0.0, -0.25), cplx(0.75, 0.0);
  return m;
}

Matrix sigma_ref() {
  Matrix m(2, 2);
  m << cplx(0.4, 0.0), cplx(0.0, 0.1), cplx(0.0, -0.1), cplx(0.6, 0.0);
  return m;
}

Vector bell_ket() { return max_entangled(4); }

}  // namespace

TEST_CASE("trace distance of the two reference pure states") {
  const Matrix a = proj(psi_plus());
  const Matrix b = proj(phi_tilted());
  REQUIRE_THAT(trace_distance(a, b), WithinAbs(0.2588190451, 1e-6));
  REQUIRE_THAT(trace_distance(a, a), WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(trace_distance(b, a), WithinAbs(trace_distance(a, b), 1e-14));
}

TEST_CASE("hilbert-schmidt distance is the plain frobenius norm") {
  const Matrix a = proj(psi_plus());
  const Matrix b = proj(phi_tilted());
  REQUIRE_THAT(hs_distance(a, b), WithinAbs(0.3660254038, 1e-6));
  REQUIRE_THAT(norm_hs(a - b), WithinAbs(hs_distance(a, b), 1e-15));
}

TEST_CASE("fidelity agrees across all argument mixtures") {
  const Vector x = psi_plus();
  const Vector y = phi_tilted();
  const Matrix xm = proj(x);
  const Matrix ym = proj(y);

  REQUIRE_THAT(fidelity_sqrt(xm, ym), WithinAbs(0.9659258263, 1e-6));
  REQUIRE_THAT(fidelity_sqrt(x, ym), WithinAbs(0.9659258263, 1e-6));
  REQUIRE_THAT(fidelity_sqrt(xm, y), WithinAbs(0.9659258263, 1e-6));
  REQUIRE_THAT(fidelity_sqrt(x, y), WithinAbs(0.9659258263, 1e-6));

  REQUIRE_THAT(fidelity(xm, ym), WithinAbs(0.9330127019, 1e-6));
  REQUIRE_THAT(fidelity(x, ym), WithinAbs(0.9330127019, 1e-6));
  REQUIRE_THAT(fidelity(xm, y), WithinAbs(0.9330127019, 1e-6));
  REQUIRE_THAT(fidelity(x, y), WithinAbs(0.9330127019, 1e-6));

  REQUIRE_THAT(fidelity(xm, xm), WithinAbs(1.0, 1e-12));
}

TEST_CASE("superfidelity equals fidelity for pure states") {
  const Matrix a = proj(psi_plus());
  const Matrix b = proj(phi_tilted());
  REQUIRE_THAT(superfidelity(a, b), WithinAbs(0.9330127019, 1e-6));
  // upper bounds fidelity on mixed pairs
  REQUIRE(superfidelity(rho_ref(), sigma_ref()) >=
          fidelity(rho_ref(), sigma_ref()) - 1e-12);
}

TEST_CASE("shannon entropy reference values") {
  Eigen::VectorXd p(3);
  p << 0.3, 0.2, 0.5;
  REQUIRE_THAT(shannon_entropy(p), WithinAbs(1.0296530141, 1e-6));
  REQUIRE_THAT(shannon_entropy(0.5), WithinAbs(0.6931471806, 1e-6));
  REQUIRE_THAT(shannon_entropy(0.0), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(shannon_entropy(1.0), WithinAbs(0.0, 1e-15));

  Eigen::VectorXd bad(2);
  bad << 0.4, 0.4;
  REQUIRE_THROWS_AS(shannon_entropy(bad), std::invalid_argument);
  bad << -0.1, 1.1;
  REQUIRE_THROWS_AS(shannon_entropy(bad), std::invalid_argument);
  REQUIRE_THROWS_AS(shannon_entropy(1.5), std::invalid_argument);
}

TEST_CASE("von neumann entropy of the reference mixture") {
  const Matrix mix = 0.4 * rho_ref() + 0.6 * sigma_ref();
  REQUIRE_THAT(vonneumann_entropy(mix), WithinAbs(0.5869295209, 1e-6));
  REQUIRE_THAT(vonneumann_entropy(proj(psi_plus())), WithinAbs(0.0, 1e-9));
  REQUIRE_THAT(vonneumann_entropy(max_mixed(4)), WithinAbs(std::log(4.0), 1e-12));
}

TEST_CASE("relative entropy reference value and support sentinel") {
  REQUIRE_THAT(relative_entropy(rho_ref(), sigma_ref()),
               WithinAbs(0.1127375183, 1e-6));
  REQUIRE_THAT(kl_divergence(rho_ref(), sigma_ref()),
               WithinAbs(0.1127375183, 1e-6));
  REQUIRE_THAT(relative_entropy(sigma_ref(), rho_ref()),
               WithinAbs(0.1378346642, 1e-6));
  REQUIRE_THAT(relative_entropy(rho_ref(), rho_ref()), WithinAbs(0.0, 1e-9));

  // support of the first argument escapes the support of the second
  const double inf = relative_entropy(proj(ket(0, 2)), proj(ket(1, 2)));
  REQUIRE(std::isinf(inf));
  REQUIRE(inf > 0.0);
}

TEST_CASE("js divergence is the symmetrized relative entropy") {
  REQUIRE_THAT(js_divergence(rho_ref(), sigma_ref()),
               WithinAbs(0.1252860912, 1e-6));
  REQUIRE_THAT(js_divergence(sigma_ref(), rho_ref()),
               WithinAbs(js_divergence(rho_ref(), sigma_ref()), 1e-12));
  REQUIRE(js_divergence(rho_ref(), sigma_ref()) >= 0.0);
  REQUIRE_THAT(js_divergence(rho_ref(), rho_ref()), WithinAbs(0.0, 1e-9));
}

TEST_CASE("bures metrics from the reference pair") {
  REQUIRE_THAT(bures_distance(rho_ref(), sigma_ref()),
               WithinAbs(0.2486755573, 1e-6));
  REQUIRE_THAT(bures_angle(rho_ref(), sigma_ref()),
               WithinAbs(0.2493208056, 1e-6));
  REQUIRE_THAT(bures_distance(rho_ref(), rho_ref()), WithinAbs(0.0, 1e-7));
}

TEST_CASE("negativity and ppt spectra detect entanglement") {
  const Matrix bell = proj(bell_ket());
  REQUIRE_THAT(negativity(bell, {2, 2}, 2), WithinAbs(0.5, 1e-6));
  REQUIRE_THAT(ppt(bell, {2, 2}, 2), WithinAbs(-0.5, 1e-6));
  REQUIRE_THAT(log_negativity(bell, {2, 2}, 2), WithinAbs(std::log(2.0), 1e-9));

  const Matrix prod = tensor(rho_ref(), sigma_ref());
  REQUIRE_THAT(negativity(prod, {2, 2}, 2), WithinAbs(0.0, 1e-9));
  REQUIRE_THAT(ppt(prod, {2, 2}, 2), WithinAbs(0.0525126266, 1e-6));

  // transposing either side flips nothing for the singlet-type spectrum
  REQUIRE_THAT(ppt(bell, {2, 2}, 1), WithinAbs(-0.5, 1e-6));
}

TEST_CASE("concurrence of product and maximally entangled states") {
  Matrix rho2(2, 2);
  rho2 << cplx(0.25, 0.0), cplx(0.0, 0.1), cplx(0.0, -0.1), cplx(0.75, 0.0);
  REQUIRE_THAT(concurrence(tensor(rho2, sigma_ref())), WithinAbs(0.0, 1e-6));
  REQUIRE_THAT(concurrence(proj(bell_ket())), WithinAbs(1.0, 1e-6));
  REQUIRE_THROWS_AS(concurrence(max_mixed(3)), std::invalid_argument);
}

TEST_CASE("entanglement measures agree on werner states") {
  // two-qubit werner states cross the separability line at a = 1/3
  REQUIRE(ppt(werner_state(4, 0.5), {2, 2}, 2) < -1e-4);
  REQUIRE(ppt(werner_state(4, 0.2), {2, 2}, 2) > 1e-4);
  REQUIRE_THAT(negativity(werner_state(4, 1.0 / 3.0), {2, 2}, 2),
               WithinAbs(0.0, 1e-9));
}

TEST_CASE("metric properties hold on random states") {
  RngStream rng(61);
  for (int i = 0; i < 10; ++i) {
    const Matrix a = sample_hs_state(2, 1.0, 3, rng);
    const Matrix b = sample_hs_state(2, 1.0, 3, rng);
    const Matrix c = sample_hs_state(2, 1.0, 3, rng);

    const double dab = trace_distance(a, b);
    REQUIRE(dab >= 0.0);
    REQUIRE(dab <= 1.0 + 1e-12);
    REQUIRE(dab <= trace_distance(a, c) + trace_distance(c, b) + 1e-12);

    const double f = fidelity(a, b);
    REQUIRE(f >= -1e-12);
    REQUIRE(f <= 1.0 + 1e-9);
    // Fuchs-van de Graaf inequalities tie the two distances
    REQUIRE(1.0 - fidelity_sqrt(a, b) <= dab + 1e-9);
    REQUIRE(dab <= std::sqrt(std::max(0.0, 1.0 - f)) + 1e-9);
  }
}

TEST_CASE("norm helpers match eigen references") {
  RngStream rng(67);
  const Matrix g = sample_ginibre(2, 3, 3, rng);
  REQUIRE_THAT(norm_hs(g), WithinAbs(g.norm(), 1e-13));
  REQUIRE(norm_trace(g) >= norm_hs(g) - 1e-12);
  const Matrix u = sample_circular(EnsembleKind::circular, 2, 3, rng);
  REQUIRE_THAT(norm_trace(u), WithinAbs(3.0, 1e-10));
}

TEST_CASE("diamond norm of channels and channel differences") {
  RngStream rng(71);
  DiamondOptions opt;
  opt.starts = 8;

  const Channel c = DynamicalMatrix(sample_choi(2, 1.0, 2, 2, rng), 2, 2);
  RngStream solver(101);
  REQUIRE_THAT(norm_diamond(c, solver, opt), WithinAbs(1.0, 1e-3));

  REQUIRE(diamond_distance(c, c, solver, opt) <= 1e-3);

  const Channel id2 = IdentityChannel(2);
  const Channel flip = UnitaryChannel(pauli_x());
  REQUIRE_THAT(diamond_distance(id2, flip, solver, opt), WithinAbs(2.0, 1e-2));

  REQUIRE_THROWS_AS(
      diamond_distance(id2, Channel(IdentityChannel(3)), solver, opt),
      std::invalid_argument);
}

TEST_CASE("diamond distance dominates the induced trace distance") {
  RngStream rng(73);
  const Channel a = DynamicalMatrix(sample_choi(2, 1.0, 2, 2, rng), 2, 2);
  const Channel b = DynamicalMatrix(sample_choi(2, 1.0, 2, 2, rng), 2, 2);
  RngStream solver(103);
  DiamondOptions opt;
  opt.starts = 8;
  const double dd = diamond_distance(a, b, solver, opt);

  // the stabilized norm dominates the plain induced one, which in turn
  // dominates the difference norm at any fixed state
  double induced = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Matrix rho = sample_hs_state(2, 1.0, 2, rng);
    induced = std::max(
        induced, 2.0 * trace_distance(qi::apply(a, rho), qi::apply(b, rho)));
  }
  REQUIRE(dd >= induced - 1e-9);
}
