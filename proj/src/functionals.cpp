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

#include "qi/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qi/states.hpp"
#include "qi/tensorops.hpp"

namespace qi {

namespace {

void check_same_dims(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

// Eigenvalues of the Hermitian part, clipped to [0, inf) per the shared
// tolerance rule.
Eigen::VectorXd psd_eigenvalues(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  if ((m - m.adjoint()).norm() > tol::herm * std::max(m.norm(), 1e-300)) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol::eig) {
      throw std::invalid_argument(std::string(what) + ": matrix is not PSD");
    }
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return ev;
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double norm_trace(const Matrix& m) {
  return m.jacobiSvd().singularValues().sum();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  check_same_dims(a, b, "trace_distance");
  return 0.5 * norm_trace(a - b);
}

double norm_hs(const Matrix& m) { return m.norm(); }

double hs_distance(const Matrix& a, const Matrix& b) {
  check_same_dims(a, b, "hs_distance");
  return (a - b).norm();
}

double fidelity_sqrt(const Matrix& a, const Matrix& b) {
  check_same_dims(a, b, "fidelity");
  return norm_trace(mat_sqrt(a) * mat_sqrt(b));
}

double fidelity_sqrt(const Vector& a, const Matrix& b) {
  return std::sqrt(fidelity(a, b));
}

double fidelity_sqrt(const Matrix& a, const Vector& b) {
  return std::sqrt(fidelity(a, b));
}

double fidelity_sqrt(const Vector& a, const Vector& b) {
  return std::abs(a.dot(b));
}

double fidelity(const Matrix& a, const Matrix& b) {
  const double f = fidelity_sqrt(a, b);
  return f * f;
}

// For a pure argument the fidelity collapses to an expectation value.
double fidelity(const Vector& a, const Matrix& b) {
  if (std::abs(a.norm() - 1.0) > 1e-6) {
    throw std::invalid_argument("fidelity: state vector is not normalized");
  }
  if (a.size() != b.rows() || b.rows() != b.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  return (a.adjoint() * b * a)(0).real();
}

double fidelity(const Matrix& a, const Vector& b) { return fidelity(b, a); }

double fidelity(const Vector& a, const Vector& b) {
  const double f = fidelity_sqrt(a, b);
  return f * f;
}

double superfidelity(const Matrix& a, const Matrix& b) {
  check_same_dims(a, b, "superfidelity");
  const double tab = (a * b).trace().real();
  const double ta = std::max(0.0, 1.0 - (a * a).trace().real());
  const double tb = std::max(0.0, 1.0 - (b * b).trace().real());
  return tab + std::sqrt(ta) * std::sqrt(tb);
}

double shannon_entropy(const Eigen::VectorXd& p) {
  double sum = 0.0, h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0.0) {
      throw std::invalid_argument("shannon_entropy: negative entry");
    }
    sum += p(i);
    h -= xlogx(p(i));
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("shannon_entropy: entries do not sum to 1");
  }
  return h;
}

double shannon_entropy(double a) {
  if (a < 0.0 || a > 1.0) {
    throw std::invalid_argument("shannon_entropy: scalar outside [0, 1]");
  }
  return -xlogx(a) - xlogx(1.0 - a);
}

double vonneumann_entropy(const Matrix& rho) {
  const Eigen::VectorXd ev = psd_eigenvalues(rho, "vonneumann_entropy");
  double h = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) h -= xlogx(ev(i));
  return h;
}

double relative_entropy(const Matrix& rho, const Matrix& sigma) {
  check_same_dims(rho, sigma, "relative_entropy");
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("relative_entropy: matrix must be square");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> er(0.5 * (rho + rho.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (sigma + sigma.adjoint()));
  psd_eigenvalues(rho, "relative_entropy");
  psd_eigenvalues(sigma, "relative_entropy");

  double h = 0.0;
  for (Eigen::Index i = 0; i < er.eigenvalues().size(); ++i) {
    h += xlogx(std::max(0.0, er.eigenvalues()(i)));
  }
  // -tr(rho log sigma) in sigma's eigenbasis; weight falling on a zero
  // eigenvalue of sigma means the supports are incompatible.
  for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
    const double mu = std::max(0.0, es.eigenvalues()(j));
    const Vector w = es.eigenvectors().col(j);
    const double weight = (w.adjoint() * rho * w)(0).real();
    if (mu <= tol::eig) {
      if (weight > tol::eig) return std::numeric_limits<double>::infinity();
      continue;
    }
    h -= weight * std::log(mu);
  }
  return h;
}

double kl_divergence(const Matrix& rho, const Matrix& sigma) {
  return relative_entropy(rho, sigma);
}

double js_divergence(const Matrix& a, const Matrix& b) {
  check_same_dims(a, b, "js_divergence");
  return 0.5 * (relative_entropy(a, b) + relative_entropy(b, a));
}

double bures_distance(const Matrix& a, const Matrix& b) {
  const double f = fidelity_sqrt(a, b);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - f)));
}

double bures_angle(const Matrix& a, const Matrix& b) {
  return std::acos(std::clamp(fidelity_sqrt(a, b), -1.0, 1.0));
}

double negativity(const Matrix& rho, const std::vector<int>& dims, int sys) {
  return 0.5 * (norm_trace(ptranspose(rho, dims, {sys})) - 1.0);
}

double log_negativity(const Matrix& rho, const std::vector<int>& dims, int sys) {
  return std::log(norm_trace(ptranspose(rho, dims, {sys})));
}

double ppt(const Matrix& rho, const std::vector<int>& dims, int sys) {
  const Matrix pt = ptranspose(rho, dims, {sys});
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (pt + pt.adjoint()));
  return es.eigenvalues().minCoeff();
}

double concurrence(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("concurrence: two-qubit state required");
  }
  const Matrix yy = tensor(pauli_y(), pauli_y());
  const Matrix flipped = yy * rho.conjugate() * yy;
  const Matrix root = mat_sqrt(rho);
  const Eigen::VectorXd ev =
      psd_eigenvalues(root * flipped * root, "concurrence");
  // ascending order from the solver
  const Eigen::Index n = ev.size();
  const double l0 = std::sqrt(ev(n - 1));
  const double rest =
      std::sqrt(ev(n - 2)) + std::sqrt(ev(n - 3)) + std::sqrt(ev(n - 4));
  return std::max(0.0, l0 - rest);
}

namespace {

// Signed Kraus form of a Hermiticity-preserving map, from the spectral
// decomposition of its Choi matrix.
struct SignedKraus {
  std::vector<Matrix> ops;
  std::vector<double> signs;
  int idim = 0;
  int odim = 0;
};

SignedKraus signed_kraus(const DynamicalMatrix& d) {
  const Matrix& j = d.matrix;
  if ((j - j.adjoint()).norm() > tol::herm * std::max(j.norm(), 1e-300)) {
    throw std::invalid_argument("diamond: map is not Hermiticity preserving");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (j + j.adjoint()));
  SignedKraus out;
  out.idim = d.idim;
  out.odim = d.odim;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lam = es.eigenvalues()(k);
    if (std::abs(lam) < tol::rank) continue;
    out.ops.push_back(
        unres(std::sqrt(std::abs(lam)) * es.eigenvectors().col(k), d.odim, d.idim));
    out.signs.push_back(lam >= 0.0 ? 1.0 : -1.0);
  }
  return out;
}

double diamond_lower_bound(const SignedKraus& sk, RngStream& rng,
                           const DiamondOptions& opt) {
  if (sk.ops.empty()) return 0.0;
  const int di = sk.idim;
  const int anc = di;  // ancilla of input size attains the norm
  const int dpsi = di * anc;
  const int dout = sk.odim * anc;

  // Lifted operators E_k (x) I once per solve.
  std::vector<Matrix> lifted;
  lifted.reserve(sk.ops.size());
  const Matrix ia = Matrix::Identity(anc, anc);
  for (const Matrix& e : sk.ops) lifted.push_back(tensor(e, ia));

  double best = 0.0;
  for (int start = 0; start < opt.starts; ++start) {
    Vector psi = sample_haar_ket(2, dpsi, rng);
    double prev = 0.0;
    for (int it = 0; it < opt.max_iters; ++it) {
      Matrix w = Matrix::Zero(dout, dout);
      for (size_t k = 0; k < lifted.size(); ++k) {
        const Vector v = lifted[k] * psi;
        w += sk.signs[k] * (v * v.adjoint());
      }
      Eigen::SelfAdjointEigenSolver<Matrix> ew(0.5 * (w + w.adjoint()));
      const double val = ew.eigenvalues().cwiseAbs().sum();
      if (val > best) best = val;

      // U = sign(W); M = sum_k s_k (E_k (x) I)^dagger U (E_k (x) I); the
      // next iterate is M's top eigenvector, which cannot decrease the
      // objective.
      Eigen::VectorXd sgn(ew.eigenvalues().size());
      for (Eigen::Index i = 0; i < sgn.size(); ++i) {
        sgn(i) = ew.eigenvalues()(i) >= 0.0 ? 1.0 : -1.0;
      }
      const Matrix u =
          ew.eigenvectors() * sgn.asDiagonal() * ew.eigenvectors().adjoint();
      Matrix m = Matrix::Zero(dpsi, dpsi);
      for (size_t k = 0; k < lifted.size(); ++k) {
        m += sk.signs[k] * (lifted[k].adjoint() * u * lifted[k]);
      }
      Eigen::SelfAdjointEigenSolver<Matrix> em(0.5 * (m + m.adjoint()));
      psi = em.eigenvectors().col(em.eigenvalues().size() - 1);

      if (it > 0 && val - prev < opt.gain_tol) break;
      prev = val;
    }
  }
  return best;
}

}  // namespace

double norm_diamond(const Channel& c, RngStream& rng, const DiamondOptions& opt) {
  return diamond_lower_bound(signed_kraus(to_dynamical(c)), rng, opt);
}

double diamond_distance(const Channel& a, const Channel& b, RngStream& rng,
                        const DiamondOptions& opt) {
  if (idim(a) != idim(b) || odim(a) != odim(b)) {
    throw std::invalid_argument("diamond_distance: dimension mismatch");
  }
  const DynamicalMatrix da = to_dynamical(a);
  const DynamicalMatrix db = to_dynamical(b);
  const DynamicalMatrix diff(da.matrix - db.matrix, da.idim, da.odim);
  return diamond_lower_bound(signed_kraus(diff), rng, opt);
}

}  // namespace qi
