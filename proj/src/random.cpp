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

#include "qi/random.hpp"

#include <cmath>
#include <stdexcept>

#include "qi/tensorops.hpp"

namespace qi {

double RngStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // in (0, 1], keeps the log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  cached_ = r * std::sin(t);
  has_cached_ = true;
  return r * std::cos(t);
}

namespace {

int ceil_cols(double kfac, int d) {
  const int n = static_cast<int>(std::ceil(kfac * d - 1e-12));
  if (n < 1) throw std::invalid_argument("sampler: ceil(kfac * d) must be >= 1");
  return n;
}

// QR with the column phase fix r_ii / |r_ii|; maps ginibre input to the
// relevant Haar measure.
Matrix qr_phase_fixed(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
  const Matrix r = qr.matrixQR().topRows(g.cols()).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < g.cols(); ++i) {
    const cplx rii = r(i, i);
    const double a = std::abs(rii);
    if (a == 0.0) throw std::runtime_error("sampler: singular QR factor");
    q.col(i) *= rii / a;
  }
  return q;
}

}  // namespace

Matrix sample_ginibre(int beta, int m, int n, RngStream& rng) {
  if (m < 1 || n < 1) throw std::invalid_argument("ginibre: dims must be >= 1");
  switch (beta) {
    case 1: {
      Matrix g(m, n);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          g(i, j) = rng.normal();
        }
      }
      return g;
    }
    case 2: {
      const double s = 1.0 / std::sqrt(2.0);
      Matrix g(m, n);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          const double x = rng.normal();
          const double y = rng.normal();
          g(i, j) = cplx(x * s, y * s);
        }
      }
      return g;
    }
    case 4: {
      Matrix g(2 * m, 2 * n);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          const cplx a(rng.normal() * 0.5, rng.normal() * 0.5);
          const cplx b(rng.normal() * 0.5, rng.normal() * 0.5);
          g(2 * i, 2 * j) = a;
          g(2 * i, 2 * j + 1) = b;
          g(2 * i + 1, 2 * j) = -std::conj(b);
          g(2 * i + 1, 2 * j + 1) = std::conj(a);
        }
      }
      return g;
    }
    default:
      throw std::invalid_argument("ginibre: beta must be 1, 2 or 4");
  }
}

Matrix sample_wishart(int beta, double kfac, int d, RngStream& rng) {
  const Matrix g = sample_ginibre(beta, d, ceil_cols(kfac, d), rng);
  return g * g.adjoint();
}

Matrix symplectic_dual(const Matrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n % 2 != 0) {
    throw std::invalid_argument("symplectic_dual: matrix must be square with even dim");
  }
  Matrix j = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; k += 2) {
    j(k, k + 1) = -1.0;
    j(k + 1, k) = 1.0;
  }
  // J^{-1} = -J
  return j * m.transpose() * (-j);
}

Matrix sample_circular(EnsembleKind kind, int beta, int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("circular: dim must be >= 1");
  switch (kind) {
    case EnsembleKind::circular:
      switch (beta) {
        case 2:
          return qr_phase_fixed(sample_ginibre(2, d, d, rng));
        case 1: {
          const Matrix u = qr_phase_fixed(sample_ginibre(2, d, d, rng));
          return u.transpose() * u;
        }
        case 4: {
          const Matrix u = qr_phase_fixed(sample_ginibre(2, 2 * d, 2 * d, rng));
          return symplectic_dual(u) * u;
        }
        default:
          throw std::invalid_argument("circular: beta must be 1, 2 or 4");
      }
    case EnsembleKind::circular_real:
      return qr_phase_fixed(sample_ginibre(1, d, d, rng));
    case EnsembleKind::circular_quaternion:
      return qr_phase_fixed(sample_ginibre(4, d, d, rng));
    default:
      throw std::invalid_argument("circular: not a circular ensemble kind");
  }
}

Matrix sample_haar_isometry(int m, int n, RngStream& rng) {
  if (m < n || n < 1) {
    throw std::invalid_argument("haar_isometry: need m >= n >= 1");
  }
  return qr_phase_fixed(sample_ginibre(2, m, n, rng));
}

Vector sample_haar_ket(int beta, int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("haar_ket: dim must be >= 1");
  if (beta != 1 && beta != 2) {
    throw std::invalid_argument("haar_ket: beta must be 1 or 2");
  }
  const Matrix g = sample_ginibre(beta, d, 1, rng);
  Vector v = g.col(0);
  return v / v.norm();
}

Matrix sample_hs_state(int beta, double kfac, int d, RngStream& rng) {
  const Matrix w = sample_wishart(beta, kfac, d, rng);
  return w / w.trace();
}

Matrix sample_choi(int beta, double kfac, int idim, int odim, RngStream& rng) {
  if (idim < 1 || odim < 1) {
    throw std::invalid_argument("choi: dims must be >= 1");
  }
  if (beta != 1 && beta != 2) {
    throw std::invalid_argument("choi: beta must be 1 or 2");
  }
  const int dd = idim * odim;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const Matrix g = sample_ginibre(beta, dd, ceil_cols(kfac, dd), rng);
    const Matrix w = g * g.adjoint();
    const Matrix s = ptrace(w, {odim, idim}, {1});
    Eigen::SelfAdjointEigenSolver<Matrix> es(s);
    if (es.eigenvalues().minCoeff() <= 1e-12 * es.eigenvalues().maxCoeff()) {
      continue;  // numerically singular normalizer, resample
    }
    Eigen::VectorXd inv_sqrt(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < inv_sqrt.size(); ++i) {
      inv_sqrt(i) = 1.0 / std::sqrt(es.eigenvalues()(i));
    }
    const Matrix s_inv_sqrt =
        es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    const Matrix k = tensor(Matrix::Identity(odim, odim), s_inv_sqrt);
    return k * w * k;
  }
  throw std::runtime_error("choi: normalizer stayed singular after 5 attempts");
}

Matrix sample(const EnsembleDescriptor& desc, RngStream& rng) {
  switch (desc.kind) {
    case EnsembleKind::ginibre:
      return sample_ginibre(desc.beta, desc.m, desc.n, rng);
    case EnsembleKind::wishart:
      return sample_wishart(desc.beta, desc.kfac, desc.d, rng);
    case EnsembleKind::circular:
    case EnsembleKind::circular_real:
    case EnsembleKind::circular_quaternion:
      return sample_circular(desc.kind, desc.beta, desc.d, rng);
    case EnsembleKind::haar_ket:
      return sample_haar_ket(desc.beta, desc.d, rng);
    case EnsembleKind::hs_state:
      return sample_hs_state(desc.beta, desc.kfac, desc.d, rng);
    case EnsembleKind::choi_channel:
      return sample_choi(desc.beta, desc.kfac, desc.idim, desc.odim, rng);
  }
  throw std::invalid_argument("sample: unknown ensemble kind");
}

}  // namespace qi
