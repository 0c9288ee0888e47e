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

#include "qi/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "qi/states.hpp"
#include "qi/tensorops.hpp"

namespace qi {

namespace {

int int_sqrt_exact(Eigen::Index n, const char* what) {
  const int r = static_cast<int>(std::llround(std::sqrt(double(n))));
  if (Eigen::Index(r) * r != n) {
    throw std::invalid_argument(std::string(what) + ": dimension is not a perfect square");
  }
  return r;
}

}  // namespace

KrausSet::KrausSet(std::vector<Matrix> k) : ops(std::move(k)) {
  if (ops.empty()) throw std::invalid_argument("KrausSet: empty operator list");
  odim = int(ops[0].rows());
  idim = int(ops[0].cols());
  for (const Matrix& op : ops) {
    if (op.rows() != odim || op.cols() != idim) {
      throw std::invalid_argument("KrausSet: operators differ in shape");
    }
  }
}

SuperOperatorMatrix::SuperOperatorMatrix(Matrix m, int idim_, int odim_)
    : idim(idim_), odim(odim_), matrix(std::move(m)) {
  if (matrix.rows() != Eigen::Index(odim) * odim ||
      matrix.cols() != Eigen::Index(idim) * idim) {
    throw std::invalid_argument("SuperOperatorMatrix: shape != odim^2 x idim^2");
  }
}

SuperOperatorMatrix::SuperOperatorMatrix(Matrix m) : matrix(std::move(m)) {
  odim = int_sqrt_exact(matrix.rows(), "SuperOperatorMatrix");
  idim = int_sqrt_exact(matrix.cols(), "SuperOperatorMatrix");
}

DynamicalMatrix::DynamicalMatrix(Matrix m, int idim_, int odim_)
    : idim(idim_), odim(odim_), matrix(std::move(m)) {
  const Eigen::Index d = Eigen::Index(idim) * odim;
  if (matrix.rows() != d || matrix.cols() != d) {
    throw std::invalid_argument("DynamicalMatrix: shape != (odim*idim) square");
  }
}

StinespringOperator::StinespringOperator(Matrix a_, int odim_)
    : odim(odim_), a(std::move(a_)) {
  if (odim < 1 || a.rows() % odim != 0) {
    throw std::invalid_argument("StinespringOperator: rows not a multiple of odim");
  }
  envdim = int(a.rows()) / odim;
  idim = int(a.cols());
}

UnitaryChannel::UnitaryChannel(Matrix u_) : u(std::move(u_)) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("UnitaryChannel: matrix must be square");
  }
}

IdentityChannel::IdentityChannel(int d_) : d(d_) {
  if (d < 1) throw std::invalid_argument("IdentityChannel: dim must be >= 1");
}

POVMMeasurement::POVMMeasurement(std::vector<Matrix> effects_)
    : effects(std::move(effects_)) {
  if (effects.empty()) throw std::invalid_argument("POVMMeasurement: no effects");
  idim = int(effects[0].rows());
  for (const Matrix& e : effects) {
    if (e.rows() != idim || e.cols() != idim) {
      throw std::invalid_argument("POVMMeasurement: effects must be idim square");
    }
  }
}

PostSelectionMeasurement::PostSelectionMeasurement(Matrix e) : effect(std::move(e)) {
  if (effect.rows() < 1 || effect.cols() < 1) {
    throw std::invalid_argument("PostSelectionMeasurement: empty effect");
  }
}

int idim(const Channel& c) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UnitaryChannel>) {
          return int(v.u.cols());
        } else if constexpr (std::is_same_v<T, IdentityChannel>) {
          return v.d;
        } else if constexpr (std::is_same_v<T, PostSelectionMeasurement>) {
          return int(v.effect.cols());
        } else {
          return v.idim;
        }
      },
      c);
}

int odim(const Channel& c) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UnitaryChannel>) {
          return int(v.u.rows());
        } else if constexpr (std::is_same_v<T, IdentityChannel>) {
          return v.d;
        } else if constexpr (std::is_same_v<T, PostSelectionMeasurement>) {
          return int(v.effect.rows());
        } else if constexpr (std::is_same_v<T, POVMMeasurement>) {
          return int(v.effects.size());
        } else {
          return v.odim;
        }
      },
      c);
}

namespace {

// Kraus set of the measurement channel rho -> sum_xi tr(rho mu_xi)
// |xi><xi|: for each effect's spectral decomposition mu = sum lambda |phi><phi|
// take sqrt(lambda) |xi><phi|. Action equality is checked in tests.
KrausSet povm_kraus(const POVMMeasurement& p) {
  const int n = int(p.effects.size());
  std::vector<Matrix> ops;
  for (int xi = 0; xi < n; ++xi) {
    const Matrix& e = p.effects[xi];
    const double asym = (e - e.adjoint()).norm();
    if (asym > tol::herm * std::max(e.norm(), 1e-300)) {
      throw std::invalid_argument("POVM: effect is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (e + e.adjoint()));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const double lam = es.eigenvalues()(k);
      if (lam < -tol::eig) {
        throw std::invalid_argument("POVM: effect has a negative eigenvalue");
      }
      if (lam < tol::rank) continue;
      Matrix op = Matrix::Zero(n, p.idim);
      op.row(xi) = std::sqrt(lam) * es.eigenvectors().col(k).adjoint();
      ops.push_back(std::move(op));
    }
  }
  if (ops.empty()) ops.push_back(Matrix::Zero(n, p.idim));
  return KrausSet(std::move(ops));
}

KrausSet choi_to_kraus(const DynamicalMatrix& dyn) {
  const Matrix& j = dyn.matrix;
  const double asym = (j - j.adjoint()).norm();
  if (asym > tol::herm * std::max(j.norm(), 1e-300)) {
    throw std::invalid_argument("convert: Choi matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (j + j.adjoint()));
  std::vector<Matrix> ops;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lam = es.eigenvalues()(k);
    if (lam < -tol::eig) {
      throw std::invalid_argument("convert: Choi matrix is not completely positive");
    }
    if (lam < tol::rank) continue;
    ops.push_back(unres(std::sqrt(lam) * es.eigenvectors().col(k), dyn.odim, dyn.idim));
  }
  if (ops.empty()) ops.push_back(Matrix::Zero(dyn.odim, dyn.idim));
  KrausSet k(std::move(ops));
  k.idim = dyn.idim;
  k.odim = dyn.odim;
  return k;
}

SuperOperatorMatrix kraus_to_superop(const KrausSet& k) {
  Matrix m = Matrix::Zero(Eigen::Index(k.odim) * k.odim, Eigen::Index(k.idim) * k.idim);
  for (const Matrix& op : k.ops) {
    m += tensor(op, Matrix(op.conjugate()));
  }
  return SuperOperatorMatrix(std::move(m), k.idim, k.odim);
}

DynamicalMatrix kraus_to_dynamical(const KrausSet& k) {
  const Eigen::Index d = Eigen::Index(k.odim) * k.idim;
  Matrix j = Matrix::Zero(d, d);
  for (const Matrix& op : k.ops) {
    const Vector r = res(op);
    j += r * r.adjoint();
  }
  return DynamicalMatrix(std::move(j), k.idim, k.odim);
}

StinespringOperator kraus_to_stinespring(const KrausSet& k) {
  Matrix a(Eigen::Index(k.ops.size()) * k.odim, k.idim);
  for (size_t i = 0; i < k.ops.size(); ++i) {
    a.block(Eigen::Index(i) * k.odim, 0, k.odim, k.idim) = k.ops[i];
  }
  return StinespringOperator(std::move(a), k.odim);
}

SuperOperatorMatrix dynamical_to_superop(const DynamicalMatrix& d) {
  return SuperOperatorMatrix(reshuffle(d.matrix, d.odim, d.idim, d.odim, d.idim),
                             d.idim, d.odim);
}

DynamicalMatrix superop_to_dynamical(const SuperOperatorMatrix& s) {
  return DynamicalMatrix(reshuffle(s.matrix, s.odim, s.odim, s.idim, s.idim),
                         s.idim, s.odim);
}

}  // namespace

KrausSet to_kraus(const Channel& c) {
  return std::visit(
      [](const auto& v) -> KrausSet {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, KrausSet>) {
          return v;
        } else if constexpr (std::is_same_v<T, SuperOperatorMatrix>) {
          return choi_to_kraus(superop_to_dynamical(v));
        } else if constexpr (std::is_same_v<T, DynamicalMatrix>) {
          return choi_to_kraus(v);
        } else if constexpr (std::is_same_v<T, StinespringOperator>) {
          std::vector<Matrix> ops;
          for (int i = 0; i < v.envdim; ++i) {
            ops.push_back(v.a.block(Eigen::Index(i) * v.odim, 0, v.odim, v.idim));
          }
          return KrausSet(std::move(ops));
        } else if constexpr (std::is_same_v<T, UnitaryChannel>) {
          return KrausSet({v.u});
        } else if constexpr (std::is_same_v<T, IdentityChannel>) {
          return KrausSet({Matrix::Identity(v.d, v.d)});
        } else if constexpr (std::is_same_v<T, POVMMeasurement>) {
          return povm_kraus(v);
        } else {
          return KrausSet({v.effect});
        }
      },
      c);
}

SuperOperatorMatrix to_superop(const Channel& c) {
  if (const auto* s = std::get_if<SuperOperatorMatrix>(&c)) return *s;
  if (const auto* d = std::get_if<DynamicalMatrix>(&c)) return dynamical_to_superop(*d);
  return kraus_to_superop(to_kraus(c));
}

DynamicalMatrix to_dynamical(const Channel& c) {
  if (const auto* d = std::get_if<DynamicalMatrix>(&c)) return *d;
  if (const auto* s = std::get_if<SuperOperatorMatrix>(&c)) return superop_to_dynamical(*s);
  return kraus_to_dynamical(to_kraus(c));
}

StinespringOperator to_stinespring(const Channel& c) {
  if (const auto* s = std::get_if<StinespringOperator>(&c)) return *s;
  return kraus_to_stinespring(to_kraus(c));
}

Channel convert(const Channel& c, Rep target) {
  switch (target) {
    case Rep::kraus:
      return to_kraus(c);
    case Rep::superop:
      return to_superop(c);
    case Rep::dynamical:
      return to_dynamical(c);
    case Rep::stinespring:
      return to_stinespring(c);
  }
  throw std::invalid_argument("convert: unknown target representation");
}

Validity validate(const Channel& c) {
  try {
    // Choi-based classification for the matrix forms, Kraus sum for the rest.
    Matrix s;  // sum K^dagger K, idim square
    bool cp = true;
    if (std::holds_alternative<DynamicalMatrix>(c) ||
        std::holds_alternative<SuperOperatorMatrix>(c)) {
      const DynamicalMatrix d = to_dynamical(c);
      const Matrix& j = d.matrix;
      if ((j - j.adjoint()).norm() > tol::herm * std::max(j.norm(), 1e-300)) {
        return Validity::neither;
      }
      Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (j + j.adjoint()));
      cp = es.eigenvalues().minCoeff() >= -tol::eig;
      s = ptrace(j, {d.odim, d.idim}, {1});
    } else {
      const KrausSet k = to_kraus(c);
      s = Matrix::Zero(k.idim, k.idim);
      for (const Matrix& op : k.ops) s += op.adjoint() * op;
    }
    if (!cp) return Validity::neither;
    const Matrix resid = s - Matrix::Identity(s.rows(), s.cols());
    if (resid.norm() <= tol::tp) return Validity::cptp;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (resid + resid.adjoint()));
    if (es.eigenvalues().maxCoeff() <= tol::tp) return Validity::cptni;
    return Validity::neither;
  } catch (const std::exception&) {
    return Validity::neither;
  }
}

Matrix apply(const Channel& c, const Matrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() != idim(c)) {
    throw std::invalid_argument("apply: state dimension != channel input dimension");
  }
  return std::visit(
      [&rho](const auto& v) -> Matrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, KrausSet>) {
          Matrix out = Matrix::Zero(v.odim, v.odim);
          for (const Matrix& op : v.ops) out += op * rho * op.adjoint();
          return out;
        } else if constexpr (std::is_same_v<T, SuperOperatorMatrix>) {
          return unres(v.matrix * res(rho), v.odim, v.odim);
        } else if constexpr (std::is_same_v<T, DynamicalMatrix>) {
          const Matrix m = v.matrix * tensor(Matrix(Matrix::Identity(v.odim, v.odim)),
                                             Matrix(rho.transpose()));
          return ptrace(m, {v.odim, v.idim}, {2});
        } else if constexpr (std::is_same_v<T, StinespringOperator>) {
          const Matrix m = v.a * rho * v.a.adjoint();
          return ptrace(m, {v.envdim, v.odim}, {1});
        } else if constexpr (std::is_same_v<T, UnitaryChannel>) {
          return v.u * rho * v.u.adjoint();
        } else if constexpr (std::is_same_v<T, IdentityChannel>) {
          return rho;
        } else if constexpr (std::is_same_v<T, POVMMeasurement>) {
          const int n = int(v.effects.size());
          Matrix out = Matrix::Zero(n, n);
          for (int xi = 0; xi < n; ++xi) {
            out(xi, xi) = (rho * v.effects[xi]).trace();
          }
          return out;
        } else {
          return v.effect * rho * v.effect.adjoint();
        }
      },
      c);
}

Matrix apply(const Channel& c, const Vector& psi) { return qi::apply(c, proj(psi)); }

Vector apply_ket(const Channel& c, const Vector& psi) {
  if (psi.size() != idim(c)) {
    throw std::invalid_argument("apply_ket: state dimension != channel input dimension");
  }
  if (const auto* u = std::get_if<UnitaryChannel>(&c)) return u->u * psi;
  if (std::holds_alternative<IdentityChannel>(c)) return psi;
  throw std::invalid_argument("apply_ket: only unitary and identity channels map kets");
}

Channel compose_sequential(const Channel& f, const Channel& g) {
  if (odim(g) != idim(f)) {
    throw std::invalid_argument("compose_sequential: inner dimensions do not match");
  }
  const SuperOperatorMatrix sf = to_superop(f);
  const SuperOperatorMatrix sg = to_superop(g);
  return SuperOperatorMatrix(sf.matrix * sg.matrix, sg.idim, sf.odim);
}

Channel compose_parallel(const Channel& f, const Channel& g) {
  const KrausSet kf = to_kraus(f);
  const KrausSet kg = to_kraus(g);
  std::vector<Matrix> ops;
  ops.reserve(kf.ops.size() * kg.ops.size());
  for (const Matrix& a : kf.ops) {
    for (const Matrix& b : kg.ops) {
      ops.push_back(tensor(a, b));
    }
  }
  KrausSet k(std::move(ops));
  k.idim = kf.idim * kg.idim;
  k.odim = kf.odim * kg.odim;
  return k;
}

}  // namespace qi
