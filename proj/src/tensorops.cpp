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

#include "qi/tensorops.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qi {

namespace {

int checked_int_sqrt(Eigen::Index n, const char* what) {
  const int r = static_cast<int>(std::llround(std::sqrt(double(n))));
  if (Eigen::Index(r) * r != n) {
    throw std::invalid_argument(std::string(what) + ": size is not a perfect square");
  }
  return r;
}

// Validates dims/sys and returns 0-based positions.
std::vector<int> checked_positions(const Matrix& m, const std::vector<int>& dims,
                                   const std::vector<int>& sys) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("subsystem op: matrix must be square");
  }
  long long prod = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("subsystem op: dims must be >= 1");
    prod *= d;
  }
  if (prod != m.rows()) {
    throw std::invalid_argument("subsystem op: product of dims != matrix dim");
  }
  std::vector<int> pos;
  std::vector<bool> seen(dims.size(), false);
  for (int s : sys) {
    if (s < 1 || size_t(s) > dims.size()) {
      throw std::invalid_argument("subsystem op: subsystem index out of range");
    }
    if (seen[s - 1]) {
      throw std::invalid_argument("subsystem op: repeated subsystem index");
    }
    seen[s - 1] = true;
    pos.push_back(s - 1);
  }
  return pos;
}

// Strides of the mixed-radix index (dims, leftmost factor most significant).
std::vector<long long> strides_of(const std::vector<int>& dims) {
  std::vector<long long> st(dims.size(), 1);
  for (int k = int(dims.size()) - 2; k >= 0; --k) {
    st[k] = st[k + 1] * dims[k + 1];
  }
  return st;
}

}  // namespace

Vector res(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      v(k++) = m(i, j);
    }
  }
  return v;
}

Matrix unres(const Vector& v, int rows, int cols) {
  if (rows < 1 || cols < 1 || v.size() != Eigen::Index(rows) * cols) {
    throw std::invalid_argument("unres: length does not match rows*cols");
  }
  Matrix m(rows, cols);
  Eigen::Index k = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = v(k++);
    }
  }
  return m;
}

Matrix unres(const Vector& v) {
  const int d = checked_int_sqrt(v.size(), "unres");
  return unres(v, d, d);
}

Matrix ptrace(const Matrix& m, const std::vector<int>& dims,
              const std::vector<int>& sys) {
  const std::vector<int> traced = checked_positions(m, dims, sys);
  const int n = int(dims.size());
  std::vector<bool> is_traced(n, false);
  for (int p : traced) is_traced[p] = true;

  std::vector<int> kept;
  for (int k = 0; k < n; ++k) {
    if (!is_traced[k]) kept.push_back(k);
  }
  const auto st = strides_of(dims);

  long long kept_dim = 1;
  for (int k : kept) kept_dim *= dims[k];
  long long traced_dim = 1;
  for (int p : traced) traced_dim *= dims[p];

  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  // Enumerate kept row/col multi-indices; sum the diagonal over traced
  // factors. Offsets are precomputed per enumeration step.
  std::vector<int> ki(kept.size(), 0), kj(kept.size(), 0), ti(traced.size(), 0);
  for (long long r = 0; r < kept_dim; ++r) {
    long long base_r = 0;
    for (size_t a = 0; a < kept.size(); ++a) base_r += ki[a] * st[kept[a]];
    std::fill(kj.begin(), kj.end(), 0);
    for (long long c = 0; c < kept_dim; ++c) {
      long long base_c = 0;
      for (size_t a = 0; a < kept.size(); ++a) base_c += kj[a] * st[kept[a]];
      cplx acc = 0.0;
      std::fill(ti.begin(), ti.end(), 0);
      for (long long t = 0; t < traced_dim; ++t) {
        long long off = 0;
        for (size_t a = 0; a < traced.size(); ++a) off += ti[a] * st[traced[a]];
        acc += m(base_r + off, base_c + off);
        for (int a = int(traced.size()) - 1; a >= 0; --a) {
          if (++ti[a] < dims[traced[a]]) break;
          ti[a] = 0;
        }
      }
      out(r, c) = acc;
      for (int a = int(kept.size()) - 1; a >= 0; --a) {
        if (++kj[a] < dims[kept[a]]) break;
        kj[a] = 0;
      }
    }
    for (int a = int(kept.size()) - 1; a >= 0; --a) {
      if (++ki[a] < dims[kept[a]]) break;
      ki[a] = 0;
    }
  }
  return out;
}

Matrix ptranspose(const Matrix& m, const std::vector<int>& dims,
                  const std::vector<int>& sys) {
  const std::vector<int> swapped = checked_positions(m, dims, sys);
  const int n = int(dims.size());
  std::vector<bool> do_swap(n, false);
  for (int p : swapped) do_swap[p] = true;
  const auto st = strides_of(dims);
  const long long dim = m.rows();

  Matrix out(dim, dim);
  std::vector<int> ri(n, 0), ci(n, 0);
  for (long long r = 0; r < dim; ++r) {
    std::fill(ci.begin(), ci.end(), 0);
    for (long long c = 0; c < dim; ++c) {
      long long rr = 0, cc = 0;
      for (int k = 0; k < n; ++k) {
        const int a = do_swap[k] ? ci[k] : ri[k];
        const int b = do_swap[k] ? ri[k] : ci[k];
        rr += a * st[k];
        cc += b * st[k];
      }
      out(rr, cc) = m(r, c);
      for (int k = n - 1; k >= 0; --k) {
        if (++ci[k] < dims[k]) break;
        ci[k] = 0;
      }
    }
    for (int k = n - 1; k >= 0; --k) {
      if (++ri[k] < dims[k]) break;
      ri[k] = 0;
    }
  }
  return out;
}

Matrix reshuffle(const Matrix& m, int r1, int r2, int c1, int c2) {
  if (r1 < 1 || r2 < 1 || c1 < 1 || c2 < 1 ||
      m.rows() != Eigen::Index(r1) * r2 || m.cols() != Eigen::Index(c1) * c2) {
    throw std::invalid_argument("reshuffle: factor dims do not match matrix");
  }
  Matrix out(Eigen::Index(r1) * c1, Eigen::Index(r2) * c2);
  for (int a = 0; a < r1; ++a) {
    for (int b = 0; b < r2; ++b) {
      for (int c = 0; c < c1; ++c) {
        for (int d = 0; d < c2; ++d) {
          out(Eigen::Index(a) * c1 + c, Eigen::Index(b) * c2 + d) =
              m(Eigen::Index(a) * r2 + b, Eigen::Index(c) * c2 + d);
        }
      }
    }
  }
  return out;
}

Matrix reshuffle(const Matrix& m) {
  const int r = checked_int_sqrt(m.rows(), "reshuffle");
  const int c = checked_int_sqrt(m.cols(), "reshuffle");
  return reshuffle(m, r, r, c, c);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

Vector tensor(const Vector& a, const Vector& b) {
  Vector v(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    v.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return v;
}

Matrix herm_func(const Matrix& m, const std::function<double(double)>& f,
                 bool require_psd) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("herm_func: matrix must be square");
  }
  const double asym = (m - m.adjoint()).norm();
  const double scale = std::max(m.norm(), 1e-300);
  if (asym > tol::herm * scale) {
    throw std::invalid_argument("herm_func: matrix is not Hermitian");
  }
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("herm_func: eigendecomposition failed");
  }
  Eigen::VectorXd ev = es.eigenvalues();
  if (require_psd) {
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) < -tol::eig) {
        throw std::invalid_argument("herm_func: negative eigenvalue on PSD input");
      }
      if (ev(i) < 0.0) ev(i) = 0.0;
    }
  }
  Eigen::VectorXd fe(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) fe(i) = f(ev(i));
  return es.eigenvectors() * fe.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix mat_sqrt(const Matrix& m) {
  return herm_func(m, [](double x) { return std::sqrt(x); }, true);
}

}  // namespace qi
