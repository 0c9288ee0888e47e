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

#include "qi/matrix_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qi {

namespace {

std::string format_entry(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

cplx parse_entry(const std::string& token) {
  const char* s = token.c_str();
  char* end = nullptr;
  const double re = std::strtod(s, &end);
  if (end == s) throw std::runtime_error("load_matrix: bad token '" + token + "'");
  const char* mid = end;
  const double im = std::strtod(mid, &end);
  if (end == mid || *end != 'j' || *(end + 1) != '\0') {
    throw std::runtime_error("load_matrix: bad token '" + token + "'");
  }
  return {re, im};
}

}  // namespace

void dump_matrix(const Matrix& m, std::ostream& os) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ' ';
      os << format_entry(m(r, c));
    }
    os << '\n';
  }
}

void dump_matrix(const Matrix& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("dump_matrix: cannot open '" + path + "'");
  dump_matrix(m, f);
  if (!f) throw std::runtime_error("dump_matrix: write failed for '" + path + "'");
}

Matrix load_matrix(std::istream& is) {
  Eigen::Index rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw std::runtime_error("load_matrix: bad header");
  }
  Matrix m(rows, cols);
  std::string token;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!(is >> token)) throw std::runtime_error("load_matrix: truncated input");
      m(r, c) = parse_entry(token);
    }
  }
  return m;
}

Matrix load_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("load_matrix: cannot open '" + path + "'");
  return load_matrix(f);
}

}  // namespace qi
