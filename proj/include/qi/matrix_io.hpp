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

#ifndef QI_MATRIX_IO_HPP_
#define QI_MATRIX_IO_HPP_

#include <iosfwd>
#include <string>

#include "qi/types.hpp"

namespace qi {

// Text format: a header line "rows cols", then one line per row with
// space-separated complex tokens "<re><+-><im>j". Entries are printed with
// %.17g so a dump/load round trip is bit exact for finite doubles.
void dump_matrix(const Matrix& m, std::ostream& os);
void dump_matrix(const Matrix& m, const std::string& path);

Matrix load_matrix(std::istream& is);
Matrix load_matrix(const std::string& path);

}  // namespace qi

#endif  // QI_MATRIX_IO_HPP_
