/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SIGMACODE_LINALG_HPP
#define SIGMACODE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "sigmacode/gf.hpp"

namespace sigmacode::linalg {

using Row = std::vector<Elem>;

/// Reduced row echelon form in place; zero rows are dropped. Returns pivot columns.
std::vector<std::size_t> rref(const Field& f, std::vector<Row>& rows, std::size_t ncols);

std::size_t rank(const Field& f, std::vector<Row> rows, std::size_t ncols);

/// Kernel basis: one vector per free column, 1 at that column and 0 at the other free columns.
std::vector<Row> kernel(const Field& f, std::vector<Row> rows, std::size_t ncols);

}  // namespace sigmacode::linalg

#endif
