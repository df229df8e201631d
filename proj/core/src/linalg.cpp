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

#include "sigmacode/linalg.hpp"

#include <algorithm>

#include "sigmacode/error.hpp"

namespace sigmacode::linalg {

std::vector<std::size_t> rref(const Field& f, std::vector<Row>& rows, std::size_t ncols) {
    for (const Row& r : rows)
        if (r.size() != ncols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    std::vector<std::size_t> pivots;
    std::size_t top = 0;
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
        std::size_t sel = top;
        while (sel < rows.size() && rows[sel][col] == Field::zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[top], rows[sel]);
        const Elem inv = f.inv(rows[top][col]);
        for (std::size_t j = col; j < ncols; ++j) rows[top][j] = f.mul(rows[top][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == top || rows[i][col] == Field::zero()) continue;
            const Elem factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[top][j]));
        }
        pivots.push_back(col);
        ++top;
    }
    rows.resize(top);
    return pivots;
}

std::size_t rank(const Field& f, std::vector<Row> rows, std::size_t ncols) { return rref(f, rows, ncols).size(); }

std::vector<Row> kernel(const Field& f, std::vector<Row> rows, std::size_t ncols) {
    const auto pivots = rref(f, rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Row v(ncols, Field::zero());
        v[free] = Field::one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sigmacode::linalg
