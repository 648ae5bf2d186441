// Copyright 2026 The gnps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gnps/linalg.h"

namespace gnps {

NullSpace<QScalar> null_space_real(const std::vector<std::vector<QScalar>> &constraints, size_t num_unknowns) {
    Eliminator<QScalar> elim(num_unknowns);
    for (const auto &row : constraints) {
        if (row.size() != num_unknowns) {
            throw DimensionError("constraint row length does not match the number of unknowns");
        }
        elim.add_dense_row(row);
    }
    NullSpace<QScalar> out;
    out.basis = elim.null_space();
    out.dimension = out.basis.size();
    return out;
}

}  // namespace gnps
