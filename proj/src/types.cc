// Copyright 2026 The sqz Authors
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

#include "sqz/error.h"
#include "sqz/types.h"

namespace sqz {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kValidation:
            return "validation";
        case ErrorKind::kDimension:
            return "dimension";
        case ErrorKind::kDomain:
            return "domain";
        case ErrorKind::kRange:
            return "range";
        case ErrorKind::kSize:
            return "size";
        case ErrorKind::kAccuracy:
            return "accuracy";
        case ErrorKind::kConsistency:
            return "consistency";
        case ErrorKind::kConvergence:
            return "convergence";
        case ErrorKind::kPath:
            return "path";
        case ErrorKind::kRank:
            return "rank";
        case ErrorKind::kDegenerate:
            return "degenerate";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kValidation:
        case ErrorKind::kDimension:
        case ErrorKind::kDomain:
        case ErrorKind::kRange:
        case ErrorKind::kSize:
            return 2;
        case ErrorKind::kAccuracy:
        case ErrorKind::kConsistency:
        case ErrorKind::kConvergence:
            return 3;
        case ErrorKind::kPath:
            return 4;
        case ErrorKind::kRank:
        case ErrorKind::kDegenerate:
            return 5;
    }
    return 1;
}

double norm2(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double min_singular_value(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

CVector stack_conj(const CVector &v) {
    CVector out(2 * v.size());
    out << v, v.conjugate();
    return out;
}

}  // namespace sqz
