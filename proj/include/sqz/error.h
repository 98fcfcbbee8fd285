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

#ifndef SQZ_ERROR_H
#define SQZ_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqz {

enum class ErrorKind {
    kValidation,   // malformed or invariant-violating input
    kDimension,    // shape mismatch
    kDomain,       // input outside the function's domain (branch cut, negative eigenvalue)
    kRange,        // result not representable (overflow)
    kSize,         // problem exceeds configured size caps
    kAccuracy,     // internal accuracy certificate failed
    kConsistency,  // two routes that must agree did not
    kConvergence,  // iterative refinement or quadrature did not converge
    kPath,         // pathological evolution path (step underflow)
    kRank,         // numerically dependent family / singular input
    kDegenerate,   // degenerate generator or overlap
};

std::string_view to_string(ErrorKind kind);

/// Process exit code for an error kind: 2 validation, 3 accuracy, 4 path, 5 rank.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
    throw Error(kind, what);
}

}  // namespace sqz

#endif
