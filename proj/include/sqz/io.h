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

#ifndef SQZ_IO_H
#define SQZ_IO_H

#include <string>

#include <nlohmann/json.hpp>

#include "sqz/jordanfn.h"
#include "sqz/symplectic.h"
#include "sqz/types.h"

namespace sqz {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Json vector_to_json(const CVector &v);
Json matrix_to_json(const CMatrix &m);
Json real_vector_to_json(const RVector &v);

Complex complex_from_json(const Json &j, const std::string &where);
CVector vector_from_json(const Json &j, const std::string &where);
CMatrix matrix_from_json(const Json &j, const std::string &where);
RVector real_vector_from_json(const Json &j, const std::string &where);

Json instance_to_json(const HamiltonianSpec &spec);

/// Parses and validates; malformed input raises kValidation naming the field.
HamiltonianSpec instance_from_json(const Json &j);

std::string dump_instance(const HamiltonianSpec &spec);
HamiltonianSpec parse_instance(const std::string &text);
HamiltonianSpec read_instance_file(const std::string &path);

/// {"blocks": [{"lambda": [re,im], "size": k}, ...], "D": matrix}
JordanSpec jordan_from_json(const Json &j);
Json jordan_to_json(const JordanSpec &spec);

/// printf %.17g
std::string format_double(double x);

}  // namespace sqz

#endif
