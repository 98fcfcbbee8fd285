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

#include "sqz/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sqz/error.h"

namespace sqz {

namespace {

[[noreturn]] void bad(const std::string &where, const std::string &what) {
    fail(ErrorKind::kValidation, "invalid instance: " + where + " " + what);
}

double number(const Json &j, const std::string &where) {
    if (!j.is_number()) {
        bad(where, "must be a number");
    }
    return j.get<double>();
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json vector_to_json(const CVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v(i)));
    }
    return out;
}

Json real_vector_to_json(const RVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

Json matrix_to_json(const CMatrix &m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out.push_back(vector_to_json(m.row(i).transpose()));
    }
    return out;
}

Complex complex_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2) {
        bad(where, "must be a [re, im] pair");
    }
    return {number(j[0], where), number(j[1], where)};
}

CVector vector_from_json(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        bad(where, "must be an array");
    }
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

RVector real_vector_from_json(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        bad(where, "must be an array");
    }
    RVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = number(j[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

CMatrix matrix_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        bad(where, "must be a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    CMatrix m;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const CVector row = vector_from_json(j[i], where + "[" + std::to_string(i) + "]");
        if (i == 0) {
            m.resize(rows, row.size());
        } else if (row.size() != m.cols()) {
            bad(where, "has ragged rows");
        }
        m.row(i) = row.transpose();
    }
    return m;
}

Json instance_to_json(const HamiltonianSpec &spec) {
    Json out;
    out["n"] = spec.n;
    out["A"] = matrix_to_json(spec.A);
    out["B"] = matrix_to_json(spec.B);
    out["h"] = vector_to_json(spec.h);
    if (!spec.label.empty()) {
        out["label"] = spec.label;
    }
    return out;
}

HamiltonianSpec instance_from_json(const Json &j) {
    if (!j.is_object()) {
        bad("document", "must be a JSON object");
    }
    for (const char *key : {"n", "A", "B", "h"}) {
        if (!j.contains(key)) {
            bad(key, "is missing");
        }
    }
    if (!j["n"].is_number_integer()) {
        bad("n", "must be an integer");
    }
    HamiltonianSpec spec;
    spec.n = j["n"].get<int>();
    spec.A = matrix_from_json(j["A"], "A");
    spec.B = matrix_from_json(j["B"], "B");
    spec.h = vector_from_json(j["h"], "h");
    if (j.contains("label")) {
        if (!j["label"].is_string()) {
            bad("label", "must be a string");
        }
        spec.label = j["label"].get<std::string>();
    }
    spec.validate();
    return spec;
}

std::string dump_instance(const HamiltonianSpec &spec) {
    return instance_to_json(spec).dump(2) + "\n";
}

HamiltonianSpec parse_instance(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        fail(ErrorKind::kValidation, std::string("invalid instance: malformed JSON: ") + e.what());
    }
    return instance_from_json(j);
}

HamiltonianSpec read_instance_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::kValidation, "cannot open instance file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

JordanSpec jordan_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("blocks") || !j.contains("D") || !j["blocks"].is_array()) {
        fail(ErrorKind::kValidation, "invalid Jordan spec: needs \"blocks\" array and \"D\" matrix");
    }
    JordanSpec spec;
    spec.D = matrix_from_json(j["D"], "D");
    for (std::size_t k = 0; k < j["blocks"].size(); ++k) {
        const Json &b = j["blocks"][k];
        const std::string where = "blocks[" + std::to_string(k) + "]";
        if (!b.is_object() || !b.contains("lambda") || !b.contains("size") || !b["size"].is_number_integer() ||
            b["size"].get<int>() < 1) {
            fail(ErrorKind::kValidation, "invalid Jordan spec: " + where + " needs lambda and a positive size");
        }
        spec.blocks.push_back({complex_from_json(b["lambda"], where + ".lambda"), b["size"].get<int>()});
    }
    return spec;
}

Json jordan_to_json(const JordanSpec &spec) {
    Json out;
    Json blocks = Json::array();
    for (const auto &b : spec.blocks) {
        Json e;
        e["lambda"] = complex_to_json(b.lambda);
        e["size"] = b.size;
        blocks.push_back(e);
    }
    out["blocks"] = blocks;
    out["D"] = matrix_to_json(spec.D);
    out["residual"] = spec.residual;
    out["condition"] = spec.condition;
    return out;
}

}  // namespace sqz
