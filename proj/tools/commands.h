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

#ifndef SQZ_TOOLS_COMMANDS_H
#define SQZ_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sqz::cli {

struct Options {
    std::string instance;
    std::string states;
    std::string out;
    std::string format = "json";
    std::string method = "loewdin";
    double t = 1.0;
    double t_end = 1.0;
    double dt0 = 0.0;
    double scale = 1.0;
    std::uint64_t seed = 1;
    int count = 20;
    int n = 3;
    int cutoff = 40;
};

int cmd_random(const Options &opt, std::ostream &out);
int cmd_normal_form(const Options &opt, std::ostream &out);
int cmd_trace(const Options &opt, std::ostream &out);
int cmd_gram(const Options &opt, std::ostream &out);
int cmd_validate(const Options &opt, std::ostream &out);
int cmd_solvable(const Options &opt, std::ostream &out);
int cmd_jordan(const Options &opt, std::ostream &out);

}  // namespace sqz::cli

#endif
