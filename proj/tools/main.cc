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

#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "sqz/error.h"

int main(int argc, char **argv) {
    using sqz::cli::Options;
    CLI::App app{"sqz: normal forms and scalar factors of multimode squeezing"};
    app.require_subcommand(1);
    Options opt;

    auto instance = [&](CLI::App *sub) { sub->add_option("--instance", opt.instance, "Instance JSON file"); };
    auto out = [&](CLI::App *sub) { sub->add_option("--out", opt.out, "Write output to FILE"); };

    auto *random = app.add_subcommand("random", "Seeded random instance");
    random->add_option("--seed", opt.seed);
    random->add_option("--n", opt.n)->check(CLI::PositiveNumber);
    random->add_option("--scale", opt.scale)->check(CLI::PositiveNumber);
    out(random);

    auto *nf = app.add_subcommand("normal-form", "Normal form and all scalar-factor routes");
    instance(nf);
    nf->add_option("--t", opt.t);
    out(nf);

    auto *trace = app.add_subcommand("trace", "Index trace along [0, t_end]");
    instance(trace);
    trace->add_option("--t-end", opt.t_end);
    trace->add_option("--dt0", opt.dt0);
    trace->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
    out(trace);

    auto *gram = app.add_subcommand("gram", "Gram matrix and orthonormalization of a state family");
    gram->add_option("--states", opt.states, "JSON file with a \"states\" array");
    gram->add_option("--method", opt.method)->check(CLI::IsMember({"loewdin", "gram_schmidt"}));
    out(gram);

    auto *validate = app.add_subcommand("validate", "Identity checks on seeded random instances");
    validate->add_option("--seed", opt.seed);
    validate->add_option("--count", opt.count)->check(CLI::NonNegativeNumber);
    validate->add_option("--n", opt.n)->check(CLI::PositiveNumber);
    validate->add_option("--t", opt.t);
    validate->add_option("--scale", opt.scale, "Norm bound for A, B and h (default 2)");
    validate->add_option("--cutoff", opt.cutoff)->check(CLI::PositiveNumber);
    out(validate);

    auto *solvable = app.add_subcommand("solvable", "Closed-form propagator of a commuting instance");
    instance(solvable);
    solvable->add_option("--seed", opt.seed);
    solvable->add_option("--n", opt.n)->check(CLI::PositiveNumber);
    solvable->add_option("--t", opt.t);
    out(solvable);

    auto *jordan = app.add_subcommand("jordan", "Jordan-block phi-functions against the series");
    instance(jordan);
    jordan->add_option("--t", opt.t);
    out(jordan);

    opt.scale = 0.0;
    CLI11_PARSE(app, argc, argv);

    const std::pair<CLI::App *, std::function<int(const Options &, std::ostream &)>> table[] = {
        {random, sqz::cli::cmd_random},       {nf, sqz::cli::cmd_normal_form},   {trace, sqz::cli::cmd_trace},
        {gram, sqz::cli::cmd_gram},           {validate, sqz::cli::cmd_validate}, {solvable, sqz::cli::cmd_solvable},
        {jordan, sqz::cli::cmd_jordan}};
    try {
        for (const auto &[sub, run] : table) {
            if (!sub->parsed()) {
                continue;
            }
            if (opt.out.empty()) {
                return run(opt, std::cout);
            }
            std::ofstream file(opt.out);
            if (!file) {
                std::cerr << "error: cannot write " << opt.out << "\n";
                return 2;
            }
            return run(opt, file);
        }
    } catch (const sqz::Error &e) {
        std::cerr << "error [" << sqz::to_string(e.kind()) << "]: " << e.what() << "\n";
        return sqz::exit_code(e.kind());
    }
    return 0;
}
