/*
   Copyright 2026 The doubleplane authors

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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "doubleplane/doubleplane.hpp"

namespace {

using namespace doubleplane;

// exit codes: 0 all verdicts pass, 1 verification failure, 2 input error
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct CommonFlags {
    std::optional<std::uint32_t> prime_override;
    std::string report_path;
    bool oracle = false;
};

std::uint32_t effective_prime(const CommonFlags& flags, std::uint32_t file_prime) {
    return flags.prime_override ? *flags.prime_override : file_prime;
}

int finish(const Report& report, const CommonFlags& flags) {
    std::cout << format_report_human(report);
    if (!flags.report_path.empty())
        write_file(flags.report_path, emit_report(report));
    return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& path, const CommonFlags& flags,
               const PipelineOptions& opt) {
    InstanceFile file = parse_instance(read_file(path));
    file.prime = effective_prime(flags, file.prime);
    BMatrix b = file.to_bmatrix();
    Report report = run_pipeline(b, file.seed, opt);
    return finish(report, flags);
}

int cmd_random(int s, const std::string& profile_text, std::uint64_t seed,
               const CommonFlags& flags, const std::string& out_path) {
    const std::uint32_t prime =
        flags.prime_override ? *flags.prime_override : kDefaultPrime;
    DegreeProfile profile = parse_degree_profile(profile_text);
    RandomInstance inst = random_instance(s, profile, seed, prime);
    InstanceFile file = instance_from_bmatrix(inst.b, seed);
    std::string text = emit_instance(file);
    if (!out_path.empty()) {
        write_file(out_path, text);
        std::cout << "instance written to " << out_path << "\n";
    } else {
        std::cout << text;
    }
    PipelineOptions opt;
    opt.with_oracle = flags.oracle;
    Report report = run_pipeline(inst.b, seed, opt);
    return finish(report, flags);
}

int cmd_from_module(const std::string& path, const CommonFlags& flags,
                    const std::string& out_path) {
    ModuleFile file = parse_module_file(read_file(path));
    file.prime = effective_prime(flags, file.prime);
    PolyMatrix m = file.to_matrix();
    std::uint64_t seed = file.seed.value_or(1);
    ModuleConstruction mc = construct_curve_from_module(m, seed);
    InstanceFile inst = instance_from_bmatrix(mc.b, seed);
    std::string text = emit_instance(inst);
    if (!out_path.empty()) {
        write_file(out_path, text);
        std::cout << "instance written to " << out_path << "\n";
    } else {
        std::cout << text;
    }
    PipelineOptions opt;
    opt.with_oracle = flags.oracle;
    Report report = run_pipeline(mc.b, seed, opt);

    // round trip: the construction must reproduce the minors ideal of M
    CurveIdeal c = build_curve_ideal(mc.b);
    if (is_curve(c)) {
        RaoPresentation rp = rao_presentation(c);
        bool same = rp.minors_of_m() == minors_ideal_of(m, m.rows());
        std::cout << "round trip minors ideal: " << (same ? "reproduced" : "CHANGED")
                  << "\n";
        if (!same) return kExitFail;
    }
    return finish(report, flags);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal-form toolkit for space curves in a double plane"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::uint32_t prime_flag = 0;
    app.add_option("--prime", prime_flag, "field characteristic (prime, default 32003)");
    app.add_option("--report", flags.report_path, "write the machine-readable report here");
    app.add_flag("--oracle", flags.oracle, "run brute-force Hilbert cross-checks");

    std::string verify_path, resolve_path, rao_path, module_path;
    auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
    verify->add_option("file", verify_path, "instance file")->required();

    auto* resolve = app.add_subcommand("resolve", "resolution and exactness certificate only");
    resolve->add_option("file", resolve_path, "instance file")->required();

    auto* rao = app.add_subcommand("rao", "Rao module function only");
    rao->add_option("file", rao_path, "instance file")->required();

    int rand_s = 1;
    std::string rand_profile = "1";
    std::uint64_t rand_seed = 1;
    std::string rand_out;
    auto* random_cmd = app.add_subcommand("random", "generate and verify a random instance");
    random_cmd->add_option("--s", rand_s, "size parameter s >= 1")->required();
    random_cmd->add_option("--deg", rand_profile,
                           "degree profile a[:p[:h[:f]]] (default 1)");
    random_cmd->add_option("--seed", rand_seed, "random seed")->required();
    random_cmd->add_option("--out", rand_out, "write the generated instance here");

    std::string module_out;
    auto* from_module = app.add_subcommand("from-module",
                                           "build a curve from a module presentation");
    from_module->add_option("file", module_path, "module file with M")->required();
    from_module->add_option("--out", module_out, "write the constructed instance here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInput : kExitPass;
    }

    if (prime_flag) flags.prime_override = prime_flag;

    try {
        if (flags.prime_override) check_prime(*flags.prime_override);
        if (verify->parsed()) {
            PipelineOptions opt;
            opt.with_oracle = flags.oracle;
            return cmd_verify(verify_path, flags, opt);
        }
        if (resolve->parsed()) {
            PipelineOptions opt;
            opt.with_oracle = flags.oracle;
            opt.skip_rao = true;
            return cmd_verify(resolve_path, flags, opt);
        }
        if (rao->parsed()) {
            PipelineOptions opt;
            opt.skip_resolution = true;
            return cmd_verify(rao_path, flags, opt);
        }
        if (random_cmd->parsed())
            return cmd_random(rand_s, rand_profile, rand_seed, flags, rand_out);
        if (from_module->parsed())
            return cmd_from_module(module_path, flags, module_out);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
