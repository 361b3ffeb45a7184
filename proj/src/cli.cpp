// Copyright 2026 The cssqec Authors
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

#include "cssqec/cli.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cssqec/bounds.hpp"
#include "cssqec/channels.hpp"
#include "cssqec/classical_codes.hpp"
#include "cssqec/css_code.hpp"
#include "cssqec/io.hpp"

namespace cssqec::cli {

namespace {

/// Thrown for outcomes that end a run with the domain exit code after the
/// summary has been printed.
class DomainFailure : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string seed_line(const RunConfig& cfg) {
    return "# command=" + cfg.command + " seed=" + std::to_string(cfg.seed) + "\n";
}

bool is_descriptor(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line == "---" || line == "---\r") {
            return true;
        }
    }
    return false;
}

std::string describe(const LinearCode& code) {
    const auto d = code.min_distance();
    return "n=" + std::to_string(code.n()) + " k=" + std::to_string(code.k()) +
           " d=" + (d ? std::to_string(*d) : std::string("unknown"));
}

int cmd_code_info(const RunConfig& cfg, std::ostream& out) {
    std::string report;
    std::string summary;
    auto classical = [&](const std::string& label, const LinearCode& code) {
        report += "# " + label + " " + describe(code) + "\n# generator\n" + format_matrix(code.generator()) +
                  "# parity check\n" + format_matrix(code.parity_check());
        summary += (summary.empty() ? "" : "; ") + label + ": " + describe(code);
    };
    if (cfg.code == "hamming") {
        classical("code", hamming_7_4());
    } else if (cfg.code == "steane") {
        const CssCode css = CssCode::steane();
        classical("C1", css.tower().c1);
        classical("C2", css.tower().c2);
    } else {
        const std::string text = io::read_file(cfg.code);
        if (is_descriptor(text)) {
            const CssCode css = io::parse_descriptor(text);
            classical("C1", css.tower().c1);
            classical("C2", css.tower().c2);
        } else {
            classical("code", LinearCode(parse_matrix(text)));
        }
    }
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, report);
    }
    out << "code-info: " << summary << "\n";
    return kExitOk;
}

int cmd_css_build(const RunConfig& cfg, std::ostream& out) {
    const CssCode code = io::load_code(cfg.code);
    if (!cfg.out.empty()) {
        // Coset representatives go in comment lines so the file still loads as a descriptor.
        std::string report = io::format_descriptor(code) + "# coset representatives\n";
        for (const auto& w : code.tower().coset_reps) {
            report += "# " + w.str() + "\n";
        }
        io::write_file_atomic(cfg.out, report);
    }
    out << "css-build: n=" << code.n() << ", k=" << code.k_logical() << ", t=" << code.t() << ", rate "
        << code.k_logical() << "/" << code.n() << "\n";
    return kExitOk;
}

int cmd_encode_dump(const RunConfig& cfg, std::ostream& out) {
    const CssCode code = io::load_code(cfg.code);
    const std::size_t count = code.tower().coset_reps.size();
    if (cfg.logical >= count) {
        throw std::invalid_argument("--logical must be below " + std::to_string(count));
    }
    const BitWord& w = code.coset_rep(cfg.logical);
    qsim::StateVector state = qsim::StateVector::basis_state(qsim::data_only(1), 0);
    if (cfg.basis == "c") {
        state = codeword_c(code, w);
    } else if (cfg.basis == "s") {
        state = codeword_s(code, w);
    } else {
        throw std::invalid_argument("--basis must be 'c' or 's'");
    }
    const std::string csv = qsim::dump_csv(state);
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, csv);
        std::size_t nonzero = 0;
        for (auto a : state.amplitudes()) {
            nonzero += std::abs(a) > 1e-12;
        }
        out << "encode-dump: |" << cfg.basis << "_" << cfg.logical << "> w=" << w.str() << " nonzero=" << nonzero
            << " -> " << cfg.out << "\n";
    } else {
        out << csv;
    }
    return kExitOk;
}

RecoveryMode parse_mode(const std::string& mode) {
    if (mode == "coherent") {
        return RecoveryMode::Coherent;
    }
    if (mode == "measured") {
        return RecoveryMode::Measured;
    }
    throw std::invalid_argument("--mode must be 'coherent' or 'measured'");
}

int cmd_recover_demo(const RunConfig& cfg, std::ostream& out) {
    const CssCode code = io::load_code(cfg.code);
    const RecoveryMode mode = parse_mode(cfg.mode);
    const std::string error_text = cfg.error.empty() ? std::string(code.n(), 'I') : cfg.error;
    const auto pattern = channels::parse_pattern(error_text);
    if (pattern.size() != code.n()) {
        throw std::invalid_argument("--error must have length " + std::to_string(code.n()));
    }
    const auto inputs = channels::default_inputs(code.k_logical(), cfg.inputs, cfg.seed);
    const auto layout = code.layout(0);
    const auto data = layout.qubits(qsim::Register::Data);

    std::string csv = seed_line(cfg) + "input,status,bitflip,phase,fidelity,purity\n";
    double min_fid = 1.0;
    bool uncorrectable = false;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        qsim::StateVector state = encode(code, inputs[i]).embed(layout);
        channels::apply_pattern(state, data, pattern);
        Rng rng = substream(cfg.seed, i);
        const RecoveryResult result = recover(code, state, mode, &rng);
        if (result.status == RecoveryStatus::Uncorrectable) {
            uncorrectable = true;
            csv += std::to_string(i) + ",UNCORRECTABLE,,,,\n";
            continue;
        }
        const LogicalReduction red = reduce_to_logical(code, result.state);
        const qsim::DensityMatrix rho(red.rho / red.rho.trace().real());
        const double fid = qsim::fidelity(rho, inputs[i]);
        min_fid = std::min(min_fid, fid);
        csv += std::to_string(i) + ",CORRECTED," + result.record.bitflip_error.str() + "," +
               result.record.phase_error.str() + "," + fmt17(fid) + "," + fmt17(rho.purity()) + "\n";
    }
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, csv);
    }
    if (uncorrectable) {
        out << "recover-demo: error=" << error_text << " UNCORRECTABLE seed=" << cfg.seed << "\n";
        throw DomainFailure("UNCORRECTABLE syndrome for error " + error_text);
    }
    const bool ok = min_fid >= 1.0 - 1e-9;
    out << "recover-demo: error=" << error_text << " mode=" << cfg.mode << " inputs=" << inputs.size()
        << " min_fidelity=" << fmt17(min_fid) << (ok ? " CORRECTED" : " LOGICAL_ERROR") << " seed=" << cfg.seed
        << "\n";
    if (!ok) {
        throw DomainFailure("recovery left a logical error for " + error_text);
    }
    return kExitOk;
}

std::string report_csv(const RunConfig& cfg, const channels::FidelityReport& report, const std::string& extra) {
    std::string csv = seed_line(cfg) + "# p=" + fmt17(cfg.p) + extra + "\n";
    csv += "input,fidelity,std_error\n";
    for (std::size_t i = 0; i < report.per_input.size(); ++i) {
        csv += std::to_string(i) + "," + fmt17(report.per_input[i].mean) + "," +
               fmt17(report.per_input[i].std_error) + "\n";
    }
    csv += "average," + fmt17(report.average_fidelity) + "," + fmt17(report.average_std_error) + "\n";
    csv += "min," + fmt17(report.min_fidelity) + "," + fmt17(report.per_input[report.argmin].std_error) + "\n";
    return csv;
}

int cmd_mc_fidelity(const RunConfig& cfg, std::ostream& out) {
    const CssCode code = io::load_code(cfg.code);
    const channels::PauliChannelSpec spec(cfg.p);
    if (cfg.trials == 0) {
        throw std::invalid_argument("--trials must be at least 1");
    }
    const auto inputs = channels::default_inputs(code.k_logical(), cfg.inputs, cfg.seed);
    std::string log = cfg.log.empty() ? std::string() : seed_line(cfg) + "trial,pattern,corrected,fidelity\n";
    channels::TrialLogger logger;
    if (!cfg.log.empty()) {
        logger = [&log](const channels::TrialLogRow& row) {
            log += std::to_string(row.trial) + "," + row.pattern + "," + (row.corrected ? "1" : "0") + "," +
                   fmt17(row.fidelity) + "\n";
        };
    }
    const auto report = channels::logical_fidelity_mc(code, spec, inputs, cfg.trials, cfg.seed, logger);
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, report_csv(cfg, report, " trials=" + std::to_string(cfg.trials)));
    }
    if (!cfg.log.empty()) {
        io::write_file_atomic(cfg.log, log);
    }
    out << "mc-fidelity: p=" << fmt17(cfg.p) << " trials=" << cfg.trials << " min_fidelity=" << fmt17(report.min_fidelity)
        << " (input " << report.argmin << ") average=" << fmt17(report.average_fidelity) << " +- "
        << fmt17(report.average_std_error) << " seed=" << cfg.seed << "\n";
    return kExitOk;
}

int cmd_exhaustive_fidelity(const RunConfig& cfg, std::ostream& out) {
    const CssCode code = io::load_code(cfg.code);
    const channels::PauliChannelSpec spec(cfg.p);
    const auto inputs = channels::default_inputs(code.k_logical(), cfg.inputs, cfg.seed);
    const auto report = channels::logical_fidelity_exhaustive(code, spec, inputs);
    const double bound = channels::binomial_fidelity_bound(code.n(), code.t(), 1.0 - cfg.p);
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, report_csv(cfg, report, " binomial_bound=" + fmt17(bound)));
    }
    out << "exhaustive-fidelity: p=" << fmt17(cfg.p) << " min_fidelity=" << fmt17(report.min_fidelity) << " (input "
        << report.argmin << ") average=" << fmt17(report.average_fidelity) << " binomial_bound=" << fmt17(bound)
        << " seed=" << cfg.seed << "\n";
    return kExitOk;
}

int cmd_selfdual_enum(const RunConfig& cfg, std::ostream& out) {
    const auto codes = enumerate_weakly_self_dual(cfg.n, cfg.k);
    const std::string list = format_code_list(codes);
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, list);
        out << "selfdual-enum: n=" << cfg.n << " k=" << cfg.k << " codes=" << codes.size() << "\n";
    } else {
        out << list;
    }
    return kExitOk;
}

int cmd_sigma_check(const RunConfig& cfg, std::ostream& out) {
    if (cfg.s < 1 || cfg.s > cfg.k) {
        throw std::invalid_argument("--s must satisfy 1 <= s <= k");
    }
    const auto seeds = enumerate_weakly_self_dual(cfg.n, cfg.s);
    std::vector<std::uint64_t> counts(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        counts[i] = sigma_count(cfg.n, cfg.k, seeds[i]);
    }
    std::string csv = "seed_code,sigma\n";
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        std::string gen;
        for (const auto& row : seeds[i].generator().row_words()) {
            gen += (gen.empty() ? "" : " ") + row.str();
        }
        csv += gen + "," + std::to_string(counts[i]) + "\n";
    }
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, csv);
    }
    const bool invariant = std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == counts.front(); });
    out << "sigma-check: n=" << cfg.n << " k=" << cfg.k << " s=" << cfg.s << " seed_codes=" << seeds.size()
        << " sigma=" << (counts.empty() ? 0 : counts.front()) << (invariant ? " invariant" : " NOT_INVARIANT") << "\n";
    if (!invariant) {
        throw DomainFailure("sigma_count differs between seed codes");
    }
    return kExitOk;
}

int cmd_gv_search(const RunConfig& cfg, std::ostream& out) {
    const GreedyCheck check = greedy_existence_check(cfg.n, cfg.k, cfg.d);
    if (!cfg.out.empty()) {
        std::string report = "# n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) +
                             " d=" + std::to_string(cfg.d) + " lhs=" + std::to_string(check.lhs) +
                             " rhs=" + std::to_string(check.rhs) + "\n";
        if (check.witness) {
            report += format_matrix(check.witness->generator());
        }
        io::write_file_atomic(cfg.out, report);
    }
    out << "gv-search: n=" << cfg.n << " k=" << cfg.k << " d=" << cfg.d << " lhs=" << check.lhs << " rhs=" << check.rhs
        << " inequality=" << (check.inequality_holds ? "holds" : "fails") << " witness="
        << (check.witness ? "found d(C^perp)=" + std::to_string(*check.witness_dual_distance) : std::string("none"))
        << "\n";
    return kExitOk;
}

int cmd_bounds_table(const RunConfig& cfg, std::ostream& out) {
    const auto table = bounds::figure1_table(cfg.step);
    const std::string csv = bounds::figure1_csv(table);
    if (!cfg.out.empty()) {
        io::write_file_atomic(cfg.out, csv);
        out << "bounds-table: step=" << fmt9(cfg.step) << " rows=" << table.size() << " -> " << cfg.out << "\n";
    } else {
        out << csv;
    }
    return kExitOk;
}

}  // namespace

int parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CLI::App app{"CSS quantum code construction, simulation and bounds", "cssqec"};
    app.require_subcommand(1);

    auto code_opt = [&](CLI::App* sub) {
        sub->add_option("--code", cfg.code, "Built-in name (steane, hamming) or descriptor path")
            ->capture_default_str();
    };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Output file (written atomically)"); };
    auto seed_opt = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
    };
    auto inputs_opt = [&](CLI::App* sub) {
        sub->add_option("--inputs", cfg.inputs, "Random logical inputs added to the axis states")
            ->capture_default_str();
    };

    auto* info = app.add_subcommand("code-info", "Classical parameters of a code or descriptor");
    code_opt(info);
    out_opt(info);

    auto* build = app.add_subcommand("css-build", "Build the CSS code of a descriptor");
    code_opt(build);
    out_opt(build);

    auto* dump = app.add_subcommand("encode-dump", "Dump a codeword statevector as CSV");
    code_opt(dump);
    out_opt(dump);
    dump->add_option("--logical", cfg.logical, "Logical basis index")->capture_default_str();
    dump->add_option("--basis", cfg.basis, "c for |c_w>, s for the Hadamard-rotated |s_w>")->capture_default_str();

    auto* demo = app.add_subcommand("recover-demo", "Apply one Pauli pattern and recover");
    code_opt(demo);
    out_opt(demo);
    seed_opt(demo);
    inputs_opt(demo);
    demo->add_option("--error", cfg.error, "Pauli pattern over I, X, Z, Y (Y = XZ); default no error");
    demo->add_option("--mode", cfg.mode, "coherent or measured")->capture_default_str();

    auto* mc = app.add_subcommand("mc-fidelity", "Monte Carlo logical fidelity under depolarizing noise");
    code_opt(mc);
    out_opt(mc);
    seed_opt(mc);
    inputs_opt(mc);
    mc->add_option("--p", cfg.p, "Depolarizing probability per qubit")->capture_default_str();
    mc->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str();
    mc->add_option("--log", cfg.log, "Per-trial CSV log");
    mc->add_option("--mode", cfg.mode, "Recovery mode (coherent only)")->capture_default_str();

    auto* ex = app.add_subcommand("exhaustive-fidelity", "Exact logical fidelity over all Pauli patterns");
    code_opt(ex);
    out_opt(ex);
    seed_opt(ex);
    inputs_opt(ex);
    ex->add_option("--p", cfg.p, "Depolarizing probability per qubit")->capture_default_str();

    auto* sd = app.add_subcommand("selfdual-enum", "Enumerate weakly self-dual codes");
    sd->add_option("--n", cfg.n, "Length")->required();
    sd->add_option("--k", cfg.k, "Dimension")->required();
    out_opt(sd);

    auto* sigma = app.add_subcommand("sigma-check", "Check that sigma(n,k,s) does not depend on the seed code");
    sigma->add_option("--n", cfg.n, "Length")->required();
    sigma->add_option("--k", cfg.k, "Dimension of the counted codes")->required();
    sigma->add_option("--s", cfg.s, "Dimension of the seed codes")->capture_default_str();
    out_opt(sigma);

    auto* gv = app.add_subcommand("gv-search", "Greedy counting check with a witness search");
    gv->add_option("--n", cfg.n, "Length")->required();
    gv->add_option("--k", cfg.k, "Dimension")->required();
    gv->add_option("--d", cfg.d, "Target dual distance")->required();
    out_opt(gv);

    auto* bt = app.add_subcommand("bounds-table", "Rate and capacity bound curves as CSV");
    bt->add_option("--step", cfg.step, "Grid step in (0, 0.01]")->capture_default_str();
    out_opt(bt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return -1;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> commands{
        {"code-info", cmd_code_info},
        {"css-build", cmd_css_build},
        {"encode-dump", cmd_encode_dump},
        {"recover-demo", cmd_recover_demo},
        {"mc-fidelity", cmd_mc_fidelity},
        {"exhaustive-fidelity", cmd_exhaustive_fidelity},
        {"selfdual-enum", cmd_selfdual_enum},
        {"sigma-check", cmd_sigma_check},
        {"gv-search", cmd_gv_search},
        {"bounds-table", cmd_bounds_table},
    };
    const auto it = commands.find(cfg.command);
    if (it == commands.end()) {
        err << "error: unknown command '" << cfg.command << "'\n";
        return kExitUsage;
    }
    try {
        return it->second(cfg, out);
    } catch (const DomainFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const io::FileError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: parameter out of range: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::length_error& e) {
        err << "error: enumeration limit: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    const int parsed = parse_args(argc, argv, cfg, out, err);
    if (parsed >= 0) {
        return parsed;
    }
    return run(cfg, out, err);
}

}  // namespace cssqec::cli
