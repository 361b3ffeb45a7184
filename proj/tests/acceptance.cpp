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

// Acceptance checks. Each criterion prints one PASS or FAIL line with the
// measured quantity next to its pinned tolerance. The exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cssqec/bounds.hpp"
#include "cssqec/channels.hpp"
#include "cssqec/classical_codes.hpp"
#include "cssqec/cli.hpp"
#include "cssqec/css_code.hpp"
#include "cssqec/io.hpp"
#include "cssqec/qsim.hpp"

using namespace cssqec;
using qsim::Complex;
using qsim::Register;
using qsim::StateVector;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

// The seven-bit words displayed for the Hamming code.
const std::vector<std::string> kHammingWords{
    "0000000", "0001011", "0010110", "0011101", "0100111", "0101100", "0110001", "0111010",
    "1000101", "1001110", "1010011", "1011000", "1100010", "1101001", "1110100", "1111111"};

std::set<std::string> word_set(const std::vector<BitWord>& words) {
    std::set<std::string> out;
    for (const auto& w : words) {
        out.insert(w.str());
    }
    return out;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

const CssCode& steane() {
    static const CssCode code = CssCode::steane();
    return code;
}

Verdict hamming_reproduction() {
    const LinearCode h = hamming_7_4();
    const std::set<std::string> expected(kHammingWords.begin(), kHammingWords.end());
    const bool words = word_set(h.codewords()) == expected;
    const auto d = min_distance(h);
    std::set<std::string> even;
    for (const auto& s : kHammingWords) {
        if (std::count(s.begin(), s.end(), '1') % 2 == 0) {
            even.insert(s);
        }
    }
    const LinearCode dual = h.dual_code();
    const bool dual_ok = dual.k() == 3 && word_set(dual.codewords()) == even;
    return {words && d == 3u && dual_ok, "16 words " + std::string(words ? "match" : "differ") +
                                             ", d=" + (d ? std::to_string(*d) : "none") + ", dual dim " +
                                             std::to_string(dual.k()) + (dual_ok ? " even-weight" : " mismatch")};
}

// Largest amplitude deviation after removing a global phase.
double golden_deviation(const StateVector& state, const std::string& file) {
    std::vector<Complex> golden(state.dim(), 0.0);
    std::istringstream in(io::read_file(file));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        golden.at(std::stoul(line.substr(0, a))) =
            Complex(std::stod(line.substr(a + 1, b - a - 1)), std::stod(line.substr(b + 1)));
    }
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        overlap += std::conj(golden[i]) * state.amplitude(i);
    }
    const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        worst = std::max(worst, std::abs(state.amplitude(i) - phase * golden[i]));
    }
    return worst;
}

Verdict codeword_golden() {
    const std::string dir = CSSQEC_GOLDEN_DIR;
    const BitWord w0 = steane().coset_rep(0);
    const BitWord w1 = steane().coset_rep(1);
    const std::vector<std::pair<StateVector, std::string>> cases{
        {codeword_c(steane(), w0), "steane_c0"},
        {codeword_c(steane(), w1), "steane_c1"},
        {codeword_s(steane(), w0), "steane_s0"},
        {codeword_s(steane(), w1), "steane_s1"}};
    double worst = 0.0;
    bool bytes = true;
    for (const auto& [state, name] : cases) {
        const std::string path = dir + "/" + name + ".csv";
        worst = std::max(worst, golden_deviation(state, path));
        bytes = bytes && qsim::dump_csv(state) == io::read_file(path);
    }
    return {worst < 1e-12, "max deviation " + fmt(worst) + " < 1e-12, dump " + (bytes ? "byte-identical" : "differs")};
}

Verdict basis_change() {
    const std::vector<unsigned> data{0, 1, 2, 3, 4, 5, 6};
    double worst = 0.0;
    for (const auto& w : steane().tower().coset_reps) {
        auto c = codeword_c(steane(), w);
        c.transversal_hadamard(data);
        const auto s = codeword_s(steane(), w);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            worst = std::max(worst, std::abs(c.amplitude(i) - s.amplitude(i)));
        }
    }
    return {worst < 1e-12, "max deviation " + fmt(worst) + " < 1e-12"};
}

Verdict overlap_equivalence() {
    const CssCode& c = steane();
    double worst = 0.0;
    std::size_t cases = 0;
    for (std::uint64_t sup = 0; sup < 128; ++sup) {
        const BitWord support(7, sup);
        if (support.weight() > 2) {
            continue;
        }
        for (std::uint64_t sub = sup;; sub = (sub - 1) & sup) {
            const BitWord e(7, sub);
            for (const auto& w1 : c.tower().coset_reps) {
                for (const auto& w2 : c.tower().coset_reps) {
                    const Complex direct = projected_overlap(c, w1, support, e, w2);
                    worst = std::max(worst, std::abs(direct - projected_overlap_closed_form(c, w1, support, e, w2)));
                    ++cases;
                }
            }
            if (sub == 0) {
                break;
            }
        }
    }
    return {worst < 1e-10, std::to_string(cases) + " cases, max deviation " + fmt(worst) + " < 1e-10"};
}

Verdict single_pauli_recovery() {
    const auto inputs = channels::default_inputs(1, 20, 2024);
    const auto layout = steane().layout(0);
    const auto data = layout.qubits(Register::Data);
    double worst_fid = 1.0;
    double worst_purity = 1.0;
    std::size_t runs = 0;
    bool all_corrected = true;
    for (unsigned q = 0; q < 7; ++q) {
        for (const char p : {'X', 'Z', 'Y'}) {
            std::string text(7, 'I');
            text[q] = p;
            const auto pattern = channels::parse_pattern(text);
            for (const auto& psi : inputs) {
                const auto encoded = encode(steane(), psi);
                StateVector state = encoded.embed(layout);
                channels::apply_pattern(state, data, pattern);
                const auto result = recover(steane(), state);
                all_corrected = all_corrected && result.status == RecoveryStatus::Corrected;
                const auto rho = qsim::partial_trace(result.state, {Register::Data});
                worst_fid = std::min(worst_fid, qsim::fidelity(rho, encoded));
                worst_purity = std::min(worst_purity, rho.purity());
                ++runs;
            }
        }
    }
    const bool pass = all_corrected && runs == 21 * 26 && worst_fid >= 1 - 1e-9 && worst_purity >= 1 - 1e-9;
    return {pass, std::to_string(runs) + " runs, min fidelity 1-" + fmt(1 - worst_fid) + ", min purity 1-" +
                      fmt(1 - worst_purity) + " (need >= 1-1e-9)"};
}

Verdict general_decoherence() {
    const auto layout = steane().layout(2);
    Rng rng(substream(2024, 6));
    double worst_fid = 1.0;
    double worst_distance = 0.0;
    bool all_corrected = true;
    const auto zero = StateVector::basis_state(qsim::data_only(1), 0);
    const auto one = StateVector::basis_state(qsim::data_only(1), 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dec = channels::random_decoherence(BitWord::unit(7, trial % 7), 2, rng);
        const auto psi = qsim::random_state(1, rng);
        // Index 0 checks fidelity on a random input; 1 and 2 are |0> and |1>
        // for the junk comparison.
        const std::array<const StateVector*, 3> run_inputs{&psi, &zero, &one};
        std::vector<qsim::DensityMatrix> junk;
        for (std::size_t i = 0; i < run_inputs.size(); ++i) {
            const auto encoded = encode(steane(), *run_inputs[i]);
            StateVector state = encoded.embed(layout);
            channels::apply_general(state, dec);
            const auto result = recover(steane(), state);
            all_corrected = all_corrected && result.status == RecoveryStatus::Corrected;
            worst_fid = std::min(worst_fid, qsim::fidelity(qsim::partial_trace(result.state, {Register::Data}), encoded));
            if (i > 0) {
                junk.push_back(qsim::partial_trace(result.state, {Register::AncillaA, Register::AncillaA2, Register::Env}));
            }
        }
        worst_distance = std::max(worst_distance, qsim::trace_distance(junk[0], junk[1]));
    }
    const bool pass = all_corrected && worst_fid >= 1 - 1e-8 && worst_distance < 1e-6;
    return {pass, "100 unitaries, min fidelity 1-" + fmt(1 - worst_fid) + " (need >= 1-1e-8), ancilla+env trace distance " +
                      fmt(worst_distance) + " < 1e-6"};
}

Verdict depolarizing() {
    const double p = 0.01;
    const auto inputs = channels::default_inputs(1, 20, 2024);
    const channels::PauliChannelSpec spec(p);
    const auto exact = channels::logical_fidelity_exhaustive(steane(), spec, inputs);
    const auto sampled = channels::logical_fidelity_mc(steane(), spec, inputs, 10000, 2024);
    const double bound = channels::binomial_fidelity_bound(7, 1, 1 - p);
    const std::size_t worst = exact.argmin;
    const double avg_dev = std::abs(sampled.average_fidelity - exact.average_fidelity);
    const double min_dev = std::abs(sampled.per_input[worst].mean - exact.per_input[worst].mean);
    const bool pass = exact.min_fidelity >= bound && avg_dev <= 3 * sampled.average_std_error &&
                      min_dev <= 3 * sampled.per_input[worst].std_error;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "exhaustive min %.9f >= bound %.9f, MC average off by %.2f SE, MC on worst input off by %.2f SE (need "
                  "<= 3)",
                  exact.min_fidelity, bound, avg_dev / sampled.average_std_error,
                  min_dev / sampled.per_input[worst].std_error);
    return {pass, buf};
}

Verdict channel_forms() {
    Rng rng(substream(2024, 8));
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = qsim::DensityMatrix::projector(qsim::random_state(1, rng));
        const auto b = qsim::DensityMatrix::projector(qsim::random_state(1, rng));
        const double w = uniform01(rng);
        const qsim::DensityMatrix rho(w * a.matrix() + (1 - w) * b.matrix());
        for (double p : {0.0, 0.05, 0.1, 0.25, 0.5, 0.75, 1.0}) {
            const Eigen::MatrixXcd closed =
                (1 - 4 * p / 3) * rho.matrix() + (4 * p / 3) * 0.5 * Eigen::MatrixXcd::Identity(2, 2);
            worst = std::max(worst, (channels::depolarize_density_mixture(rho, p).matrix() - closed).cwiseAbs().maxCoeff());
            worst = std::max(worst, (channels::depolarize_density(rho, p).matrix() - closed).cwiseAbs().maxCoeff());
        }
    }
    return {worst < 1e-12, "700 cases, max deviation " + fmt(worst) + " < 1e-12"};
}

// Every 2-dimensional self-orthogonal subspace of F_2^4 containing 1111.
std::set<std::set<std::string>> brute_weakly_self_dual_4_2() {
    std::set<std::set<std::string>> out;
    auto even = [](unsigned v) { return std::popcount(v) % 2 == 0; };
    for (unsigned a = 1; a < 16; ++a) {
        for (unsigned b = a + 1; b < 16; ++b) {
            const unsigned c = a ^ b;
            if (c == 0 || !(a == 15 || b == 15 || c == 15)) {
                continue;
            }
            if (!even(a) || !even(b) || !even(a & b)) {
                continue;
            }
            std::set<std::string> words;
            for (unsigned v : {0u, a, b, c}) {
                words.insert(BitWord(4, v).str());
            }
            out.insert(words);
        }
    }
    return out;
}

Verdict selfdual_counting() {
    const std::vector<std::array<unsigned, 3>> params{{4, 2, 1}, {4, 2, 2}, {6, 2, 1}, {6, 3, 2}, {8, 3, 2}};
    bool invariant = true;
    std::string detail = "sigma";
    for (const auto& [n, k, s] : params) {
        std::set<std::uint64_t> counts;
        const auto seeds = enumerate_weakly_self_dual(n, s);
        for (const auto& seed : seeds) {
            counts.insert(sigma_count(n, k, seed));
        }
        invariant = invariant && counts.size() == 1;
        detail += " (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(s) + ")=" +
                  (counts.size() == 1 ? std::to_string(*counts.begin()) : "VARIES") + "/" +
                  std::to_string(seeds.size()) + " seeds";
    }
    std::set<std::set<std::string>> found;
    for (const auto& code : enumerate_weakly_self_dual(4, 2)) {
        found.insert(word_set(code.codewords()));
    }
    const auto oracle = brute_weakly_self_dual_4_2();
    const bool listed = found == oracle && found.size() == 3 &&
                        format_code_list(enumerate_weakly_self_dual(4, 2)) == "1100\n0011\n\n1010\n0101\n\n1001\n0110\n";
    return {invariant && listed, detail + "; (4,2) codes " + std::to_string(found.size()) +
                                     (listed ? " match the subspace search" : " MISMATCH")};
}

Verdict bound_curves() {
    using namespace bounds;
    const auto table = figure1_table(0.001);
    const auto& first = table.front();
    const bool endpoints = first.x == 0.0 && std::abs(first.gv - 1) < 1e-15 && std::abs(first.holevo - 1) < 1e-15 &&
                           std::abs(first.entangle - 1) < 1e-15;
    const double root = bisect([](double x) { return 1.0 - 2.0 * h2(2.0 * x); }, 0.0, 0.25);
    bool crossing = std::abs(root - 0.055014) <= 1e-6;
    bool ordered = true;
    double composite = 0.0;
    for (const auto& pt : table) {
        crossing = crossing && ((pt.gv > 0) == (pt.x < root));
        ordered = ordered && pt.gv <= std::min(pt.holevo, pt.entangle);
        composite = std::max(composite, std::abs(composite_upper_bound(pt.x) -
                                                 std::min(holevo_capacity_bound(pt.x), entanglement_bound(pt.x))));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "x=0 row %s, gv root %.9f (|d|=%.1e <= 1e-6), gv below bounds %s, composite dev %.1e < 1e-12",
                  endpoints ? "(1,1,1)" : "WRONG", root, std::abs(root - 0.055014), ordered ? "yes" : "NO", composite);
    return {endpoints && crossing && ordered && composite < 1e-12, buf};
}

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cssqec");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    return cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

Verdict reproducibility() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cssqec_acceptance_repro";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::vector<std::vector<std::string>> commands{
        {"mc-fidelity", "--p", "0.03", "--trials", "2000", "--seed", "99", "--out", "@report", "--log", "@log"},
        {"recover-demo", "--error", "IZIIXII", "--inputs", "10", "--seed", "99", "--out", "@report"},
        {"recover-demo", "--error", "IIIIIYI", "--mode", "measured", "--inputs", "10", "--seed", "99", "--out", "@report"},
    };
    bool same = true;
    std::size_t files = 0;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        std::vector<std::string> contents[2];
        for (int rep = 0; rep < 2; ++rep) {
            auto args = commands[c];
            std::vector<std::string> paths;
            for (auto& a : args) {
                if (a[0] == '@') {
                    a = (dir / (std::to_string(c) + a.substr(1) + std::to_string(rep) + ".csv")).string();
                    paths.push_back(a);
                }
            }
            same = same && run_cli(args) == 0;
            for (const auto& p : paths) {
                contents[rep].push_back(io::read_file(p));
            }
        }
        same = same && contents[0] == contents[1];
        files += contents[0].size();
    }
    fs::remove_all(dir);
    return {same, std::to_string(files) + " files from " + std::to_string(commands.size()) + " seeded runs " +
                      (same ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Verdict()> check;
    };
    const std::vector<Criterion> criteria{
        {1, "Hamming code reproduction", 1.0, hamming_reproduction},
        {2, "Codeword golden files", 0.0, codeword_golden},
        {3, "Transversal Hadamard basis change", 0.0, basis_change},
        {4, "Projected overlap closed form", 30.0, overlap_equivalence},
        {5, "Single Pauli errors recovered", 0.0, single_pauli_recovery},
        {6, "General single-qubit decoherence recovered", 0.0, general_decoherence},
        {7, "Depolarizing channel fidelity", 120.0, depolarizing},
        {8, "Depolarizing channel forms agree", 0.0, channel_forms},
        {9, "Weakly self-dual counting", 120.0, selfdual_counting},
        {10, "Rate and capacity bound curves", 0.0, bound_curves},
        {11, "Seeded reproducibility", 0.0, reproducibility},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt(seconds) + " s";
        if (c.budget_seconds > 0) {
            timing += " of " + fmt(c.budget_seconds) + " s";
            if (seconds >= c.budget_seconds) {
                v.pass = false;
                v.detail += "; over time budget";
            }
        }
        failures += !v.pass;
        std::printf("%s criterion %d: %s: %s [%s]\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                    timing.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
