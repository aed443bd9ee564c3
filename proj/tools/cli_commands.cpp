// Copyright 2026 The causal-switch Authors
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

#include "cli_commands.hpp"

#include <CLI/CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "causal_switch/channel.hpp"
#include "causal_switch/entropic.hpp"
#include "causal_switch/filtration.hpp"
#include "causal_switch/herald.hpp"
#include "causal_switch/quantum_switch.hpp"

namespace causal_switch::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_double(const std::string& text, const std::string& what) {
    double v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) throw UsageError(what + ": not a number: '" + text + "'");
    return v;
}

double parse_probability(const std::string& text, const std::string& what) {
    const double v = parse_double(text, what);
    if (v < 0 || v > 1) throw UsageError(what + " must lie in [0, 1], got " + text);
    return v;
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
    if (flag->count() > 0) return value;
    const char* env = std::getenv("CAUSAL_SWITCH_SEED");
    if (env == nullptr || *env == '\0') return value;
    const std::string text(env);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("CAUSAL_SWITCH_SEED: not an unsigned integer: '" + text + "'");
    }
    return seed;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

// ---- sweep ----

struct SweepFlags {
    double p_min = 0.5;
    double p_max = 1.0;
    double step = 0.005;
    bool verify = false;
    std::uint64_t seed = 42;
    int starts = 16;
};

void cmd_sweep(const SweepFlags& f, std::ostream& out) {
    if (!(f.p_min >= 0 && f.p_min <= f.p_max && f.p_max <= 1)) {
        throw UsageError("sweep: need 0 <= p-min <= p-max <= 1");
    }
    if (!(f.step > 0)) throw UsageError("sweep: step must be positive");
    if (f.starts < 0) throw UsageError("sweep: starts must be non-negative");

    const auto rows = static_cast<std::size_t>(std::floor((f.p_max - f.p_min) / f.step + 1e-9)) + 1;
    OptimizerSettings settings;
    settings.random_starts = f.starts;
    settings.seed = f.seed;

    out << "p,q1_switch,q_single,advantage" << (f.verify ? ",q1_numeric" : "") << '\n';
    double crossover = std::numeric_limits<double>::quiet_NaN();
    double max_deviation = 0;
    for (std::size_t k = 0; k < rows; ++k) {
        const double p = std::min(f.p_min + static_cast<double>(k) * f.step, f.p_max);
        const double q1 = switch_flip_coherent_info_closed(p);
        const double single = dephasing_capacity(p);
        const bool advantage = q1 > single;
        if (advantage && std::isnan(crossover)) crossover = p;
        out << format_number(p) << ',' << format_number(q1) << ',' << format_number(single) << ','
            << boolean(advantage);
        if (f.verify) {
            const double numeric = maximize_coherent_information(flip_switch(p, p), settings).value;
            max_deviation = std::max(max_deviation, std::abs(numeric - q1));
            out << ',' << format_number(numeric);
        }
        out << '\n';
    }
    out << "# crossover_p=" << (std::isnan(crossover) ? std::string("none") : format_number(crossover)) << '\n';
    if (f.verify) {
        out << "# max_abs_deviation=" << format_number(max_deviation) << '\n';
        out << "# optimizer_agreement=" << boolean(max_deviation < 1e-4) << " (tolerance 1e-4, starts "
            << f.starts + 1 << ", seed " << f.seed << ")\n";
    }
}

// ---- herald ----

struct HeraldFlags {
    double p = 0.5;
    double q = 0.5;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 42;
};

void cmd_herald(const HeraldFlags& f, std::ostream& out) {
    if (f.p < 0 || f.p > 1 || f.q < 0 || f.q > 1) throw UsageError("herald: p and q must lie in [0, 1]");
    if (f.trials < 1) throw UsageError("herald: trials must be at least 1");
    const auto states = bb84_states();
    const auto stats = monte_carlo_herald(f.p, f.q, f.trials, f.seed, states);
    static const char* const kLabels[] = {"0", "1", "+", "-"};

    out << "state,trials,successes,success_frequency,mean_fidelity\n";
    for (std::size_t i = 0; i < stats.per_input.size(); ++i) {
        const auto& s = stats.per_input[i];
        const double freq = s.trials ? static_cast<double>(s.successes) / static_cast<double>(s.trials) : 0.0;
        out << kLabels[i] << ',' << s.trials << ',' << s.successes << ',' << format_number(freq) << ','
            << format_number(s.mean_fidelity) << '\n';
    }
    const double deviation = std::abs(stats.success_frequency - stats.analytic_probability);
    double sigmas = 0;
    if (stats.standard_error > 0) {
        sigmas = deviation / stats.standard_error;
    } else if (deviation > 0) {
        sigmas = std::numeric_limits<double>::infinity();
    }
    out << "# p=" << format_number(f.p) << " q=" << format_number(f.q) << " trials=" << stats.trials
        << " seed=" << f.seed << '\n';
    out << "# successes=" << stats.successes << " success_frequency=" << format_number(stats.success_frequency)
        << " standard_error=" << format_number(stats.standard_error) << '\n';
    out << "# analytic_pq=" << format_number(stats.analytic_probability)
        << " deviation_sigma=" << (std::isinf(sigmas) ? std::string("inf") : format_number(sigmas))
        << " within_3sigma=" << boolean(sigmas <= 3) << '\n';
    out << "# mean_fidelity=" << format_number(stats.mean_fidelity)
        << " min_fidelity=" << format_number(stats.min_fidelity) << '\n';
    out << "# key_rate_factor=" << format_number(stats.key_rate_factor) << '\n';
}

// ---- filtration ----

UnitaryEnsemble weighted(std::initializer_list<std::pair<Matrix, double>> items) {
    UnitaryEnsemble out;
    for (const auto& [u, w] : items) {
        if (w > 0) out.push_back({u, w});
    }
    return out;
}

void require_arity(const std::vector<std::string>& spec, std::size_t n) {
    if (spec.size() != n) {
        throw UsageError("'" + spec.front() + "' takes " + std::to_string(n - 1) + " argument(s)");
    }
}

int cmd_filtration(const std::vector<std::string>& spec, std::size_t grid, std::ostream& out) {
    using namespace pauli;
    if (spec.empty()) throw UsageError("filtration: missing ensemble spec");
    if (grid < 8) throw UsageError("filtration: grid must be at least 8");
    const std::string& kind = spec.front();

    bool correlated = false;
    double corr_p = 0;
    double corr_q = 0;
    UnitaryEnsemble e0, e1;
    std::vector<UnitaryPair> pairs;
    if (kind == "pauli-independent") {
        require_arity(spec, 1);
        e0 = e1 = weighted({{I(), 0.25}, {X(), 0.25}, {Y(), 0.25}, {Z(), 0.25}});
    } else if (kind == "flips") {
        require_arity(spec, 3);
        const double p = parse_probability(spec[1], "p");
        const double q = parse_probability(spec[2], "q");
        e0 = weighted({{I(), 1 - p}, {X(), p}});
        e1 = weighted({{I(), 1 - q}, {Z(), q}});
    } else if (kind == "singleton") {
        require_arity(spec, 1);
        e0 = e1 = weighted({{I(), 1.0}});
    } else if (kind == "switch-correlated") {
        require_arity(spec, 3);
        corr_p = parse_probability(spec[1], "p");
        corr_q = parse_probability(spec[2], "q");
        if (!(corr_p * corr_q > 0)) throw UsageError("switch-correlated: needs p q > 0");
        for (auto& pair : switch_correlated_pairs(corr_p, corr_q)) {
            if (pair.probability > 0) pairs.push_back(std::move(pair));
        }
        correlated = true;
    } else {
        throw UsageError("filtration: unknown ensemble '" + kind +
                         "' (expected pauli-independent, flips P Q, switch-correlated P Q, singleton)");
    }

    out << "key,value\n";
    out << "ensemble," << kind << '\n';
    bool hypotheses_met = false;
    if (correlated) {
        out << "correlated,true\n";
    } else {
        pairs = product_pairs(e0, e1);
        const auto check = check_independence_hypotheses(e0, e1);
        hypotheses_met = check.met;
        out << "correlated,false\n";
        out << "distinct_0," << check.distinct0 << '\n';
        out << "distinct_1," << check.distinct1 << '\n';
        out << "max_independent," << check.max_independent << '\n';
        out << "hypotheses_met," << boolean(check.met) << '\n';
    }

    const auto search = search_postselection(pairs, grid);
    const bool unitary = search.best_score > 1 - 1e-10 && proportional_to_unitary(search.kraus);
    out << "grid," << grid << '\n';
    out << "grid_score," << format_number(search.grid_score) << '\n';
    out << "best_score," << format_number(search.best_score) << '\n';
    out << "theta_alpha," << format_number(search.angles[0]) << '\n';
    out << "phi_alpha," << format_number(search.angles[1]) << '\n';
    out << "theta_beta," << format_number(search.angles[2]) << '\n';
    out << "phi_beta," << format_number(search.angles[3]) << '\n';
    out << "acceptance," << format_number(search.acceptance) << '\n';

    if (correlated) {
        // Canonical postselection |+> -> <-| for the SWITCH-correlated pairs.
        const auto demo = switch_correlated_demo(corr_p, corr_q);
        out << "plus_minus_score," << format_number(demo.score) << '\n';
        out << "plus_minus_acceptance," << format_number(demo.acceptance) << '\n';
        out << "plus_minus_y_overlap," << format_number(demo.y_overlap) << '\n';
        if (unitary || demo.unitary) {
            out << "# unitary postselection found; independence hypotheses do not apply to correlated noise\n";
            return kUnitaryFound;
        }
        out << "# no unitary postselection found at grid resolution " << grid << '\n';
        return kInconclusive;
    }
    if (!hypotheses_met) {
        out << "# independence hypotheses not met\n";
        return kHypothesesNotMet;
    }
    if (unitary) {
        out << "# unitary postselection found\n";
        return kUnitaryFound;
    }
    if (search.best_score <= 0.99) {
        out << "# certified non-unitary: best unitarity score " << format_number(search.best_score)
            << " <= 0.99 at grid resolution " << grid << '\n';
        return kOk;
    }
    out << "# inconclusive: best unitarity score " << format_number(search.best_score) << " in (0.99, 1)\n";
    return kInconclusive;
}

// ---- choi ----

void cmd_choi(const std::vector<std::string>& spec, std::ostream& out) {
    if (spec.empty()) throw UsageError("choi: missing channel spec");
    const std::string& kind = spec.front();
    ChoiMatrix c;
    if (kind == "identity") {
        require_arity(spec, 1);
        c = kraus_to_choi(identity_channel());
    } else if (kind == "bit-flip") {
        require_arity(spec, 2);
        c = kraus_to_choi(bit_flip(parse_probability(spec[1], "p")));
    } else if (kind == "phase-flip") {
        require_arity(spec, 2);
        c = kraus_to_choi(phase_flip(parse_probability(spec[1], "q")));
    } else if (kind == "depolarizing") {
        require_arity(spec, 2);
        c = kraus_to_choi(depolarizing(parse_probability(spec[1], "p")));
    } else if (kind == "switch-flips") {
        require_arity(spec, 3);
        c = switched_choi(flip_switch(parse_probability(spec[1], "p"), parse_probability(spec[2], "q")));
    } else {
        throw UsageError("choi: unknown channel '" + kind +
                         "' (expected identity, bit-flip P, phase-flip Q, depolarizing P, switch-flips P Q)");
    }
    out << "row,col,re,im\n";
    for (std::size_t r = 0; r < c.mat.rows(); ++r) {
        for (std::size_t col = 0; col < c.mat.cols(); ++col) {
            out << r << ',' << col << ',' << format_number(c.mat(r, col).real()) << ','
                << format_number(c.mat(r, col).imag()) << '\n';
        }
    }
    out << "# d_in=" << c.d_in << " d_out=" << c.d_out << " trace=" << format_number(c.mat.trace().real()) << '\n';
}

int emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
        err << "error: cannot write '" << path << "'\n";
        return kInvalidInput;
    }
    return kOk;
}

}  // namespace

std::string format_number(double v) {
    if (v == 0) v = 0;  // drop the sign of -0
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
    return {buf, ptr};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum SWITCH of noisy channels: capacity sweeps, heralding and error filtration", "causal_switch"};
    app.require_subcommand(1);
    std::string out_path;

    SweepFlags sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Single-letter capacity of switched flips against 1 - H2(p)");
    sweep_cmd->add_option("--p-min", sweep.p_min, "Smallest p")->capture_default_str();
    sweep_cmd->add_option("--p-max", sweep.p_max, "Largest p")->capture_default_str();
    sweep_cmd->add_option("--step", sweep.step, "Grid step")->capture_default_str();
    sweep_cmd->add_flag("--verify-optimizer", sweep.verify, "Add a numerically optimized q1_numeric column");
    auto* sweep_seed = sweep_cmd->add_option("--seed", sweep.seed, "Optimizer seed")->capture_default_str();
    sweep_cmd->add_option("--starts", sweep.starts, "Random optimizer starts")->capture_default_str();
    sweep_cmd->add_option("--out", out_path, "Output CSV path (default stdout)");

    HeraldFlags herald;
    auto* herald_cmd = app.add_subcommand("herald", "Monte Carlo of the heralded noiseless channel over BB84 inputs");
    herald_cmd->add_option("--p", herald.p, "Bit-flip probability")->capture_default_str();
    herald_cmd->add_option("--q", herald.q, "Phase-flip probability")->capture_default_str();
    herald_cmd->add_option("--trials", herald.trials, "Number of trials")->capture_default_str();
    auto* herald_seed = herald_cmd->add_option("--seed", herald.seed, "RNG seed")->capture_default_str();
    herald_cmd->add_option("--out", out_path, "Output CSV path (default stdout)");

    std::vector<std::string> filtration_spec;
    std::size_t grid = 32;
    auto* filtration_cmd = app.add_subcommand(
        "filtration", "Search for a unitary postselection: pauli-independent | flips P Q | switch-correlated P Q | singleton");
    filtration_cmd->add_option("ensemble", filtration_spec, "Ensemble spec")->required()->expected(1, 3);
    filtration_cmd->add_option("--grid", grid, "Grid points per angle")->capture_default_str();
    filtration_cmd->add_option("--out", out_path, "Output CSV path (default stdout)");

    std::vector<std::string> choi_spec;
    auto* choi_cmd = app.add_subcommand(
        "choi", "Dump a trace-1 Choi matrix: identity | bit-flip P | phase-flip Q | depolarizing P | switch-flips P Q");
    choi_cmd->add_option("channel", choi_spec, "Channel spec")->required()->expected(1, 3);
    choi_cmd->add_option("--out", out_path, "Output CSV path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    std::ostringstream text;
    int code = kOk;
    try {
        if (sweep_cmd->parsed()) {
            sweep.seed = resolve_seed(sweep_seed, sweep.seed);
            cmd_sweep(sweep, text);
        } else if (herald_cmd->parsed()) {
            herald.seed = resolve_seed(herald_seed, herald.seed);
            cmd_herald(herald, text);
        } else if (filtration_cmd->parsed()) {
            code = cmd_filtration(filtration_spec, grid, text);
        } else if (choi_cmd->parsed()) {
            cmd_choi(choi_spec, text);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    const int written = emit(out_path, text.str(), out, err);
    return written != kOk ? written : code;
}

}  // namespace causal_switch::cli
