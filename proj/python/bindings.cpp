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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "causal_switch/channel.hpp"
#include "causal_switch/entropic.hpp"
#include "causal_switch/filtration.hpp"
#include "causal_switch/herald.hpp"
#include "causal_switch/quantum_switch.hpp"

namespace py = pybind11;
using namespace causal_switch;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const ComplexArray& a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
    const auto r = a.unchecked<2>();
    Matrix m(static_cast<std::size_t>(r.shape(0)), static_cast<std::size_t>(r.shape(1)));
    for (py::ssize_t i = 0; i < r.shape(0); ++i) {
        for (py::ssize_t j = 0; j < r.shape(1); ++j) m(i, j) = r(i, j);
    }
    return m;
}

ComplexArray to_array(const Matrix& m) {
    ComplexArray out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
    auto w = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
    }
    return out;
}

py::object optional_state(const std::optional<DensityMatrix>& s) {
    if (!s) return py::none();
    return to_array(s->mat());
}

UnitaryEnsemble flip_ensemble(const Matrix& u, double p) {
    UnitaryEnsemble out;
    if (1 - p > 0) out.push_back({pauli::I(), 1 - p});
    if (p > 0) out.push_back({u, p});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum SWITCH of noisy qubit channels";

    m.def("binary_entropy", &binary_entropy, py::arg("x"), "H2(x) in bits.");
    m.def("dephasing_capacity", &dephasing_capacity, py::arg("p"), "Quantum capacity 1 - H2(p) of a flip channel.");
    m.def(
        "switch_flip_coherent_info",
        [](double p, bool clipped) {
            return clipped ? switch_flip_coherent_info_closed(p) : switch_flip_coherent_info_raw(p);
        },
        py::arg("p"), py::arg("clipped") = true,
        "max(0, 1 + H2(p^2) - 2 H2(p)) for the switched bit and phase flips (unclipped with clipped=False).");
    m.def("crossover_p", &crossover_p, py::arg("grid_step") = 0.005,
          "Smallest grid p > 1/2 where the switched flips beat 1 - H2(p).");

    m.def("heralded_success_probability", &heralded_success_probability, py::arg("p"), py::arg("q"));
    m.def(
        "flip_switch_output",
        [](double p, double q, const ComplexArray& rho) {
            return to_array(apply_switch(flip_switch(p, q), DensityMatrix(to_matrix(rho))).mat());
        },
        py::arg("p"), py::arg("q"), py::arg("rho"),
        "Joint particle (x) control output of the SWITCH of bit_flip(p) and phase_flip(q), control |+>.");
    m.def(
        "flip_switch_closed_form",
        [](double p, double q, const ComplexArray& rho) {
            return to_array(pauli_switch_closed_form(p, q, DensityMatrix(to_matrix(rho))).mat());
        },
        py::arg("p"), py::arg("q"), py::arg("rho"));
    m.def(
        "switched_flip_choi",
        [](double p, double q) { return to_array(switched_choi(flip_switch(p, q)).mat); }, py::arg("p"),
        py::arg("q"), "Trace-1 Choi matrix (8x8) of the switched flips, output (particle, control) on the left.");
    m.def(
        "herald_measure",
        [](const ComplexArray& joint) {
            const auto o = herald_measure(DensityMatrix(to_matrix(joint), {2, 2}));
            py::dict d;
            d["prob_plus"] = o.prob_plus;
            d["prob_minus"] = o.prob_minus;
            d["state_plus"] = optional_state(o.state_plus);
            d["state_minus"] = optional_state(o.state_minus);
            return d;
        },
        py::arg("joint"), "Measure the control of a 4x4 particle (x) control state in the |+>, |-> basis.");
    m.def(
        "monte_carlo_herald",
        [](double p, double q, std::uint64_t trials, std::uint64_t seed) {
            const auto states = bb84_states();
            HeraldStatistics s;
            {
                py::gil_scoped_release release;
                s = monte_carlo_herald(p, q, trials, seed, states);
            }
            py::dict d;
            d["trials"] = s.trials;
            d["successes"] = s.successes;
            d["success_frequency"] = s.success_frequency;
            d["standard_error"] = s.standard_error;
            d["analytic_probability"] = s.analytic_probability;
            d["mean_fidelity"] = s.mean_fidelity;
            d["min_fidelity"] = s.min_fidelity;
            d["key_rate_factor"] = s.key_rate_factor;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("trials") = 100000, py::arg("seed") = 42,
        "Monte Carlo of the heralded protocol over the four BB84 inputs.");

    m.def(
        "maximize_switched_coherent_information",
        [](double p, std::optional<double> q, int starts, std::uint64_t seed) {
            OptimizerSettings settings;
            settings.random_starts = starts;
            settings.seed = seed;
            const auto sc = flip_switch(p, q.value_or(p));
            std::optional<CoherentInfoResult> r;
            {
                py::gil_scoped_release release;
                r = maximize_coherent_information(sc, settings);
            }
            return py::make_tuple(r->value, to_array(r->optimal_input.mat()), entanglement_entropy(r->optimal_input));
        },
        py::arg("p"), py::arg("q") = py::none(), py::arg("starts") = 16, py::arg("seed") = 42,
        "Multi-start maximization of coherent information; returns (value, optimal input, entanglement entropy).");

    m.def(
        "check_independence_hypotheses",
        [](double p, double q) {
            const auto c = check_independence_hypotheses(flip_ensemble(pauli::X(), p), flip_ensemble(pauli::Z(), q));
            py::dict d;
            d["distinct0"] = c.distinct0;
            d["distinct1"] = c.distinct1;
            d["max_independent"] = c.max_independent;
            d["met"] = c.met;
            return d;
        },
        py::arg("p"), py::arg("q"), "Hypothesis check for the ensembles {I, X} (weight p on X) and {I, Z}.");
    m.def(
        "search_flip_postselection",
        [](double p, double q, std::size_t grid) {
            const auto e0 = flip_ensemble(pauli::X(), p);
            const auto e1 = flip_ensemble(pauli::Z(), q);
            std::optional<PostselectionSearch> s;
            {
                py::gil_scoped_release release;
                s = search_postselection(e0, e1, grid);
            }
            py::dict d;
            d["grid_score"] = s->grid_score;
            d["best_score"] = s->best_score;
            d["angles"] = s->angles;
            d["acceptance"] = s->acceptance;
            d["kraus"] = to_array(s->kraus);
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("grid") = 32,
        "Best unitarity score over postselections for independent bit-flip and phase-flip paths.");
    m.def(
        "switch_correlated_demo",
        [](double p, double q) {
            const auto r = switch_correlated_demo(p, q);
            py::dict d;
            d["score"] = r.score;
            d["acceptance"] = r.acceptance;
            d["recovered_unitary"] = to_array(r.recovered_unitary);
            d["y_overlap"] = r.y_overlap;
            d["unitary"] = r.unitary;
            return d;
        },
        py::arg("p"), py::arg("q"), "Postselect the SWITCH-correlated ensemble on |+> -> <-|.");
}
