// Copyright 2026 The qhomog Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>

#include "qhomog/bounds.hpp"
#include "qhomog/error.hpp"
#include "qhomog/experiments.hpp"
#include "qhomog/oracle.hpp"

namespace py = pybind11;
using namespace qhomog;

namespace {

BlochVector to_bloch(const std::array<double, 3> &v) {
    return {v[0], v[1], v[2]};
}

std::array<double, 3> from_bloch(const BlochVector &b) {
    return {b.x, b.y, b.z};
}

py::dict report_dict(const BoundReport &r) {
    py::dict d;
    d["formula"] = std::string(to_string(r.formula));
    d["raw_bound"] = r.raw_bound;
    d["N_min"] = r.reservoir_min;
    d["n_max"] = r.reuse_max;
    d["s_squared_limit"] = r.s_squared_limit;
    d["feasible"] = r.feasible;
    d["unbounded"] = r.unbounded;
    d["reason"] = r.reason;
    return d;
}

ExperimentConfig config_from(const py::dict &kw) {
    ExperimentConfig cfg;
    for (auto item : kw) {
        auto key = py::str(item.first).cast<std::string>();
        auto value = py::str(item.second).cast<std::string>();
        if (py::isinstance<py::tuple>(item.second) || py::isinstance<py::list>(item.second)) {
            auto v = item.second.cast<std::array<double, 3>>();
            std::ostringstream ss;
            ss.precision(17);
            ss << v[0] << ',' << v[1] << ',' << v[2];
            value = ss.str();
        }
        apply_config_value(cfg, key, value);
    }
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_qhomog, m) {
    m.doc() = "Qubit homogenization with partial-swap and controlled-swap interactions";

    static py::exception<Error> base(m, "QhomogError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::set_error(base, e.what());
        }
    });

    m.def("bloch_to_density", [](const std::array<double, 3> &b) { return bloch_to_density(to_bloch(b)); });
    m.def("density_to_bloch", [](const ComplexMatrix &rho) { return from_bloch(density_to_bloch(rho)); });
    m.def("partial_trace", [](const ComplexMatrix &m_, const std::vector<int> &keep) { return partial_trace(m_, keep); },
          py::arg("matrix"), py::arg("keep"));
    m.def("fidelity", [](const std::array<double, 3> &a, const std::array<double, 3> &b) {
        return fidelity(to_bloch(a), to_bloch(b));
    });
    m.def("von_neumann_entropy", [](const ComplexMatrix &rho) { return von_neumann_entropy(rho); });

    m.def("pswap", [](double eta) { return pswap(CouplingStrength(eta)); });
    m.def("cswap", &cswap);

    m.def(
        "step",
        [](const std::string &protocol, const std::array<double, 3> &system, const std::array<double, 3> &reservoir,
           double eta) {
            auto out = interaction_step(parse_protocol(protocol), to_bloch(system), to_bloch(reservoir),
                                        CouplingStrength(eta));
            return py::make_tuple(from_bloch(out.system_out), from_bloch(out.reservoir_out));
        },
        py::arg("protocol"), py::arg("system"), py::arg("reservoir"), py::arg("eta"));

    m.def(
        "oracle_step",
        [](const std::string &protocol, const std::array<double, 3> &system, const std::array<double, 3> &reservoir,
           double eta) {
            auto out = oracle_interaction(to_bloch(system), to_bloch(reservoir), CouplingStrength(eta),
                                          parse_protocol(protocol));
            return py::make_tuple(from_bloch(out.reduced.system_out), from_bloch(out.reduced.reservoir_out), out.joint);
        },
        py::arg("protocol"), py::arg("system"), py::arg("reservoir"), py::arg("eta"));

    m.def(
        "simulate",
        [](py::kwargs kw) {
            auto cfg = config_from(kw);
            std::ostringstream out;
            write_trace_csv(out, run_simulation(cfg), cfg.entropy);
            return out.str();
        },
        "Run a protocol; keyword arguments use the config-file keys. Returns CSV text.");

    m.def("joint_entropy_series", [](const std::array<double, 3> &system, const std::array<double, 3> &reservoir,
                                     int N, double eta, const std::string &protocol) {
        return joint_entropy_series(to_bloch(system), to_bloch(reservoir), N, CouplingStrength(eta),
                                    parse_protocol(protocol));
    });

    m.def("min_reservoir_single", [](double delta, double d) { return report_dict(min_reservoir_single(delta, d)); },
          py::arg("delta"), py::arg("d"));
    m.def("max_reuse_count", [](double delta, double d, double eta) { return report_dict(max_reuse_count(delta, d, eta)); },
          py::arg("delta"), py::arg("d"), py::arg("eta"));
    m.def(
        "min_reservoir_reuse",
        [](double Delta, double d, double eta, int n) { return report_dict(min_reservoir_reuse(Delta, d, eta, n)); },
        py::arg("Delta"), py::arg("d"), py::arg("eta"), py::arg("n"));
    m.def("fidelity_gap_bound", &fidelity_gap_bound, py::arg("alpha"));
    m.def(
        "scan_fidelity_gap_bound",
        [](double lo, double hi, double step) {
            auto s = scan_fidelity_gap_bound(lo, hi, step);
            return py::make_tuple(s.argmax, s.value);
        },
        py::arg("lo") = 0.0, py::arg("hi") = 1.0, py::arg("step") = 1e-3);

    m.def(
        "verify",
        [](const std::string &scope, uint64_t seed) {
            auto report = run_verify(parse_verify_scope(scope), seed);
            std::ostringstream out;
            print_report(out, report);
            return py::make_tuple(report.passed(), out.str());
        },
        py::arg("scope") = "all", py::arg("seed") = 7);
}
