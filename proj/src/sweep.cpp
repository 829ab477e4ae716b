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

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "qhomog/bounds.hpp"
#include "qhomog/error.hpp"
#include "qhomog/experiments.hpp"

namespace qhomog {

namespace {

constexpr std::string_view kSweepHeader =
    "protocol,eta,N,n,delta,d,sys_x,sys_y,sys_z,res_x,res_y,res_z,fidelity,bloch_distance,"
    "res1_distance,max_res_distance,N_min_single,s2_single,n_max,N_min_reuse,reuse_admissible";

int as_count(double v, std::string_view axis) {
    if (v < 0 || v != std::floor(v) || v > 1e9) {
        throw Error(ErrorKind::Usage, "axis " + std::string(axis) + " needs nonnegative integers");
    }
    return static_cast<int>(v);
}

void set_axis(ExperimentConfig &cfg, const std::string &name, double v) {
    if (name == "eta") {
        cfg.eta = v;
    } else if (name == "N") {
        cfg.reservoir_size = as_count(v, name);
    } else if (name == "n") {
        cfg.systems = as_count(v, name);
    } else if (name == "delta") {
        cfg.delta = v;
    } else if (name == "d") {
        cfg.d = v;
    }
}

// Bound columns are left empty where the parameters fall outside a formula's domain.
template <typename F>
void bound_fields(std::vector<std::string> &fields, size_t width, F &&f) {
    try {
        auto v = f();
        fields.insert(fields.end(), v.begin(), v.end());
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::Domain) {
            throw;
        }
        fields.insert(fields.end(), width, "");
    }
}

std::string sweep_row(const ExperimentConfig &cfg) {
    ExperimentConfig plain = cfg;
    plain.entropy = false;
    auto sim = run_simulation(plain);
    const auto &last = sim.passes.back();
    const auto &rec = last.final_record();

    // Reservoir qubit j was last touched at step j of the final pass.
    std::string res1;
    std::string max_res;
    double worst = 0.0;
    for (size_t k = 1; k < last.steps.size(); k++) {
        double dist = bloch_distance(last.steps[k].reservoir, cfg.reservoir0);
        worst = std::max(worst, dist);
        if (k == 1) {
            res1 = format_double(dist);
        }
        max_res = format_double(worst);
    }
    double d = cfg.initial_distance();

    std::vector<std::string> fields{std::string(to_string(cfg.protocol)),
                                    format_double(cfg.eta),
                                    std::to_string(cfg.reservoir_size),
                                    std::to_string(cfg.systems),
                                    format_double(cfg.delta),
                                    format_double(d),
                                    format_double(rec.system.x),
                                    format_double(rec.system.y),
                                    format_double(rec.system.z),
                                    format_double(rec.reservoir.x),
                                    format_double(rec.reservoir.y),
                                    format_double(rec.reservoir.z),
                                    format_double(rec.fidelity),
                                    format_double(rec.bloch_distance),
                                    res1,
                                    max_res};
    bound_fields(fields, 2, [&] {
        auto b = min_reservoir_single(cfg.delta, d);
        return std::vector<std::string>{std::to_string(b.reservoir_min), format_double(b.s_squared_limit)};
    });
    bound_fields(fields, 1, [&] {
        auto b = max_reuse_count(cfg.delta, d, cfg.eta);
        return std::vector<std::string>{b.unbounded ? "inf" : std::to_string(b.reuse_max)};
    });
    bound_fields(fields, 2, [&] {
        auto a = assess_reuse(cfg.delta, d, cfg.eta, cfg.systems);
        return std::vector<std::string>{a.reservoir.feasible ? std::to_string(a.reservoir.reservoir_min) : "",
                                        a.admissible ? "1" : "0"};
    });

    std::string row;
    for (size_t i = 0; i < fields.size(); i++) {
        if (i) {
            row += ',';
        }
        row += fields[i];
    }
    return row;
}

}  // namespace

SweepAxis parse_axis(std::string_view spec) {
    auto eq = spec.find('=');
    if (eq == std::string_view::npos) {
        throw Error(ErrorKind::Usage, "axis '" + std::string(spec) + "' must look like name=lo:hi:step or name=a,b,c");
    }
    SweepAxis axis;
    axis.name = std::string(spec.substr(0, eq));
    static constexpr std::array<std::string_view, 5> kNames{"eta", "N", "n", "delta", "d"};
    if (std::find(kNames.begin(), kNames.end(), axis.name) == kNames.end()) {
        throw Error(ErrorKind::Usage, "unknown sweep axis '" + axis.name + "' (eta, N, n, delta, d)");
    }
    auto body = spec.substr(eq + 1);
    // parse_angle accepts plain numbers as well as multiples of pi.
    auto value = [](std::string_view s) { return parse_angle(s); };
    if (body.find(':') != std::string_view::npos) {
        auto c1 = body.find(':');
        auto c2 = body.find(':', c1 + 1);
        if (c2 == std::string_view::npos) {
            throw Error(ErrorKind::Usage, "range axis needs lo:hi:step");
        }
        double lo = value(body.substr(0, c1));
        double hi = value(body.substr(c1 + 1, c2 - c1 - 1));
        double step = value(body.substr(c2 + 1));
        if (!(step > 0) || hi < lo) {
            throw Error(ErrorKind::Usage, "range axis needs lo <= hi and step > 0");
        }
        double count = std::floor((hi - lo) / step + 1e-9);
        if (count > 1e7) {
            throw Error(ErrorKind::Usage, "range axis too long");
        }
        for (long i = 0; i <= static_cast<long>(count); i++) {
            axis.values.push_back(std::min(hi, lo + static_cast<double>(i) * step));
        }
    } else {
        size_t start = 0;
        for (;;) {
            auto comma = body.find(',', start);
            axis.values.push_back(value(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    return axis;
}

void run_sweep(const ExperimentConfig &base, std::span<const SweepAxis> axes, std::ostream &out,
               const SweepOptions &options) {
    size_t total = 1;
    for (const auto &a : axes) {
        if (a.values.empty()) {
            throw Error(ErrorKind::Usage, "axis " + a.name + " has no values");
        }
        if (total > options.max_rows / a.values.size() + 1) {
            total = options.max_rows + 1;
        } else {
            total *= a.values.size();
        }
    }
    if (total > options.max_rows) {
        throw Error(ErrorKind::Usage, "sweep grid exceeds the cap of " + std::to_string(options.max_rows) + " rows");
    }

    std::vector<std::string> rows(total);
    std::vector<std::exception_ptr> errors(total);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < total; i = next++) {
            try {
                ExperimentConfig cfg = base;
                size_t rest = i;
                for (size_t a = axes.size(); a-- > 0;) {
                    const auto &axis = axes[a];
                    set_axis(cfg, axis.name, axis.values[rest % axis.values.size()]);
                    rest /= axis.values.size();
                }
                rows[i] = sweep_row(cfg);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, total));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    out << kSweepHeader << '\n';
    for (const auto &r : rows) {
        out << r << '\n';
    }
}

}  // namespace qhomog
