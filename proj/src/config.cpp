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

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qhomog/error.hpp"
#include "qhomog/experiments.hpp"
#include "qhomog/gates.hpp"

namespace qhomog {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

[[noreturn]] void usage(const std::string &msg) {
    throw Error(ErrorKind::Usage, msg);
}

}  // namespace

void ExperimentConfig::validate() const {
    CouplingStrength check(eta);
    (void)check;
    if (reservoir_size < 0) {
        usage("N must be >= 0");
    }
    if (systems < 1) {
        usage("n must be >= 1");
    }
    validate_bloch(system0);
    validate_bloch(reservoir0);
    if (protocol == Protocol::Cswap && systems > 1 && reservoir_size < systems) {
        throw Error(ErrorKind::Configuration, "cswap reuse requires N >= n");
    }
    if (entropy && systems > 1) {
        usage("the entropy metric is only available for a single system (n = 1)");
    }
    if (max_qubits < 1 || max_qubits > 20) {
        usage("max_qubits must lie in [1, 20]");
    }
}

double ExperimentConfig::initial_distance() const {
    return d.value_or(bloch_distance(system0, reservoir0));
}

BlochVector parse_state(std::string_view text) {
    auto t = trim(text);
    if (t == "zero") {
        return {0, 0, 1};
    }
    if (t == "one") {
        return {0, 0, -1};
    }
    if (t == "plus") {
        return {1, 0, 0};
    }
    if (t == "minus") {
        return {-1, 0, 0};
    }
    if (t == "mixed") {
        return {0, 0, 0};
    }
    auto parts = split(t, ',');
    if (parts.size() != 3) {
        usage("state '" + std::string(text) + "' is neither a named state nor an x,y,z triple");
    }
    std::array<double, 3> v{};
    for (size_t i = 0; i < 3; i++) {
        auto d = to_double(parts[i]);
        if (!d) {
            usage("bad Bloch component '" + std::string(parts[i]) + "'");
        }
        v[i] = *d;
    }
    BlochVector b{v[0], v[1], v[2]};
    validate_bloch(b);
    return b;
}

double parse_angle(std::string_view text) {
    auto t = trim(text);
    auto pi_at = t.find("pi");
    if (pi_at == std::string_view::npos) {
        auto v = to_double(t);
        if (!v) {
            usage("bad angle '" + std::string(text) + "'");
        }
        return *v;
    }
    auto head = trim(t.substr(0, pi_at));
    auto tail = trim(t.substr(pi_at + 2));
    if (!head.empty() && head.back() == '*') {
        head = trim(head.substr(0, head.size() - 1));
    }
    double factor = 1.0;
    if (!head.empty()) {
        auto v = to_double(head);
        if (!v) {
            usage("bad angle '" + std::string(text) + "'");
        }
        factor = *v;
    }
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            usage("bad angle '" + std::string(text) + "'");
        }
        auto v = to_double(tail.substr(1));
        if (!v || *v == 0.0) {
            usage("bad angle '" + std::string(text) + "'");
        }
        divisor = *v;
    }
    return factor * std::numbers::pi / divisor;
}

int parse_count(std::string_view text, std::string_view what) {
    auto t = trim(text);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || v < 0) {
        usage(std::string(what) + " must be a nonnegative integer, got '" + std::string(text) + "'");
    }
    return v;
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
    std::map<std::string, std::string> out;
    int line_no = 0;
    for (auto line : split(text, '\n')) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            usage("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            usage("config line " + std::to_string(line_no) + ": empty key");
        }
        out[std::string(key)] = std::string(value);
    }
    return out;
}

std::map<std::string, std::string> read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot read config file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void apply_config_value(ExperimentConfig &config, std::string_view key, std::string_view value) {
    auto number = [&](std::string_view what) {
        auto v = to_double(value);
        if (!v) {
            usage(std::string(what) + " must be a number, got '" + std::string(value) + "'");
        }
        return *v;
    };
    if (key == "protocol") {
        config.protocol = parse_protocol(trim(value));
    } else if (key == "eta") {
        config.eta = parse_angle(value);
    } else if (key == "N") {
        config.reservoir_size = parse_count(value, "N");
    } else if (key == "n") {
        config.systems = parse_count(value, "n");
    } else if (key == "system") {
        config.system0 = parse_state(value);
    } else if (key == "reservoir") {
        config.reservoir0 = parse_state(value);
    } else if (key == "metrics") {
        config.entropy = false;
        for (auto m : split(value, ',')) {
            if (m == "entropy") {
                config.entropy = true;
            } else if (m != "fidelity" && m != "bloch_distance") {
                usage("unknown metric '" + std::string(m) + "'");
            }
        }
    } else if (key == "seed") {
        auto t = trim(value);
        uint64_t s = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), s);
        if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
            usage("seed must be a nonnegative integer");
        }
        config.seed = s;
    } else if (key == "output") {
        config.output_path = std::string(trim(value));
    } else if (key == "delta") {
        config.delta = number("delta");
    } else if (key == "d") {
        config.d = number("d");
    } else if (key == "entropy_unit") {
        auto t = trim(value);
        if (t == "bits") {
            config.entropy_unit = LogBase::Bits;
        } else if (t == "nats") {
            config.entropy_unit = LogBase::Nats;
        } else {
            usage("entropy_unit must be bits or nats");
        }
    } else if (key == "max_qubits") {
        config.max_qubits = parse_count(value, "max_qubits");
    } else {
        usage("unknown config key '" + std::string(key) + "'");
    }
}

std::string format_double(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

}  // namespace qhomog
