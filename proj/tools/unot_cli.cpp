// Copyright 2026 The unot Authors
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
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "unot/unot.h"

namespace {

constexpr double kPi = 3.14159265358979323846;
// Inputs such as 3.1416 are accepted as pi.
constexpr double kAngleSlack = 1e-3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
    ApiError(unot_status s, const std::string &what) : std::runtime_error(what), status(s) {}
    unot_status status;
};

void check(unot_status s, const std::string &context) {
    if (s != UNOT_OK) {
        throw ApiError(s, context + ": " + unot_last_error());
    }
}

struct OwnedString {
    char *p = nullptr;
    ~OwnedString() { unot_string_free(p); }
    std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

struct Gate {
    unot_gate *p = nullptr;
    ~Gate() { unot_gate_free(p); }
};

struct Chain {
    unot_chain *p = nullptr;
    ~Chain() { unot_chain_free(p); }
};

std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string &text, const std::string &field) {
    double v = 0.0;
    const char *end = text.data() + text.size();
    auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
        throw UsageError(field + ": not a number: '" + text + "'");
    }
    return v;
}

double to_radians(double v, bool degrees, const std::string &field) {
    double r = degrees ? v * kPi / 180.0 : v;
    if (r < 0.0 && r >= -kAngleSlack) {
        r = 0.0;
    } else if (r > kPi && r <= kPi + kAngleSlack) {
        r = kPi;
    }
    if (!(r >= 0.0 && r <= kPi)) {
        throw UsageError(field + ": angle " + fmt(v) + " outside [0, pi]");
    }
    return r;
}

double parse_angle(const std::string &text, bool degrees, const std::string &field) {
    return to_radians(parse_number(text, field), degrees, field);
}

// "a:b:n" -> n equally spaced values from a to b inclusive; a plain number is one value.
std::vector<double> parse_range(const std::string &text, bool degrees, const std::string &field) {
    auto first = text.find(':');
    if (first == std::string::npos) {
        return {parse_angle(text, degrees, field)};
    }
    auto second = text.find(':', first + 1);
    if (second == std::string::npos) {
        throw UsageError(field + ": expected start:stop:count");
    }
    double a = parse_number(text.substr(0, first), field);
    double b = parse_number(text.substr(first + 1, second - first - 1), field);
    double n = parse_number(text.substr(second + 1), field);
    if (n < 1 || n != std::floor(n) || n > 100000) {
        throw UsageError(field + ": count must be a positive integer");
    }
    int count = static_cast<int>(n);
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        double v = count == 1 ? a : a + (b - a) * i / (count - 1);
        out.push_back(to_radians(v, degrees, field));
    }
    return out;
}

std::string read_file(const std::string &path, const std::string &field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError(field + ": cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text, const std::string &field) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw UsageError(field + ": cannot write '" + path + "'");
    }
}

void emit(const std::string &text, const std::string &output) {
    if (output.empty() || output == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        write_file(output, text, "output");
    }
}

int thread_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (const char *env = std::getenv("UNOT_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) {
            n = n > 0 ? std::min(n, cap) : cap;
        }
    }
    return std::max(n, 1);
}

struct Options {
    std::string theta1 = "0";
    std::string theta2 = "3.141592653589793";
    int m = 1;
    bool degrees = false;
    int nodes = 64;
    int phi_nodes = 64;
    double resolution = 0.01;
    bool paranoid = false;
    std::string gate;
    std::string gate_out;
    std::string format = "json";
    std::string output;
    std::optional<std::string> theta;
    std::string phi = "0";
    bool exemplar = false;
    double gamma = 1.0;
    std::string state;
    std::string state_out;
    std::string schmidt_out;
    std::string chain;
    std::string reference;
};

struct Belt {
    double theta1;
    double theta2;
};

Belt belt(const Options &o) {
    Belt b{parse_angle(o.theta1, o.degrees, "theta1"), parse_angle(o.theta2, o.degrees, "theta2")};
    if (b.theta1 > b.theta2) {
        throw UsageError("theta2: must not be smaller than theta1");
    }
    return b;
}

void load_gate(const Options &o, const Belt &b, Gate &gate) {
    if (o.gate.empty()) {
        check(unot_gate_realize_optimal(b.theta1, b.theta2, o.m, &gate.p), "gate");
        return;
    }
    check(unot_gate_from_json(read_file(o.gate, "gate").c_str(), &gate.p), "gate");
    OwnedString report;
    int valid = 0;
    check(unot_gate_validate(gate.p, &report.p, &valid), "gate");
    if (!valid) {
        throw ApiError(UNOT_ERR_VALIDATION, "gate: '" + o.gate + "' is not an isometry");
    }
}

int cmd_constants(const Options &o) {
    Belt b = belt(o);
    OwnedString s;
    check(unot_constants_json(b.theta1, b.theta2, o.m, &s.p), "constants");
    emit(s.str(), o.output);
    return 0;
}

int cmd_optimize(const Options &o) {
    Belt b = belt(o);
    OwnedString s;
    check(unot_optimize_json(b.theta1, b.theta2, o.m, &s.p), "optimize");
    if (!o.gate_out.empty()) {
        Gate gate;
        OwnedString g;
        check(unot_gate_realize_optimal(b.theta1, b.theta2, o.m, &gate.p), "gate");
        check(unot_gate_to_json(gate.p, &g.p), "gate");
        write_file(o.gate_out, g.str(), "gate-out");
    }
    emit(s.str(), o.output);
    return 0;
}

int cmd_fidelity(const Options &o) {
    Belt b = belt(o);
    Gate gate;
    load_gate(o, b, gate);
    double theta = o.theta ? parse_angle(*o.theta, o.degrees, "theta") : 0.5 * (b.theta1 + b.theta2);
    double phi = parse_number(o.phi, "phi");
    if (o.degrees) {
        phi *= kPi / 180.0;
    }
    OwnedString s;
    check(unot_fidelity_report_json(gate.p, b.theta1, b.theta2, theta, phi, o.nodes, o.phi_nodes, &s.p), "fidelity");
    emit(s.str(), o.output);
    return 0;
}

int cmd_simulate(const Options &o) {
    Belt b = belt(o);
    Gate gate;
    load_gate(o, b, gate);
    double theta = o.theta ? parse_angle(*o.theta, o.degrees, "theta") : 0.5 * (b.theta1 + b.theta2);
    double phi = parse_number(o.phi, "phi");
    if (o.degrees) {
        phi *= kPi / 180.0;
    }
    OwnedString s;
    check(unot_simulate_json(gate.p, theta, phi, &s.p), "simulate");
    emit(s.str(), o.output);
    return 0;
}

struct SweepRow {
    double theta1 = 0.0;
    double theta2 = 0.0;
    int case_number = 0;
    double a = 0.0;
    double closed = 0.0;
    double quadrature = 0.0;
    std::string error;
};

void sweep_one(SweepRow &row, int m, int nodes, int phi_nodes) {
    unot_optimum opt{};
    Gate gate;
    if (unot_optimize(row.theta1, row.theta2, m, &opt) != UNOT_OK ||
        unot_gate_realize_optimal(row.theta1, row.theta2, m, &gate.p) != UNOT_OK ||
        unot_avg_fidelity_closed(gate.p, row.theta1, row.theta2, &row.closed) != UNOT_OK ||
        unot_avg_fidelity_quadrature(gate.p, row.theta1, row.theta2, nodes, phi_nodes, &row.quadrature) != UNOT_OK) {
        row.error = unot_last_error();
        return;
    }
    row.case_number = opt.case_number;
    row.a = opt.a_star;
}

int cmd_sweep(const Options &o) {
    if (o.format != "json" && o.format != "csv") {
        throw UsageError("format: expected json or csv");
    }
    auto t1 = parse_range(o.theta1, o.degrees, "theta1");
    auto t2 = parse_range(o.theta2, o.degrees, "theta2");
    std::vector<SweepRow> rows;
    int skipped = 0;
    for (double a : t1) {
        for (double b : t2) {
            if (a > b) {
                ++skipped;
                continue;
            }
            SweepRow r;
            r.theta1 = a;
            r.theta2 = b;
            rows.push_back(r);
        }
    }

    int workers = std::min<int>(thread_count(), std::max<std::size_t>(rows.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            sweep_one(rows[i], o.m, o.nodes, o.phi_nodes);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &r : rows) {
        if (!r.error.empty()) {
            throw ApiError(UNOT_ERR_ARGUMENT, "sweep at theta1=" + fmt(r.theta1) + ", theta2=" + fmt(r.theta2) + ": " +
                                                  r.error);
        }
    }

    std::string out;
    if (o.format == "csv") {
        out += "# unot sweep theta1=" + o.theta1 + " theta2=" + o.theta2 + " M=" + std::to_string(o.m) +
               " nodes=" + std::to_string(o.nodes) + " phi_nodes=" + std::to_string(o.phi_nodes) +
               " degrees=" + (o.degrees ? "1" : "0") + " skipped=" + std::to_string(skipped) + "\n";
        out += "theta1,theta2,M,case,a,F_closed,F_quadrature,residual\n";
        for (const auto &r : rows) {
            out += fmt(r.theta1) + "," + fmt(r.theta2) + "," + std::to_string(o.m) + ",Case" +
                   std::to_string(r.case_number) + "," + fmt(r.a) + "," + fmt(r.closed) + "," + fmt(r.quadrature) +
                   "," + fmt(std::abs(r.closed - r.quadrature)) + "\n";
        }
    } else {
        out += "{\n  \"config\": {\"theta1\": \"" + o.theta1 + "\", \"theta2\": \"" + o.theta2 +
               "\", \"M\": " + std::to_string(o.m) + ", \"nodes\": " + std::to_string(o.nodes) +
               ", \"phi_nodes\": " + std::to_string(o.phi_nodes) + ", \"degrees\": " + (o.degrees ? "true" : "false") +
               ", \"skipped\": " + std::to_string(skipped) + "},\n  \"rows\": [";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto &r = rows[i];
            out += i == 0 ? "\n    " : ",\n    ";
            out += "{\"theta1\": " + fmt(r.theta1) + ", \"theta2\": " + fmt(r.theta2) + ", \"M\": " +
                   std::to_string(o.m) + ", \"case\": \"Case" + std::to_string(r.case_number) + "\", \"a\": " +
                   fmt(r.a) + ", \"F_closed\": " + fmt(r.closed) + ", \"F_quadrature\": " + fmt(r.quadrature) +
                   ", \"residual\": " + fmt(std::abs(r.closed - r.quadrature)) + "}";
        }
        out += rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    }
    emit(out, o.output);
    return 0;
}

int cmd_oracle(const Options &o) {
    Belt b = belt(o);
    unot_oracle_options opts;
    unot_oracle_default_options(&opts);
    opts.resolution = o.resolution;
    opts.paranoid = o.paranoid ? 1 : 0;
    OwnedString s;
    check(unot_oracle_json(b.theta1, b.theta2, o.m, &opts, &s.p, nullptr, nullptr), "oracle");
    emit(s.str(), o.output);
    return 0;
}

int cmd_mps_build(const Options &o) {
    Chain chain;
    if (o.exemplar == !o.state.empty()) {
        throw UsageError("mps-build: give exactly one of --exemplar or --state");
    }
    if (o.exemplar) {
        check(unot_chain_exemplar(o.m, o.gamma, &chain.p), "exemplar");
        if (!o.state_out.empty()) {
            OwnedString s;
            check(unot_exemplar_state_json(o.m, o.gamma, &s.p), "exemplar");
            write_file(o.state_out, s.str(), "state-out");
        }
        if (!o.schmidt_out.empty()) {
            OwnedString s;
            check(unot_exemplar_schmidt_json(o.m, o.gamma, &s.p), "exemplar");
            write_file(o.schmidt_out, s.str(), "schmidt-out");
        }
    } else {
        check(unot_chain_from_state_json(read_file(o.state, "state").c_str(), &chain.p), "state");
    }
    OwnedString s;
    check(unot_chain_to_json(chain.p, &s.p), "chain");
    emit(s.str(), o.output);
    return 0;
}

int cmd_mps_verify(const Options &o) {
    Chain chain;
    check(unot_chain_from_json(read_file(o.chain, "chain").c_str(), &chain.p), "chain");
    std::string ref = read_file(o.reference, "reference");
    OwnedString cert;
    unot_status s = unot_chain_verify(chain.p, ref.c_str(), &cert.p);
    if (cert.p != nullptr) {
        emit(cert.str(), o.output);
    }
    check(s, "mps-verify");
    return 0;
}

int exit_code(unot_status s) {
    switch (s) {
        case UNOT_ERR_VALIDATION:
        case UNOT_ERR_PARSE:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Optimal 1-to-M quantum NOT gate for latitude belts of the Bloch sphere"};
    app.require_subcommand(1);
    Options o;

    auto add_belt = [&](CLI::App *sub) {
        sub->add_option("--theta1", o.theta1, "Lower polar angle (radians unless --degrees)");
        sub->add_option("--theta2", o.theta2, "Upper polar angle");
        sub->add_option("-M,--copies", o.m, "Number of output copies")->check(CLI::Range(1, 62));
        sub->add_flag("--degrees", o.degrees, "Read angles in degrees");
    };
    auto add_output = [&](CLI::App *sub) { sub->add_option("-o,--output", o.output, "Output file (default stdout)"); };
    auto add_quadrature = [&](CLI::App *sub) {
        sub->add_option("--nodes", o.nodes, "Gauss-Legendre nodes in cos(theta)")->check(CLI::Range(8, 4096));
        sub->add_option("--phi-nodes", o.phi_nodes, "Azimuth nodes")->check(CLI::Range(16, 4096));
    };
    auto add_point = [&](CLI::App *sub) {
        sub->add_option("--theta", o.theta, "Input polar angle (default: belt midpoint)");
        sub->add_option("--phi", o.phi, "Input azimuth");
    };

    auto *constants = app.add_subcommand("constants", "Belt constants K, P, Q, R and the case");
    add_belt(constants);
    add_output(constants);

    auto *optimize = app.add_subcommand("optimize", "Optimal gate report");
    add_belt(optimize);
    add_output(optimize);
    optimize->add_option("--gate-out", o.gate_out, "Also write the realized gate");

    auto *fidelity = app.add_subcommand("fidelity", "Pointwise and belt-averaged fidelities");
    add_belt(fidelity);
    add_output(fidelity);
    add_quadrature(fidelity);
    add_point(fidelity);
    fidelity->add_option("--gate", o.gate, "Gate file (default: the optimal gate)");

    auto *sweep = app.add_subcommand("sweep", "Closed form vs quadrature over a grid of belts");
    add_belt(sweep);
    add_output(sweep);
    add_quadrature(sweep);
    sweep->add_option("--format", o.format, "json or csv");

    auto *oracle = app.add_subcommand("oracle", "Grid search with ascent over Gram diagonals");
    add_belt(oracle);
    add_output(oracle);
    oracle->add_option("--resolution", o.resolution, "Grid step")->check(CLI::PositiveNumber);
    oracle->add_flag("--paranoid", o.paranoid, "Also sweep the pair coupling strength");

    auto *simulate = app.add_subcommand("simulate", "Apply a gate to one input state");
    add_belt(simulate);
    add_output(simulate);
    add_point(simulate);
    simulate->add_option("--gate", o.gate, "Gate file (default: the optimal gate)");

    auto *build = app.add_subcommand("mps-build", "Sequential generation chain");
    add_output(build);
    build->add_flag("--exemplar", o.exemplar, "Analytic chain of the odd-M output state");
    build->add_option("-M,--copies", o.m, "Copies (odd)")->check(CLI::Range(1, 23));
    build->add_option("--gamma", o.gamma, "Weight of the Dicke component")->check(CLI::Range(0.0, 1.0));
    build->add_option("--state", o.state, "State file for the SVD builder");
    build->add_option("--state-out", o.state_out, "Write the exemplar state");
    build->add_option("--schmidt-out", o.schmidt_out, "Write the exemplar Schmidt coefficients");

    auto *verify = app.add_subcommand("mps-verify", "Check isometries and reconstruction");
    add_output(verify);
    verify->add_option("chain", o.chain, "Chain file")->required();
    verify->add_option("--reference", o.reference, "Reference state file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::fprintf(stderr, "unot: %s\n", e.what());
        return 1;
    }

    try {
        if (*constants) return cmd_constants(o);
        if (*optimize) return cmd_optimize(o);
        if (*fidelity) return cmd_fidelity(o);
        if (*sweep) return cmd_sweep(o);
        if (*oracle) return cmd_oracle(o);
        if (*simulate) return cmd_simulate(o);
        if (*build) return cmd_mps_build(o);
        if (*verify) return cmd_mps_verify(o);
    } catch (const UsageError &e) {
        std::fprintf(stderr, "unot: %s\n", e.what());
        return 1;
    } catch (const ApiError &e) {
        std::fprintf(stderr, "unot: %s\n", e.what());
        return exit_code(e.status);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "unot: %s\n", e.what());
        return 1;
    }
    return 1;
}
