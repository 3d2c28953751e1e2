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

#include "unot/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

namespace unot {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_array(std::span<const Complex> values) {
    Json out = Json::array();
    for (const auto &z : values) {
        out.push_back(complex_json(z));
    }
    return out;
}

Json matrix_json(const Eigen::MatrixXcd &mat) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < mat.cols(); ++c) {
            row.push_back(complex_json(mat(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(const Eigen::VectorXcd &vec) {
    return complex_array(std::span<const Complex>(vec.data(), static_cast<std::size_t>(vec.size())));
}

Json real_array(const std::vector<double> &values) {
    Json out = Json::array();
    for (double v : values) {
        out.push_back(v);
    }
    return out;
}

const Json &field(const Json &doc, const char *name, const std::string &path) {
    if (!doc.is_object()) {
        throw ParseError(path + ": expected an object");
    }
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(path + (path.empty() ? "" : ".") + name + ": missing field");
    }
    return *it;
}

std::string join(const std::string &path, const char *name) { return path.empty() ? name : path + "." + name; }

int read_int(const Json &doc, const char *name, const std::string &path, int lo, int hi) {
    const Json &v = field(doc, name, path);
    std::string where = join(path, name);
    if (!v.is_number_integer()) {
        throw ParseError(where + ": expected an integer");
    }
    std::int64_t x = v.get<std::int64_t>();
    if (x < lo || x > hi) {
        throw ParseError(where + ": value " + std::to_string(x) + " outside " + std::to_string(lo) + ".." +
                         std::to_string(hi));
    }
    return static_cast<int>(x);
}

Complex read_complex(const Json &v, const std::string &where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError(where + ": expected [re, im]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<Complex> read_complex_array(const Json &v, const std::string &where, std::size_t expected) {
    if (!v.is_array()) {
        throw ParseError(where + ": expected an array");
    }
    if (v.size() != expected) {
        throw ParseError(where + ": expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(v.size()));
    }
    std::vector<Complex> out;
    out.reserve(expected);
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(read_complex(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Eigen::MatrixXcd read_matrix(const Json &v, const std::string &where, int rows, int cols) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(rows)) {
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
    }
    Eigen::MatrixXcd out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        auto row = read_complex_array(v[r], where + "[" + std::to_string(r) + "]", cols);
        for (int c = 0; c < cols; ++c) {
            out(r, c) = row[c];
        }
    }
    return out;
}

Eigen::VectorXcd read_vector(const Json &v, const std::string &where, int size) {
    auto vals = read_complex_array(v, where, size);
    return Eigen::Map<Eigen::VectorXcd>(vals.data(), size);
}

bool scalar_only(const Json &arr) {
    for (const auto &x : arr) {
        if (x.is_structured()) {
            return false;
        }
    }
    return true;
}

bool short_array(const Json &arr) {
    // [re, im] pairs and rows of them stay inline.
    if (scalar_only(arr)) {
        return true;
    }
    for (const auto &x : arr) {
        if (!x.is_array() || !scalar_only(x)) {
            return false;
        }
    }
    return arr.size() <= 8;
}

void write(std::string &out, const Json &v, int depth, bool inline_mode) {
    auto newline = [&](int d) {
        if (!inline_mode) {
            out += '\n';
            out.append(2 * static_cast<std::size_t>(d), ' ');
        }
    };
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    out += inline_mode ? ", " : ",";
                }
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += ": ";
                write(out, it.value(), depth + 1, inline_mode);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            bool inl = inline_mode || short_array(v);
            out += '[';
            bool first = true;
            for (const auto &x : v) {
                if (!first) {
                    out += inl ? ", " : ",";
                }
                first = false;
                if (!inl) {
                    newline(depth + 1);
                }
                write(out, x, depth + 1, inl);
            }
            if (!inl) {
                newline(depth);
            }
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += format_double(v.get<double>());
            return;
        default:
            out += v.dump();
            return;
    }
}

}  // namespace

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    if (value == 0.0) {
        return std::signbit(value) ? "-0.0" : "0.0";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";  // keep floats distinguishable from integers
    }
    return s;
}

std::string dump(const Json &doc) {
    std::string out;
    write(out, doc, 0, false);
    out += '\n';
    return out;
}

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json constants_to_json(const BeltRegion &region, int m) {
    BeltConstants c = belt_constants(region);
    Json out;
    out["theta1"] = region.theta1;
    out["theta2"] = region.theta2;
    out["K"] = c.k;
    out["P"] = c.p;
    out["Q"] = c.q;
    out["R"] = c.r;
    out["case"] = classify_case(region, m).name();
    return out;
}

Json joint_state_to_json(const JointState &state) {
    Json out;
    out["m"] = state.m();
    out["anc_dim"] = state.anc_dim();
    out["amplitudes"] = complex_array(state.amplitudes());
    return out;
}

JointState joint_state_from_json(const Json &doc) {
    int m = read_int(doc, "m", "", 1, kMaxExactBinomial);
    int anc = read_int(doc, "anc_dim", "", 1, 1 << 16);
    JointState state(m, anc);
    auto amps = read_complex_array(field(doc, "amplitudes", ""), "amplitudes",
                                   static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(anc));
    std::copy(amps.begin(), amps.end(), state.amplitudes().begin());
    return state;
}

Json gate_to_json(const GateSpec &spec) {
    Json out;
    out["m"] = spec.m();
    out["anc_dim"] = spec.anc_dim();
    Json vecs = Json::array();
    for (const auto &v : spec.vectors()) {
        vecs.push_back(vector_json(v));
    }
    out["A"] = std::move(vecs);
    return out;
}

GateSpec gate_from_json(const Json &doc) {
    int m = read_int(doc, "m", "", 1, kMaxExactBinomial);
    int anc = read_int(doc, "anc_dim", "", 1, 1 << 16);
    const Json &a = field(doc, "A", "");
    if (!a.is_array() || a.size() != static_cast<std::size_t>(2 * m + 2)) {
        throw ParseError("A: expected " + std::to_string(2 * m + 2) + " vectors");
    }
    GateSpec spec(m, anc);
    for (int l = 0; l < spec.vector_count(); ++l) {
        spec.vector(l) = read_vector(a[l], "A[" + std::to_string(l) + "]", anc);
    }
    return spec;
}

Json full_state_to_json(std::span<const Complex> amplitudes, int qubit_count) {
    Json out;
    out["qubit_count"] = qubit_count;
    out["amplitudes"] = complex_array(amplitudes);
    return out;
}

FullState state_from_json(const Json &doc) {
    if (doc.is_object() && doc.contains("state")) {
        return state_from_json(doc["state"]);
    }
    if (doc.is_object() && doc.contains("anc_dim")) {
        JointState js = joint_state_from_json(doc);
        if (js.anc_dim() > 2) {
            throw ParseError("anc_dim: only 1 or 2 can be expanded to qubits");
        }
        if (js.m() > kMaxExpandCopies) {
            throw ParseError("m: too many copies to expand");
        }
        FullState out;
        out.qubit_count = js.m() + (js.anc_dim() == 2 ? 1 : 0);
        out.amplitudes = expand_to_qubits(js);
        return out;
    }
    FullState out;
    out.qubit_count = read_int(doc, "qubit_count", "", 1, kMaxExpandCopies + 1);
    out.amplitudes = read_complex_array(field(doc, "amplitudes", ""), "amplitudes",
                                        std::size_t{1} << out.qubit_count);
    return out;
}

Json chain_to_json(const MpsChain &chain) {
    Json sites = Json::array();
    for (const auto &s : chain.sites) {
        Json site;
        site["bond_in"] = s.bond_in;
        site["bond_out"] = s.bond_out;
        site["V0"] = matrix_json(s.v[0]);
        site["V1"] = matrix_json(s.v[1]);
        sites.push_back(std::move(site));
    }
    Json out;
    out["sites"] = std::move(sites);
    out["boundary_in"] = vector_json(chain.boundary_in);
    out["boundary_out"] = vector_json(chain.boundary_out);
    return out;
}

MpsChain chain_from_json(const Json &doc) {
    const Json &sites = field(doc, "sites", "");
    if (!sites.is_array() || sites.empty()) {
        throw ParseError("sites: expected a non-empty array");
    }
    MpsChain chain;
    for (std::size_t n = 0; n < sites.size(); ++n) {
        std::string path = "sites[" + std::to_string(n) + "]";
        MpsSite s;
        s.bond_in = read_int(sites[n], "bond_in", path, 1, 1 << 14);
        s.bond_out = read_int(sites[n], "bond_out", path, 1, 1 << 14);
        s.v[0] = read_matrix(field(sites[n], "V0", path), path + ".V0", s.bond_out, s.bond_in);
        s.v[1] = read_matrix(field(sites[n], "V1", path), path + ".V1", s.bond_out, s.bond_in);
        chain.sites.push_back(std::move(s));
    }
    const Json &bin = field(doc, "boundary_in", "");
    const Json &bout = field(doc, "boundary_out", "");
    chain.boundary_in = read_vector(bin, "boundary_in", bin.is_array() ? static_cast<int>(bin.size()) : 0);
    chain.boundary_out = read_vector(bout, "boundary_out", bout.is_array() ? static_cast<int>(bout.size()) : 0);
    try {
        check_chain_shape(chain);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    return chain;
}

Json report_to_json(const OptimalGateReport &r) {
    Json out;
    out["constants"] = constants_to_json(r.region, r.m);
    out["M"] = r.m;
    out["case_id"] = r.case_id.name();
    out["a_star"] = r.a_star;
    out["boundary_hit"] = r.boundary_hit;
    out["case_f_bar"] = r.case_f_bar;
    out["a_diagonals"] = real_array(r.a_diagonals);
    out["f_bar"] = r.f_bar;
    out["dual_bound"] = r.dual_bound;
    out["case_formula_optimal"] = r.case_formula_optimal;
    Json pairs = Json::array();
    for (const auto &[j, k] : r.coupled_pairs) {
        pairs.push_back(Json::array({j, k}));
    }
    out["coupled_pairs"] = std::move(pairs);
    return out;
}

Json oracle_to_json(const OracleResult &o, double analytic_f_bar) {
    Json out;
    out["first_branch"] = real_array(o.first_branch);
    out["second_branch"] = real_array(o.second_branch);
    out["best_f"] = o.best_f;
    out["grid_best_f"] = o.grid_best_f;
    out["analytic_f_bar"] = analytic_f_bar;
    out["residual"] = o.best_f - analytic_f_bar;
    out["evaluations"] = o.evaluations;
    out["resolution"] = o.resolution;
    out["coarse_resolution"] = o.coarse_resolution;
    out["coupling_factors"] = real_array(o.coupling_factors);
    out["saturation_confirmed"] = o.saturation_confirmed;
    return out;
}

Json fidelity_to_json(const FidelityReport &f) {
    Json out;
    out["theta"] = f.theta;
    out["phi"] = f.phi;
    out["pointwise_sim"] = f.pointwise_sim;
    out["pointwise_phi_average"] = f.pointwise_phi_average;
    out["pointwise_formula"] = f.pointwise_formula;
    out["avg_closed"] = f.avg_closed;
    out["avg_quadrature"] = f.avg_quadrature;
    out["pointwise_residual"] = f.pointwise_residual;
    out["avg_residual"] = f.avg_residual;
    return out;
}

Json consistency_to_json(const ConsistencyReport &c) {
    Json out;
    out["f_bar"] = c.f_bar;
    out["realized_avg"] = c.realized_avg;
    out["case_f_bar"] = c.case_f_bar;
    out["case_realized_avg"] = c.case_realized_avg;
    out["tie"] = c.tie;
    out["sibling_f_bar"] = c.sibling_f_bar;
    out["mismatches"] = c.mismatches;
    out["consistent"] = c.consistent();
    return out;
}

Json validity_to_json(const ValidityReport &v) {
    Json out;
    out["norm0_residual"] = v.norm0_residual;
    out["norm1_residual"] = v.norm1_residual;
    out["cross_residual"] = v.cross_residual;
    out["failures"] = v.failures;
    out["valid"] = v.valid();
    return out;
}

Json schmidt_to_json(const ExemplarState &state, const SchmidtData &data) {
    Json out;
    out["m"] = state.m;
    out["gamma"] = state.gamma;
    Json cuts = Json::array();
    for (std::size_t n = 0; n < data.lambdas.size(); ++n) {
        Json cut;
        cut["cut"] = n + 1;
        cut["lambda"] = real_array(data.lambdas[n]);
        cut["kept"] = data.kept[n + 1];
        cuts.push_back(std::move(cut));
    }
    out["cuts"] = std::move(cuts);
    return out;
}

Json certificate_to_json(const ChainCertificate &c) {
    Json out;
    out["site_residuals"] = real_array(c.site_residuals);
    out["max_residual"] = c.max_residual;
    out["overlap"] = c.overlap;
    out["passed"] = c.passed;
    return out;
}

}  // namespace unot
