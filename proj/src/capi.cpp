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

#include "unot/unot.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "unot/serialize.hpp"

struct unot_gate {
    unot::GateSpec spec;
};

struct unot_chain {
    unot::MpsChain chain;
};

namespace {

thread_local std::string g_last_error;

unot_status fail(unot_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <class F>
unot_status guarded(F &&body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const unot::ParseError &e) {
        return fail(UNOT_ERR_PARSE, e.what());
    } catch (const unot::ValidationError &e) {
        return fail(UNOT_ERR_VALIDATION, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(UNOT_ERR_ARGUMENT, e.what());
    } catch (const std::out_of_range &e) {
        return fail(UNOT_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(UNOT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(UNOT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(UNOT_ERR_INTERNAL, "unknown error");
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const unot::Json &doc, char **out) { *out = copy_string(unot::dump(doc)); }

void need(const void *p, const char *name) {
    if (p == nullptr) {
        throw std::invalid_argument(std::string(name) + ": null pointer");
    }
}

unot::BeltRegion region(double theta1, double theta2) { return unot::BeltRegion::make(theta1, theta2); }

}  // namespace

extern "C" {

const char *unot_version(void) { return "1.0.0"; }

const char *unot_last_error(void) { return g_last_error.c_str(); }

void unot_string_free(char *s) { std::free(s); }

unot_status unot_belt_constants(double theta1, double theta2, int m, unot_constants *out) {
    return guarded([&] {
        need(out, "out");
        auto r = region(theta1, theta2);
        auto c = unot::belt_constants(r);
        *out = {c.k, c.p, c.q, c.r, unot::classify_case(r, m).number()};
        return UNOT_OK;
    });
}

unot_status unot_constants_json(double theta1, double theta2, int m, char **out) {
    return guarded([&] {
        need(out, "out");
        emit(unot::constants_to_json(region(theta1, theta2), m), out);
        return UNOT_OK;
    });
}

unot_status unot_optimize(double theta1, double theta2, int m, unot_optimum *out) {
    return guarded([&] {
        need(out, "out");
        auto rep = unot::analytic_optimum(region(theta1, theta2), m);
        *out = {rep.f_bar,
                rep.dual_bound,
                rep.case_f_bar,
                rep.a_star,
                rep.case_id.number(),
                rep.boundary_hit ? 1 : 0,
                rep.case_formula_optimal ? 1 : 0};
        return UNOT_OK;
    });
}

unot_status unot_optimize_json(double theta1, double theta2, int m, char **out) {
    return guarded([&] {
        need(out, "out");
        emit(unot::report_to_json(unot::analytic_optimum(region(theta1, theta2), m)), out);
        return UNOT_OK;
    });
}

unot_status unot_case_consistency_json(double theta1, double theta2, int m, char **out, int *consistent) {
    return guarded([&] {
        need(out, "out");
        auto rep = unot::verify_case_consistency(region(theta1, theta2), m);
        if (consistent != nullptr) {
            *consistent = rep.consistent() ? 1 : 0;
        }
        emit(unot::consistency_to_json(rep), out);
        return UNOT_OK;
    });
}

unot_status unot_gate_realize_optimal(double theta1, double theta2, int m, unot_gate **out) {
    return guarded([&] {
        need(out, "out");
        *out = new unot_gate{unot::realize_optimal(region(theta1, theta2), m)};
        return UNOT_OK;
    });
}

unot_status unot_gate_realize_case(double theta1, double theta2, int m, int case_number, unot_gate **out) {
    return guarded([&] {
        need(out, "out");
        if (case_number < 1 || case_number > 4) {
            throw std::invalid_argument("case: expected 1..4");
        }
        auto kind = static_cast<unot::CaseKind>(case_number);
        *out = new unot_gate{unot::realize_case_family(region(theta1, theta2), m, kind)};
        return UNOT_OK;
    });
}

unot_status unot_gate_from_json(const char *text, unot_gate **out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new unot_gate{unot::gate_from_json(unot::parse_text(text))};
        return UNOT_OK;
    });
}

unot_status unot_gate_to_json(const unot_gate *gate, char **out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        emit(unot::gate_to_json(gate->spec), out);
        return UNOT_OK;
    });
}

unot_status unot_gate_validate(const unot_gate *gate, char **report, int *valid) {
    return guarded([&] {
        need(gate, "gate");
        auto v = unot::validate(gate->spec);
        if (valid != nullptr) {
            *valid = v.valid() ? 1 : 0;
        }
        if (report != nullptr) {
            emit(unot::validity_to_json(v), report);
        }
        return UNOT_OK;
    });
}

int unot_gate_copies(const unot_gate *gate) { return gate == nullptr ? 0 : gate->spec.m(); }

void unot_gate_free(unot_gate *gate) { delete gate; }

unot_status unot_fidelity_sim(const unot_gate *gate, double theta, double phi, double *out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        *out = unot::fidelity_sim(gate->spec, unot::InputState::make(theta, phi));
        return UNOT_OK;
    });
}

unot_status unot_fidelity_phi_average(const unot_gate *gate, double theta, int phi_nodes, double *out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        *out = unot::fidelity_phi_average(gate->spec, theta, phi_nodes);
        return UNOT_OK;
    });
}

unot_status unot_fidelity_formula(const unot_gate *gate, double theta, double *out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        *out = unot::fidelity_formula(gate->spec, theta);
        return UNOT_OK;
    });
}

unot_status unot_avg_fidelity_closed(const unot_gate *gate, double theta1, double theta2, double *out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        *out = unot::avg_fidelity_closed(gate->spec, region(theta1, theta2));
        return UNOT_OK;
    });
}

unot_status unot_avg_fidelity_quadrature(const unot_gate *gate, double theta1, double theta2, int nodes,
                                         int phi_nodes, double *out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        *out = unot::avg_fidelity_quadrature(gate->spec, region(theta1, theta2), nodes, phi_nodes);
        return UNOT_OK;
    });
}

unot_status unot_fidelity_report_json(const unot_gate *gate, double theta1, double theta2, double theta, double phi,
                                      int nodes, int phi_nodes, char **out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        auto r = region(theta1, theta2);
        auto rep = unot::fidelity_report(gate->spec, r, unot::InputState::make(theta, phi), nodes, phi_nodes);
        unot::Json doc;
        doc["constants"] = unot::constants_to_json(r, gate->spec.m());
        doc["M"] = gate->spec.m();
        doc["nodes"] = nodes;
        doc["phi_nodes"] = phi_nodes;
        doc["fidelity"] = unot::fidelity_to_json(rep);
        emit(doc, out);
        return UNOT_OK;
    });
}

unot_status unot_simulate_json(const unot_gate *gate, double theta, double phi, char **out) {
    return guarded([&] {
        need(gate, "gate");
        need(out, "out");
        auto input = unot::InputState::make(theta, phi);
        auto state = unot::apply(gate->spec, input);
        auto rho = unot::reduced_single_qubit(state, 1);
        unot::Json doc;
        doc["theta"] = input.theta;
        doc["phi"] = input.phi;
        doc["state"] = unot::joint_state_to_json(state);
        unot::Json rj = unot::Json::array();
        for (int r = 0; r < 2; ++r) {
            unot::Json row = unot::Json::array();
            for (int c = 0; c < 2; ++c) {
                row.push_back(unot::Json::array({rho(r, c).real(), rho(r, c).imag()}));
            }
            rj.push_back(std::move(row));
        }
        doc["reduced_density"] = std::move(rj);
        doc["fidelity"] = unot::fidelity_sim(gate->spec, input);
        emit(doc, out);
        return UNOT_OK;
    });
}

void unot_oracle_default_options(unot_oracle_options *out) {
    if (out == nullptr) {
        return;
    }
    unot::OracleOptions d;
    *out = {d.resolution, d.refine_step, d.paranoid ? 1 : 0};
}

unot_status unot_oracle_json(double theta1, double theta2, int m, const unot_oracle_options *options, char **out,
                             double *best_f, double *analytic_f_bar) {
    return guarded([&] {
        need(out, "out");
        unot::OracleOptions opts;
        if (options != nullptr) {
            opts.resolution = options->resolution;
            opts.refine_step = options->refine_step;
            opts.paranoid = options->paranoid != 0;
        }
        auto r = region(theta1, theta2);
        auto res = unot::oracle_optimum(r, m, opts);
        double analytic = unot::analytic_optimum(r, m).f_bar;
        if (best_f != nullptr) {
            *best_f = res.best_f;
        }
        if (analytic_f_bar != nullptr) {
            *analytic_f_bar = analytic;
        }
        unot::Json doc;
        doc["constants"] = unot::constants_to_json(r, m);
        doc["M"] = m;
        doc["oracle"] = unot::oracle_to_json(res, analytic);
        emit(doc, out);
        return UNOT_OK;
    });
}

unot_status unot_chain_exemplar(int m, double gamma, unot_chain **out) {
    return guarded([&] {
        need(out, "out");
        *out = new unot_chain{unot::exemplar_chain(unot::ExemplarState::make(m, gamma)).chain};
        return UNOT_OK;
    });
}

unot_status unot_exemplar_state_json(int m, double gamma, char **out) {
    return guarded([&] {
        need(out, "out");
        auto js = unot::exemplar_joint_state(unot::ExemplarState::make(m, gamma));
        emit(unot::full_state_to_json(unot::expand_to_qubits(js), m + 1), out);
        return UNOT_OK;
    });
}

unot_status unot_exemplar_schmidt_json(int m, double gamma, char **out) {
    return guarded([&] {
        need(out, "out");
        auto st = unot::ExemplarState::make(m, gamma);
        emit(unot::schmidt_to_json(st, unot::exemplar_chain(st).schmidt), out);
        return UNOT_OK;
    });
}

unot_status unot_chain_from_state_json(const char *text, unot_chain **out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        auto st = unot::state_from_json(unot::parse_text(text));
        *out = new unot_chain{unot::generic_chain(st.amplitudes, st.qubit_count)};
        return UNOT_OK;
    });
}

unot_status unot_chain_from_json(const char *text, unot_chain **out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new unot_chain{unot::chain_from_json(unot::parse_text(text))};
        return UNOT_OK;
    });
}

unot_status unot_chain_to_json(const unot_chain *chain, char **out) {
    return guarded([&] {
        need(chain, "chain");
        need(out, "out");
        emit(unot::chain_to_json(chain->chain), out);
        return UNOT_OK;
    });
}

int unot_chain_sites(const unot_chain *chain) { return chain == nullptr ? 0 : chain->chain.site_count(); }

unot_status unot_chain_bond_dims(const unot_chain *chain, int *dims, int capacity, int *count) {
    return guarded([&] {
        need(chain, "chain");
        auto bd = chain->chain.bond_dims();
        if (count != nullptr) {
            *count = static_cast<int>(bd.size());
        }
        for (int i = 0; i < capacity && i < static_cast<int>(bd.size()); ++i) {
            dims[i] = bd[i];
        }
        return UNOT_OK;
    });
}

unot_status unot_chain_verify(const unot_chain *chain, const char *reference_json, char **certificate) {
    return guarded([&] {
        need(chain, "chain");
        need(reference_json, "reference_json");
        auto ref = unot::state_from_json(unot::parse_text(reference_json));
        auto cert = unot::verify_chain(chain->chain, ref.amplitudes);
        if (certificate != nullptr) {
            emit(unot::certificate_to_json(cert), certificate);
        }
        if (!cert.passed) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "chain verification failed: max isometry residual %.6g, overlap %.17g",
                          cert.max_residual, cert.overlap);
            return fail(UNOT_ERR_VALIDATION, buf);
        }
        return UNOT_OK;
    });
}

void unot_chain_free(unot_chain *chain) { delete chain; }

}  // extern "C"
