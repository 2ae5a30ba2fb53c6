// Copyright 2026 The floqscram Authors
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

#include "commands.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "floqscram/diagnostics.h"
#include "floqscram/floquet.h"
#include "floqscram/hp_recovery.h"

namespace floqscram::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string join(const std::vector<std::size_t>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::size_t to_size(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        throw ConfigError("expected a non-negative integer, got '" + s + "'");
    }
    return std::stoull(s);
}

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }
std::string opt_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

class Emitter {
   public:
    explicit Emitter(const RunConfig& cfg) : cfg_(cfg) {
        meta("tool", "floqscram");
        meta("command", cfg.command);
        meta("layout", layout_name(cfg.layout));
        meta("N", std::to_string(cfg.side));
        meta("rule", std::to_string(static_cast<int>(cfg.rule)));
        meta("gate", cfg.gate);
        meta("seed", std::to_string(cfg.seed));
        json_["N"] = cfg.side;
        json_["rule"] = static_cast<int>(cfg.rule);
        json_["layout"] = layout_name(cfg.layout);
        json_["gate"] = cfg.gate;
        json_["command"] = cfg.command;
        json_["seed"] = cfg.seed;
    }

    void meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }
    Json& json() { return json_; }
    void header(const std::string& h) { header_ = h; }
    void row(const std::string& r) { rows_.push_back(r); }
    void fail() { passed_ = false; }
    bool passed() const { return passed_; }

    std::string str() const {
        if (cfg_.format == Format::Json) return json_.dump(2) + "\n";
        std::string out;
        for (const auto& [k, v] : meta_) out += "# " + k + "=" + v + "\n";
        out += header_ + "\n";
        for (const auto& r : rows_) out += r + "\n";
        return out;
    }

   private:
    const RunConfig& cfg_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::string header_;
    std::vector<std::string> rows_;
    Json json_;
    bool passed_ = true;
};

GateSpec gate_of(const RunConfig& cfg) {
    try {
        return resolve_gate(cfg.gate);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad gate: ") + e.what());
    }
}

FloquetCircuit circuit_of(const RunConfig& cfg) {
    GateSpec gate = gate_of(cfg);
    try {
        return make_circuit(cfg.layout, cfg.rule, cfg.side, gate);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::size_t default_threshold(const RunConfig& cfg, std::size_t side) {
    return cfg.threshold ? cfg.threshold : side * side / 2;
}

PauliKind pauli_kind(const std::string& s) {
    if (s == "X" || s == "x") return PauliKind::X;
    if (s == "Y" || s == "y") return PauliKind::Y;
    if (s == "Z" || s == "z") return PauliKind::Z;
    throw ConfigError("pauli must be X, Y or Z");
}

std::vector<std::size_t> sizes_or(const RunConfig& cfg, std::vector<std::size_t> fallback, std::size_t n) {
    std::vector<std::size_t> out = cfg.rlist.empty() ? std::move(fallback) : parse_index_list(cfg.rlist);
    for (std::size_t r : out) {
        if (r < 1 || r > n) throw ConfigError("size " + std::to_string(r) + " outside [1, " + std::to_string(n) + "]");
    }
    if (out.empty()) throw ConfigError("empty size list");
    return out;
}

std::string cmd_partition(const RunConfig& cfg, Emitter& em) {
    Partition p = [&] {
        try {
            return make_partition(cfg.layout, cfg.rule, cfg.side);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }();
    bool ok = validate(p);
    em.meta("subsets", std::to_string(p.subsets.size()));
    em.meta("valid", ok ? "true" : "false");
    em.header("subset,q1,q2,q3,q4,labels");
    Json subsets = Json::array();
    for (std::size_t k = 0; k < p.subsets.size(); ++k) {
        const Subset& s = p.subsets[k];
        std::vector<std::size_t> idx(s.begin(), s.end());
        std::string labels;
        Json labs = Json::array();
        for (std::size_t q : s) {
            std::string l = format_label(p.layout.label(q));
            labels += (labels.empty() ? "" : " ") + l;
            labs.push_back(l);
        }
        em.row(std::to_string(k) + "," + join(idx) + ",\"" + labels + "\"");
        subsets.push_back(Json{{"qubits", idx}, {"labels", labs}});
    }
    em.json()["valid"] = ok;
    em.json()["subsets"] = subsets;
    if (!ok) throw InvariantError("partition failed validation");
    return em.str();
}

std::string cmd_infect(const RunConfig& cfg, Emitter& em) {
    FloquetCircuit c = circuit_of(cfg);
    std::size_t n = c.num_qubits();
    std::vector<std::size_t> refs = resolve_refs(cfg.refs, n, cfg.seed);
    std::size_t t_max = cfg.t_max ? cfg.t_max : 20;
    auto comps = components(c.partition(), c.destinations());
    std::vector<std::size_t> comp_size(n);
    for (const auto& comp : comps) {
        for (std::size_t q : comp) comp_size[q] = comp.size();
    }
    em.meta("refs", join(refs));
    em.meta("t_max", std::to_string(t_max));
    em.header("ref,t,infected");
    Json series = Json::array();
    for (std::size_t ref : refs) {
        InfectionTrace tr = infection_closure(c.partition(), c.destinations(), {ref}, t_max);
        std::optional<std::size_t> full;
        for (std::size_t t = 0; t < tr.sizes.size(); ++t) {
            if (tr.sizes[t] > (std::size_t{1} << std::min<std::size_t>(2 * t, 62))) {
                throw InvariantError("infection exceeds 4^t");
            }
            if (!full && tr.sizes[t] == comp_size[ref]) full = t;
            em.row(std::to_string(ref) + "," + std::to_string(t) + "," + std::to_string(tr.sizes[t]));
        }
        series.push_back(Json{{"ref", ref}, {"sizes", tr.sizes}, {"component_size", comp_size[ref]},
                              {"saturated_at", opt_json(full)}});
    }
    em.json()["t_max"] = t_max;
    em.json()["series"] = series;
    return em.str();
}

std::string cmd_opsize(const RunConfig& cfg, Emitter& em) {
    FloquetCircuit c = circuit_of(cfg);
    std::size_t n = c.num_qubits();
    std::vector<std::size_t> refs = resolve_refs(cfg.refs, n, cfg.seed);
    std::size_t t_max = cfg.t_max ? cfg.t_max : 40;
    std::size_t threshold = default_threshold(cfg, cfg.side);
    PauliKind kind = pauli_kind(cfg.pauli);
    em.meta("refs", join(refs));
    em.meta("pauli", cfg.pauli);
    em.meta("t_max", std::to_string(t_max));
    em.meta("threshold", std::to_string(threshold));
    em.header("ref,t,size");
    Json series = Json::array();
    for (std::size_t ref : refs) {
        SizeSeries s = opsize_series(c, PauliVec::single(n, ref, kind), t_max);
        for (std::size_t t = 0; t < s.sizes.size(); ++t) {
            em.row(std::to_string(ref) + "," + std::to_string(t) + "," + std::to_string(s.sizes[t]));
        }
        series.push_back(Json{{"ref", ref}, {"sizes", s.sizes},
                              {"scrambling_time", opt_json(scrambling_time(s.sizes, threshold))}});
    }
    em.json()["pauli"] = cfg.pauli;
    em.json()["t_max"] = t_max;
    em.json()["threshold"] = threshold;
    em.json()["series"] = series;
    return em.str();
}

std::string cmd_entropy(const RunConfig& cfg, Emitter& em) {
    FloquetCircuit c = circuit_of(cfg);
    std::size_t n = c.num_qubits();
    std::vector<std::size_t> refs = resolve_refs(cfg.refs, n, cfg.seed);
    std::size_t t_max = cfg.t_max ? cfg.t_max : 40;
    std::vector<std::size_t> fallback;
    for (std::size_t a = 1; a <= n / 2; a *= 2) fallback.push_back(a);
    std::vector<std::size_t> sizes = sizes_or(cfg, fallback, n);
    em.meta("refs", join(refs));
    em.meta("sizes", join(sizes));
    em.meta("t_max", std::to_string(t_max));
    em.header("ref,size,t,entropy");
    Json regions = Json::array();
    for (std::size_t ref : refs) {
        for (std::size_t a : sizes) {
            RegionA region = build_region(c, ref, a);
            std::vector<std::size_t> series = entropy_series(c, region.qubits, t_max);
            for (std::size_t t = 0; t < series.size(); ++t) {
                if (series[t] > a) throw InvariantError("entropy exceeds region size");
                em.row(std::to_string(ref) + "," + std::to_string(a) + "," + std::to_string(t) + "," +
                       std::to_string(series[t]));
            }
            regions.push_back(Json{{"ref", ref},
                                   {"size", a},
                                   {"t_f", region.t_f},
                                   {"horizon", region.horizon},
                                   {"saturation_time", opt_json(saturation_time(series))},
                                   {"qubits", region.qubits},
                                   {"series", series}});
        }
    }
    em.json()["t_max"] = t_max;
    em.json()["regions"] = regions;
    return em.str();
}

RecoveryTable hp_table(const RunConfig& cfg, const FloquetCircuit& c, Emitter& em) {
    std::size_t n = c.num_qubits();
    std::vector<std::size_t> refs = resolve_refs(cfg.refs, n, cfg.seed);
    std::size_t t_max = cfg.t_max ? cfg.t_max : 10;
    if (cfg.t_min > t_max) throw ConfigError("t_min exceeds t_max");
    std::vector<std::size_t> fallback;
    for (std::size_t r = 1; r <= n / 2; ++r) fallback.push_back(r);
    std::vector<std::size_t> rs = sizes_or(cfg, fallback, n);
    em.meta("refs", join(refs));
    em.meta("rlist", join(rs));
    em.meta("t_min", std::to_string(cfg.t_min));
    em.meta("t_max", std::to_string(t_max));
    em.meta("boundary", std::to_string(recovery_boundary(n)));
    return recovery_scan(c, refs, rs, cfg.t_min, t_max);
}

std::string cmd_hp(const RunConfig& cfg, Emitter& em) {
    FloquetCircuit c = circuit_of(cfg);
    RecoveryTable table = hp_table(cfg, c, em);
    em.header("ref,r,t,recovered");
    Json entries = Json::array();
    for (const RecoveryEntry& e : table.entries) {
        em.row(std::to_string(e.reference) + "," + std::to_string(e.r) + "," + std::to_string(e.t) + "," +
               (e.recovered ? "1" : "0"));
        entries.push_back(Json{{"ref", e.reference}, {"r", e.r}, {"t", e.t}, {"recovered", e.recovered}});
    }
    em.json()["entries"] = entries;
    return em.str();
}

std::string cmd_scan_nonmono(const RunConfig& cfg, Emitter& em) {
    FloquetCircuit c = circuit_of(cfg);
    RecoveryTable table = hp_table(cfg, c, em);
    std::size_t boundary = recovery_boundary(c.num_qubits());
    MonotonicityReport report = nonmonotonicity_scan(table, boundary);
    em.meta("general_recovery_time", opt_text(report.general_recovery_time));
    em.header("ref,r,nonmonotone");
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        em.row(std::to_string(row.reference) + "," + std::to_string(row.r) + "," + (row.nonmonotone ? "1" : "0"));
        rows.push_back(Json{{"ref", row.reference}, {"r", row.r}, {"nonmonotone", row.nonmonotone}});
    }
    em.json()["boundary"] = boundary;
    em.json()["general_recovery_time"] = opt_json(report.general_recovery_time);
    em.json()["rows"] = rows;
    return em.str();
}

std::string cmd_lyapunov(const RunConfig& cfg, Emitter& em) {
    GateSpec gate = gate_of(cfg);
    std::vector<std::size_t> sides = parse_index_list(cfg.sides);
    std::size_t t_max = cfg.t_max ? cfg.t_max : 200;
    std::vector<FitPoint> points;
    std::vector<ScramblingStats> stats;
    for (std::size_t side : sides) {
        FloquetCircuit c = [&] {
            try {
                return make_circuit(cfg.layout, cfg.rule, side, gate);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }();
        ScramblingStats s = mean_scrambling_time(c, default_threshold(cfg, side), t_max);
        if (s.reached == 0) throw InvariantError("no operator reached the threshold at N=" + std::to_string(side));
        points.push_back({side, s.mean});
        stats.push_back(s);
    }
    LyapunovFit fit;
    try {
        fit = lyapunov_fit(points);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    em.meta("sides", join(sides));
    em.meta("t_max", std::to_string(t_max));
    em.meta("lambda", fmt_double(fit.lambda));
    em.meta("lambda_stderr", fmt_double(fit.lambda_stderr));
    em.header("side,mean_time,stderr,reached,total");
    Json pts = Json::array();
    for (std::size_t k = 0; k < sides.size(); ++k) {
        const ScramblingStats& s = stats[k];
        em.row(std::to_string(sides[k]) + "," + fmt_double(s.mean) + "," + fmt_double(s.stderr_mean) + "," +
               std::to_string(s.reached) + "," + std::to_string(s.total));
        pts.push_back(Json{{"side", sides[k]}, {"mean_time", s.mean}, {"stderr", s.stderr_mean},
                           {"reached", s.reached}, {"total", s.total}});
    }
    em.json()["t_max"] = t_max;
    em.json()["points"] = pts;
    em.json()["fit"] = Json{{"lambda", fit.lambda},       {"lambda_stderr", fit.lambda_stderr},
                            {"slope", fit.slope},         {"slope_stderr", fit.slope_stderr},
                            {"intercept", fit.intercept}};
    return em.str();
}

std::string cmd_validate(const RunConfig& cfg, Emitter& em) {
    FloquetCircuit c = circuit_of(cfg);
    std::size_t n = c.num_qubits();
    std::vector<std::pair<std::string, bool>> checks;
    checks.emplace_back("gate_symplectic", is_symplectic(c.gate()));
    checks.emplace_back("partition_valid", validate(c.partition()));
    checks.emplace_back("step_symplectic", is_symplectic(c.step_map()));
    checks.emplace_back("step_inverse", compose(c.step_map().inverse(), c.step_map()) == CliffordMap::identity(n));

    std::mt19937_64 rng(cfg.seed);
    bool paths_agree = true;
    for (int trial = 0; trial < 16 && paths_agree; ++trial) {
        BitVec v(2 * n);
        for (std::size_t b = 0; b < 2 * n; ++b) v.set(b, rng() & 1U);
        BitVec s = v;
        BitVec d = v;
        for (int t = 0; t < 4; ++t) {
            s = c.step(s, EvolutionPath::Structured);
            d = c.step(d, EvolutionPath::Dense);
        }
        paths_agree = s == d;
    }
    checks.emplace_back("structured_matches_dense", paths_agree);

    bool bound = true;
    std::vector<std::size_t> refs = resolve_refs(cfg.refs, n, cfg.seed);
    for (std::size_t ref : refs) {
        InfectionTrace tr = infection_closure(c.partition(), c.destinations(), {ref}, 12);
        SizeSeries s = opsize_series(c, PauliVec::single(n, ref, PauliKind::X), 12);
        for (std::size_t t = 0; t < tr.sizes.size(); ++t) {
            if (tr.sizes[t] > (std::size_t{1} << (2 * t))) bound = false;
        }
        for (std::size_t t = 0; t < s.sizes.size(); ++t) {
            std::size_t cap = t < tr.sizes.size() ? tr.sizes[t] : tr.sizes.back();
            if (s.sizes[t] > cap) bound = false;
        }
    }
    checks.emplace_back("infection_bounds_size", bound);

    em.header("check,passed");
    Json out = Json::array();
    bool all = true;
    for (const auto& [name, ok] : checks) {
        em.row(name + "," + (ok ? "1" : "0"));
        out.push_back(Json{{"check", name}, {"passed", ok}});
        all = all && ok;
    }
    em.json()["checks"] = out;
    em.json()["passed"] = all;
    if (!all) em.fail();
    return em.str();
}

}  // namespace

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }),
                  tok.end());
        if (tok.empty()) continue;
        auto dash = tok.find('-');
        if (dash == std::string::npos) {
            out.push_back(to_size(tok));
            continue;
        }
        std::size_t lo = to_size(tok.substr(0, dash));
        std::size_t hi = to_size(tok.substr(dash + 1));
        if (lo > hi) throw ConfigError("empty range '" + tok + "'");
        for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> draw_distinct(std::size_t count, std::size_t num_qubits, std::uint64_t seed) {
    if (count > num_qubits) throw ConfigError("cannot draw more references than qubits");
    std::vector<std::size_t> pool(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) pool[q] = q;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (num_qubits - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

std::vector<std::size_t> resolve_refs(const std::string& text, std::size_t num_qubits, std::uint64_t seed) {
    std::vector<std::size_t> refs;
    if (text == "all") {
        for (std::size_t q = 0; q < num_qubits; ++q) refs.push_back(q);
    } else if (text.rfind("random:", 0) == 0) {
        refs = draw_distinct(to_size(text.substr(7)), num_qubits, seed);
    } else {
        refs = parse_index_list(text);
    }
    if (refs.empty()) throw ConfigError("no reference qubits");
    for (std::size_t q : refs) {
        if (q >= num_qubits) throw ConfigError("reference qubit " + std::to_string(q) + " out of range");
    }
    return refs;
}

Rendered render(const RunConfig& config) {
    static const std::map<std::string, std::string (*)(const RunConfig&, Emitter&)> table = {
        {"partition", cmd_partition}, {"infect", cmd_infect},       {"opsize", cmd_opsize},
        {"entropy", cmd_entropy},     {"hp", cmd_hp},               {"scan-nonmono", cmd_scan_nonmono},
        {"lyapunov", cmd_lyapunov},   {"validate", cmd_validate},
    };
    auto it = table.find(config.command);
    if (it == table.end()) throw ConfigError("unknown command '" + config.command + "'");
    Emitter em(config);
    std::string text = it->second(config, em);
    return {std::move(text), em.passed()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Floquet Clifford scrambling experiments", "floqscram"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string layout = "single";
    std::string rule = "1";
    std::string format = "csv";

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"partition", "print the 4-qubit gate subsets"},
        {"infect", "large-q infection counts"},
        {"opsize", "operator size of evolved single-qubit Paulis"},
        {"entropy", "stabilizer entanglement entropy of grown regions"},
        {"hp", "erasure recovery table"},
        {"scan-nonmono", "non-monotone recovery and general recovery time"},
        {"lyapunov", "mean scrambling time across sides and the fitted exponent"},
        {"validate", "structural self-checks"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--layout", layout, "single or double");
        sub->add_option("-N,--side", cfg.side, "lattice side length");
        sub->add_option("--rule", rule, "partition rule (1 or 2)");
        sub->add_option("--gate", cfg.gate, "W, W_new or an inline gate list");
        sub->add_option("--tmin", cfg.t_min, "first time step (hp, scan-nonmono)");
        sub->add_option("--tmax", cfg.t_max, "last time step");
        sub->add_option("--threshold", cfg.threshold, "scrambling size threshold (default N^2/2)");
        sub->add_option("--refs", cfg.refs, "reference qubits: list, all or random:K");
        sub->add_option("--rlist", cfg.rlist, "region or erasure sizes, e.g. 1-21");
        sub->add_option("--sides", cfg.sides, "lattice sides for lyapunov");
        sub->add_option("--pauli", cfg.pauli, "initial single-qubit Pauli for opsize");
        sub->add_option("--seed", cfg.seed, "seed for random:K references");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--format", format, "csv or json");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        try {
            cfg.layout = parse_layout_kind(layout);
            cfg.rule = parse_rule(rule);
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
        if (format == "csv") {
            cfg.format = Format::Csv;
        } else if (format == "json") {
            cfg.format = Format::Json;
        } else {
            throw ConfigError("format must be csv or json");
        }
        Rendered result = render(cfg);
        if (cfg.out.empty()) {
            out << result.text;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f || !(f << result.text) || !f.flush()) throw ConfigError("cannot write " + cfg.out);
        }
        return result.passed ? kExitOk : kExitInvariant;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

}  // namespace floqscram::cli
