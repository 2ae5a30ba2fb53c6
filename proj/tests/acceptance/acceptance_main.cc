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

// Acceptance suite: one PASS/FAIL line per headline criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "dense_oracle.h"
#include "floqscram/connectivity.h"
#include "floqscram/diagnostics.h"
#include "floqscram/floquet.h"
#include "floqscram/hp_recovery.h"
#include "floqscram/lattice.h"

namespace fs = floqscram;

namespace {

constexpr double kGateRuntimeLimitSeconds = 1.0;
constexpr double kPlateauRelTolerance = 0.10;
constexpr double kLambdaLow = 0.85;
constexpr double kLambdaHigh = 1.2;
constexpr double kControlTolerance = 1e-9;
constexpr double kOracleTolerance = 1e-9;
constexpr std::size_t kLyapunovTMax = 200;
constexpr std::size_t kEntropyTMax = 60;
constexpr std::size_t kOracleTMax = 20;
constexpr std::size_t kHpTime = 10;
constexpr std::size_t kReferenceCount = 5;
constexpr std::uint64_t kReferenceSeed = fs::cli::kDefaultSeed;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t failures = 0;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        if (failures < 4) detail += (detail.empty() ? "" : "; ") + what;
        ++failures;
        pass = false;
    }
};

int g_failed = 0;

void report(int id, const char* title, const Outcome& o, const std::string& summary) {
    std::printf("%s [%d] %s: %s", o.pass ? "PASS" : "FAIL", id, title, summary.c_str());
    if (!o.pass) {
        std::printf(" | %zu failing checks, e.g. %s", o.failures, o.detail.c_str());
        ++g_failed;
    }
    std::printf("\n");
    std::fflush(stdout);
}

fs::FloquetCircuit circuit(fs::LayoutKind kind, fs::Rule rule, std::size_t side, const char* gate) {
    return fs::make_circuit(kind, rule, side, fs::resolve_gate(gate));
}

std::string label(fs::LayoutKind kind, fs::Rule rule, std::size_t side) {
    return fs::layout_name(kind) + "/rule" + std::to_string(static_cast<int>(rule)) + "/N=" + std::to_string(side);
}

bool rule_allows(fs::Rule rule, std::size_t side) {
    return rule == fs::Rule::One ? side % 4 == 0 : side % 2 == 0;
}

double log4(double x) { return std::log(x) / std::log(4.0); }

std::size_t ceil_log4(std::size_t x) {
    std::size_t k = 0;
    while ((std::size_t{1} << (2 * k)) < x) ++k;
    return k;
}

fs::PauliVec pauli_from_code(std::size_t code, std::size_t k) {
    fs::PauliVec p(k);
    for (std::size_t b = 0; b < 2 * k; ++b) {
        if ((code >> b) & 1U) p.bits().set(b);
    }
    return p;
}

std::vector<std::size_t> component_of(const fs::FloquetCircuit& c, std::size_t q) {
    for (auto& comp : fs::components(c.partition(), c.destinations())) {
        if (std::find(comp.begin(), comp.end(), q) != comp.end()) return comp;
    }
    return {};
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    fs::CliffordMap w = fs::compile(fs::resolve_gate("W"), 4);
    o.check(w.apply(fs::PauliVec::parse("XIII")).format() == "ZIIZ", "W XIII");
    o.check(w.apply(fs::PauliVec::parse("ZZZZ")).format() == "YYII", "W ZZZZ");
    std::size_t compared = 0;
    for (const char* g : {"W", "W_new"}) {
        fs::GateSpec spec = fs::resolve_gate(g);
        fs::CliffordMap m = fs::compile(spec, 4);
        for (std::size_t code = 0; code < 256; ++code) {
            fs::PauliVec p = pauli_from_code(code, 4);
            o.check(fs::oracle::dense_conjugate(spec, p) == m.apply(p), std::string(g) + " on " + p.format());
            ++compared;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(secs < kGateRuntimeLimitSeconds, "runtime " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << "worked examples exact, " << compared << " dense/tableau comparisons, " << secs << " s";
    report(1, "gate fidelity", o, s.str());
}

void symplectic_suite(int id, const char* gate) {
    Outcome o;
    std::size_t maps = 0;
    for (fs::GateName g : {fs::GateName::H, fs::GateName::S, fs::GateName::CNOT}) {
        std::vector<std::size_t> slots = g == fs::GateName::CNOT ? std::vector<std::size_t>{0, 1}
                                                                 : std::vector<std::size_t>{0};
        o.check(fs::is_symplectic(fs::elementary(g, slots)), "elementary gate");
        ++maps;
    }
    o.check(fs::is_symplectic(fs::compile(fs::resolve_gate(gate), 4)), "compiled gate");
    ++maps;
    for (std::size_t side : {2, 4, 6, 8, 12, 16}) {
        for (fs::LayoutKind kind : {fs::LayoutKind::Single, fs::LayoutKind::Double}) {
            o.check(fs::is_symplectic(fs::build_perm_map(fs::LayerLayout(kind, side))), "perm " + std::to_string(side));
            ++maps;
            for (fs::Rule rule : {fs::Rule::One, fs::Rule::Two}) {
                if (!rule_allows(rule, side)) continue;
                o.check(fs::is_symplectic(circuit(kind, rule, side, gate).step_map()), "step " + label(kind, rule, side));
                ++maps;
            }
        }
    }
    report(id, (std::string("symplectic suite, gate ") + gate).c_str(), o,
           std::to_string(maps) + " maps satisfy m^T Omega m = Omega");
}

void criterion3() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t side : {4, 8, 12, 16, 20}) {
        for (fs::Rule rule : {fs::Rule::One, fs::Rule::Two}) {
            fs::Partition single = fs::single_layer(rule, side);
            fs::Partition twin = fs::double_layer(rule, side);
            o.check(fs::validate(single) && single.subsets.size() == side * side / 4,
                    "single " + label(fs::LayoutKind::Single, rule, side));
            o.check(fs::validate(twin) && twin.subsets.size() == side * side / 2,
                    "double " + label(fs::LayoutKind::Double, rule, side));
            checked += 2;
        }
    }
    report(3, "partition suite", o, std::to_string(checked) + " partitions valid with N^2/4 and N^2/2 subsets");
}

void criterion4() {
    Outcome o;
    std::size_t traces = 0;
    std::size_t unscrambled = 0;
    for (std::size_t side : {4, 8, 12, 16}) {
        for (fs::LayoutKind kind : {fs::LayoutKind::Single, fs::LayoutKind::Double}) {
            for (fs::Rule rule : {fs::Rule::One, fs::Rule::Two}) {
                if (!rule_allows(rule, side)) continue;
                fs::Partition p = fs::make_partition(kind, rule, side);
                auto dest = fs::shuffle_destinations(p.layout);
                std::size_t n = p.layout.num_qubits();
                std::size_t threshold = side * side / 2;
                for (std::size_t seed = 0; seed < n; ++seed) {
                    fs::InfectionTrace tr = fs::infection_closure(p, dest, {seed}, 64);
                    ++traces;
                    for (std::size_t t = 0; t < tr.sizes.size() && t < 32; ++t) {
                        o.check(tr.sizes[t] <= (std::size_t{1} << (2 * t)), "n(t) > 4^t " + label(kind, rule, side));
                    }
                    auto ts = fs::scrambling_time(tr.sizes, threshold);
                    if (!ts) {
                        ++unscrambled;
                        continue;
                    }
                    o.check(*ts >= ceil_log4(side * side), "t_s below ceil(log4 N^2) " + label(kind, rule, side));
                    if (kind == fs::LayoutKind::Single && rule == fs::Rule::Two && (side == 4 || side == 8 || side == 16)) {
                        auto full = fs::scrambling_time(tr.sizes, side * side);
                        o.check(full && *full == ceil_log4(side * side),
                                "rule 2 full infection at N=" + std::to_string(side) + " seed " + std::to_string(seed));
                    }
                }
            }
        }
    }
    report(4, "infection bound and saturation", o,
           std::to_string(traces) + " seeded closures; single-layer rule 2 fully infects at log4 N^2 for N in {4,8,16}; " +
               std::to_string(unscrambled) + " seeds never reach N^2/2 (trapped in small classes)");
}

void plateau_suite(int id, const char* gate) {
    struct Case {
        fs::LayoutKind kind;
        fs::Rule rule;
        std::size_t side;
        double expected;
    };
    const std::vector<Case> cases = {
        {fs::LayoutKind::Single, fs::Rule::One, 8, 48.0},   {fs::LayoutKind::Single, fs::Rule::Two, 8, 48.0},
        {fs::LayoutKind::Double, fs::Rule::Two, 8, 48.0},   {fs::LayoutKind::Double, fs::Rule::One, 12, 216.0},
        {fs::LayoutKind::Double, fs::Rule::Two, 12, 216.0},
    };
    Outcome o;
    std::ostringstream s;
    for (const Case& k : cases) {
        fs::FloquetCircuit c = circuit(k.kind, k.rule, k.side, gate);
        double mean = fs::late_time_mean_size(c, fs::late_time_window(c.num_qubits()));
        std::ostringstream tag;
        tag << label(k.kind, k.rule, k.side) << "=" << mean;
        s << tag.str() << " ";
        o.check(std::abs(mean - k.expected) <= kPlateauRelTolerance * k.expected,
                tag.str() + " vs " + std::to_string(k.expected));
    }
    report(id, (std::string("operator-size plateau, gate ") + gate).c_str(), o, s.str() + "(tolerance 10%)");
}

void criterion6() {
    Outcome o;
    std::ostringstream s;
    const std::vector<std::size_t> sides = {8, 12, 16, 20, 24, 28, 32};
    for (fs::Rule rule : {fs::Rule::One, fs::Rule::Two}) {
        std::vector<fs::FitPoint> pts;
        for (std::size_t side : sides) {
            fs::FloquetCircuit c = circuit(fs::LayoutKind::Single, rule, side, "W");
            fs::ScramblingStats st = fs::mean_scrambling_time(c, side * side / 2, kLyapunovTMax);
            o.check(st.reached == st.total, "not all operators scrambled at N=" + std::to_string(side));
            pts.push_back({side, st.mean});
        }
        fs::LyapunovFit fit = fs::lyapunov_fit(pts);
        s << "rule " << static_cast<int>(rule) << " lambda=" << fit.lambda << "+-" << fit.lambda_stderr << "; ";
        o.check(fit.lambda >= kLambdaLow && fit.lambda <= kLambdaHigh, "lambda out of range");
    }
    std::vector<fs::FitPoint> control;
    for (std::size_t side : sides) control.push_back({side, log4(static_cast<double>(side * side) / 2.0)});
    fs::LyapunovFit ctl = fs::lyapunov_fit(control);
    o.check(std::abs(ctl.lambda - std::log(4.0)) < kControlTolerance, "control fit");
    s << "control lambda=" << ctl.lambda;
    report(6, "Lyapunov exponent", o, s.str());
}

void entropy_suite(int id, const char* gate) {
    Outcome zero;
    Outcome horizon;
    Outcome plateau;
    Outcome bound;
    Outcome dense;
    std::size_t regions = 0;
    for (std::size_t side : {8, 12}) {
        for (fs::LayoutKind kind : {fs::LayoutKind::Single, fs::LayoutKind::Double}) {
            for (fs::Rule rule : {fs::Rule::One, fs::Rule::Two}) {
                fs::FloquetCircuit c = circuit(kind, rule, side, gate);
                std::vector<std::size_t> refs =
                    fs::cli::draw_distinct(kReferenceCount, c.num_qubits(), kReferenceSeed);
                for (std::size_t ref : refs) {
                    std::size_t half = component_of(c, ref).size() / 2;
                    std::vector<std::size_t> sizes;
                    for (std::size_t a = 1; a < half; a *= 2) sizes.push_back(a);
                    sizes.push_back(half);
                    for (std::size_t a : sizes) {
                        fs::RegionA region = fs::build_region(c, ref, a);
                        std::vector<std::size_t> series = fs::entropy_series(c, region.qubits, kEntropyTMax);
                        ++regions;
                        std::string tag = label(kind, rule, side) + " ref " + std::to_string(ref) + " |A|=" +
                                          std::to_string(a);
                        zero.check(series[0] == 0, tag);
                        for (std::size_t t = 0; t <= region.horizon && t < series.size(); ++t) {
                            horizon.check(series[t] + 1 <= a, tag + " t=" + std::to_string(t));
                        }
                        auto sat = fs::saturation_time(series);
                        plateau.check(sat.has_value() && series.back() == a,
                                      tag + " final S_A=" + std::to_string(series.back()));
                        if (sat) {
                            bound.check(static_cast<double>(*sat) >= log4(static_cast<double>(a)),
                                        tag + " saturates at " + std::to_string(*sat));
                        }
                    }
                }
            }
        }
    }
    fs::FloquetCircuit tiny = circuit(fs::LayoutKind::Single, fs::Rule::Two, 2, gate);
    for (std::size_t t = 0; t <= kOracleTMax; ++t) {
        fs::oracle::StateVector psi = fs::oracle::dense_evolve(tiny, t);
        for (std::size_t mask = 1; mask < 15; ++mask) {
            std::vector<std::size_t> a;
            for (std::size_t q = 0; q < 4; ++q) {
                if ((mask >> q) & 1U) a.push_back(q);
            }
            double d = fs::oracle::von_neumann_bits(psi, 4, a);
            dense.check(std::abs(d - static_cast<double>(fs::entropy(tiny, a, t))) < kOracleTolerance,
                        "t=" + std::to_string(t) + " mask " + std::to_string(mask));
        }
    }
    Outcome all;
    for (const Outcome* part : {&zero, &horizon, &plateau, &bound, &dense}) {
        if (!part->pass) {
            all.pass = false;
            all.failures += part->failures;
            all.detail += (all.detail.empty() ? "" : "; ") + part->detail;
        }
    }
    std::ostringstream s;
    s << regions << " regions: S_A(0)=0 " << (zero.pass ? "ok" : "FAIL") << ", S_A<=|A|-1 to horizon "
      << (horizon.pass ? "ok" : "FAIL") << ", plateau S_A=|A| " << (plateau.pass ? "ok" : "FAIL") << " ("
      << plateau.failures << " misses), saturation>=log4|A| " << (bound.pass ? "ok" : "FAIL")
      << ", dense oracle on N=2 " << (dense.pass ? "ok" : "FAIL");
    report(id, (std::string("entanglement entropy, gate ") + gate).c_str(), all, s.str());
}

void criterion8() {
    Outcome lower;
    Outcome upper;
    Outcome grt;
    std::ostringstream s;

    struct Case {
        fs::LayoutKind kind;
        fs::Rule rule;
        std::size_t side;
    };
    for (const Case& k : {Case{fs::LayoutKind::Single, fs::Rule::One, 8}, Case{fs::LayoutKind::Single, fs::Rule::Two, 8},
                          Case{fs::LayoutKind::Double, fs::Rule::One, 12},
                          Case{fs::LayoutKind::Double, fs::Rule::Two, 12}}) {
        fs::FloquetCircuit c = circuit(k.kind, k.rule, k.side, "W");
        std::size_t n = c.num_qubits();
        std::size_t boundary = fs::recovery_boundary(n);
        std::vector<std::size_t> refs = fs::cli::draw_distinct(kReferenceCount, n, kReferenceSeed);
        std::vector<std::size_t> rs;
        for (std::size_t r = 1; r <= n / 2; ++r) rs.push_back(r);
        fs::RecoveryTable table = fs::recovery_scan(c, refs, rs, kHpTime, kHpTime);
        std::size_t lower_miss = 0;
        for (std::size_t i = 0; i < refs.size(); ++i) {
            for (std::size_t j = 0; j < rs.size(); ++j) {
                std::size_t r = rs[j];
                bool ok = table.at(i, j, kHpTime);
                std::string tag = label(k.kind, k.rule, k.side) + " ref " + std::to_string(refs[i]) + " r=" +
                                  std::to_string(r);
                if (r <= boundary) {
                    lower.check(ok, tag + " not recovered");
                    if (!ok) ++lower_miss;
                }
                if (2 * r > n - r) upper.check(!ok, tag + " recovered past rank bound");
            }
        }
        s << label(k.kind, k.rule, k.side) << " boundary " << boundary << " misses " << lower_miss << "; ";

        if (k.kind == fs::LayoutKind::Single) {
            std::vector<std::size_t> below;
            for (std::size_t r = 1; r <= boundary; ++r) below.push_back(r);
            fs::RecoveryTable scan = fs::recovery_scan(c, refs, below, 1, kHpTime);
            fs::MonotonicityReport rep = fs::nonmonotonicity_scan(scan, boundary);
            std::optional<std::size_t> sat_max;
            for (std::size_t ref : refs) {
                for (std::size_t r : below) {
                    fs::RegionA region = fs::build_region(c, ref, r);
                    auto sat = fs::saturation_time(fs::entropy_series(c, region.qubits, kEntropyTMax));
                    if (sat) sat_max = std::max(sat_max.value_or(0), *sat);
                }
            }
            std::string grt_text = rep.general_recovery_time ? std::to_string(*rep.general_recovery_time) : "none";
            std::string sat_text = sat_max ? std::to_string(*sat_max) : "none";
            s << "general recovery " << grt_text << " vs entropy saturation " << sat_text << "; ";
            grt.check(rep.general_recovery_time.has_value() && sat_max.has_value() &&
                          *rep.general_recovery_time >= *sat_max,
                      label(k.kind, k.rule, k.side) + " general recovery " + grt_text + " vs saturation " + sat_text);
        }
    }
    Outcome all;
    for (const Outcome* part : {&lower, &upper, &grt}) {
        if (!part->pass) {
            all.pass = false;
            all.failures += part->failures;
            all.detail += (all.detail.empty() ? "" : "; ") + part->detail;
        }
    }
    s << "true below boundary " << (lower.pass ? "ok" : "FAIL") << ", false past rank bound "
      << (upper.pass ? "ok" : "FAIL") << ", recovery after saturation " << (grt.pass ? "ok" : "FAIL");
    report(8, "Hayden-Preskill recovery boundary", all, s.str());
}

void criterion9() {
    Outcome o;
    for (std::size_t side : {4, 8, 16}) {
        fs::Partition p = fs::double_layer(fs::Rule::Two, side);
        auto comps = fs::components(p, fs::shuffle_destinations(p.layout));
        o.check(comps.size() == 2 && comps[0].size() == comps[1].size(), "N=" + std::to_string(side));
    }
    for (std::size_t side : {6, 12}) {
        fs::Partition p = fs::double_layer(fs::Rule::Two, side);
        o.check(fs::components(p, fs::shuffle_destinations(p.layout)).size() == 1, "N=" + std::to_string(side));
    }
    for (std::size_t side : {2, 4, 8, 16, 32}) o.check(fs::bit_rotation_check(side), "rotation " + std::to_string(side));
    report(9, "decoupling and bit rotation", o,
           "two equal classes for N in {4,8,16}, one class for N in {6,12}, rotation identity for N up to 32");
}

void criterion11() {
    Outcome o;
    const std::vector<std::vector<std::string>> runs = {
        {"hp", "-N", "8", "--rule", "2", "--refs", "random:5", "--rlist", "18-24", "--format", "json"},
        {"entropy", "--layout", "double", "-N", "4", "--refs", "random:3", "--rlist", "1,4,8", "--seed", "7"},
        {"opsize", "-N", "12", "--rule", "2", "--refs", "all", "--tmax", "30"},
        {"lyapunov", "--sides", "8,12,16", "--format", "json"},
        {"scan-nonmono", "-N", "8", "--refs", "random:4", "--rlist", "1-21"},
        {"partition", "--layout", "double", "-N", "8", "--rule", "2"},
    };
    for (const auto& args : runs) {
        std::ostringstream a;
        std::ostringstream b;
        std::ostringstream err;
        int ca = fs::cli::run(args, a, err);
        int cb = fs::cli::run(args, b, err);
        o.check(ca == 0 && cb == 0, args[0] + " exit codes");
        o.check(!a.str().empty() && a.str() == b.str(), args[0] + " output differs");
    }
    report(11, "determinism", o, std::to_string(runs.size()) + " CLI configurations byte-identical across runs");
}

}  // namespace

int main() {
    criterion1();
    symplectic_suite(2, "W");
    criterion3();
    criterion4();
    plateau_suite(5, "W");
    criterion6();
    entropy_suite(7, "W");
    criterion8();
    criterion9();
    std::printf("-- gate W_new reruns criteria 2, 5 and 7 --\n");
    {
        int before = g_failed;
        symplectic_suite(10, "W_new");
        plateau_suite(10, "W_new");
        entropy_suite(10, "W_new");
        std::printf("%s [10] gate W_new qualitative equivalence: %d of 3 reruns failed\n",
                    g_failed == before ? "PASS" : "FAIL", g_failed - before);
    }
    criterion11();
    std::printf("%d acceptance lines failed\n", g_failed);
    return g_failed == 0 ? 0 : 1;
}
