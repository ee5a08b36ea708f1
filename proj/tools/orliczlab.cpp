// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

// Batch front end: parse φ-specs and step functions, dispatch computations,
// emit deterministic JSON/CSV.
//
// Exit codes: 0 success; 1 parse/config error; 2 divergent norm;
// 3 infeasible schedule; 4 a theorem-guaranteed bound was contradicted
// (bug signal); 5 a verification identity failed tolerance.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orlicz/convexity.hpp"
#include "orlicz/hardy.hpp"
#include "orlicz/indices.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/phi_json.hpp"
#include "orlicz/version.hpp"

using namespace orlicz;
using nlohmann::json;

namespace {

int log_level() {
    const char* v = std::getenv("ORLICZLAB_LOG");
    return v ? std::atoi(v) : 0;
}

void info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[orliczlab] " << msg << "\n";
}

std::string slurp_if_file(const std::string& arg) {
    std::ifstream in(arg);
    if (!in.good()) return arg;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedPhi load_phi(const std::string& arg) { return parse_phi_inline(slurp_if_file(arg)); }

StepFunction load_step(const std::string& arg) {
    const std::string text = slurp_if_file(arg);
    if (!text.empty() && text.front() == '{') return parse_step_json(json::parse(text));
    if (text.find('@') == std::string::npos && text.rfind("chi:", 0) != 0)
        return parse_step_csv(text);
    return parse_step_inline(text);
}

struct RunMeta {
    std::string spec_hash;
    std::uint64_t seed = 12345;
    double tol = 1e-12;
    int threads = 0;
};

void stamp(json& j, const RunMeta& meta) {
    j["spec_hash"] = meta.spec_hash;
    j["seed"] = meta.seed;
    j["tol"] = meta.tol;
    j["threads"] = meta.threads;
    j["version"] = kVersion;
}

void emit(const json& j, const std::string& out_path, const std::string& format) {
    std::string payload;
    if (format == "csv" && j.contains("csv")) {
        payload = j.at("csv").get<std::string>();
    } else {
        payload = j.dump(2);
        payload.push_back('\n');
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        out << payload;
    }
}

json bracket_json(const IndexBracket& b) {
    json j{{"lo", b.lo}, {"hi", b.hi}, {"lo_provenance", b.lo_provenance},
           {"hi_provenance", b.hi_provenance}};
    if (b.witness) j["witness"] = *b.witness;
    return j;
}

json norm_json(const NormResult& r) {
    json j{{"lo", r.lo},
           {"hi", r.hi},
           {"value", r.value()},
           {"tol_achieved", r.tol},
           {"bisection_steps", r.bisection_steps},
           {"modular_at_mid", r.modular_at_mid}};
    if (r.divergent)
        j["divergent_end"] = *r.divergent == DivergentEnd::at_zero
                                 ? "zero"
                                 : (*r.divergent == DivergentEnd::at_infinity ? "infinity" : "both");
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orlicz-Lorentz functionals, indices, and extremal constructions"};
    app.require_subcommand(1);

    RunMeta meta;
    std::string out_path, format = "json";
    std::string f_spec, g_spec, step_arg, kind = "auto";
    int grid_halfspan = 40;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", meta.tol, "bisection tolerance (relative)");
        cmd->add_option("--seed", meta.seed, "seed recorded in outputs");
        cmd->add_option("--threads", meta.threads, "0 = library default");
        cmd->add_option("--format", format, "json | csv");
        cmd->add_option("--out", out_path, "write output here instead of stdout");
    };

    auto* cmd_norm = app.add_subcommand("norm", "Luxemburg / Orlicz-Lorentz / Torchinsky norm");
    cmd_norm->add_option("--F", f_spec, "phi spec (inline or file)")->required();
    cmd_norm->add_option("--G", g_spec, "second phi spec");
    cmd_norm->add_option("--f", step_arg, "step function (inline, JSON, or CSV file)")->required();
    cmd_norm->add_option("--kind", kind, "luxemburg | lorentz | torchinsky (default by flags)");
    add_common(cmd_norm);

    auto* cmd_indices = app.add_subcommand("indices", "Zippin and Boyd index brackets + profile");
    cmd_indices->add_option("--F", f_spec)->required();
    cmd_indices->add_option("--G", g_spec)->required();
    cmd_indices->add_option("--grid", grid_halfspan, "a-grid: 2^{±k/4}, k = 0..grid");
    add_common(cmd_indices);

    double ce_p = 1.0, ce_q = 2.0;
    int ce_blocks = 2;
    std::string ce_mode = "thm41", ce_schedule = "pow2";
    auto* cmd_ce = app.add_subcommand("counterexample", "build and verify the block construction");
    cmd_ce->add_option("--p", ce_p);
    cmd_ce->add_option("--q", ce_q);
    cmd_ce->add_option("--blocks", ce_blocks);
    cmd_ce->add_option("--mode", ce_mode, "thm41 | thm42");
    cmd_ce->add_option("--schedule", ce_schedule, "pow2 | linear | const");
    add_common(cmd_ce);

    double cx_exponent = 1.0;
    std::string cx_probe = "convex";
    int cx_nmax = 256;
    auto* cmd_cx = app.add_subcommand("convexity", "convexity / concavity probes");
    cmd_cx->add_option("--F", f_spec)->required();
    cmd_cx->add_option("--G", g_spec)->required();
    cmd_cx->add_option("--exponent", cx_exponent)->required();
    cmd_cx->add_option("--probe", cx_probe, "convex | concave");
    cmd_cx->add_option("--nmax", cx_nmax);
    add_common(cmd_cx);

    int hd_samples = 200;
    auto* cmd_hardy = app.add_subcommand("hardy", "averaged-rearrangement inequality probe");
    cmd_hardy->add_option("--F", f_spec)->required();
    cmd_hardy->add_option("--G", g_spec)->required();
    cmd_hardy->add_option("--samples", hd_samples);
    add_common(cmd_hardy);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_norm->parsed()) {
            const auto F = load_phi(f_spec);
            const auto f = load_step(step_arg);
            std::string hash_payload = F.spec.dump() + "|" + step_to_json(f).dump();
            NormResult r;
            std::string used_kind = kind;
            if (kind == "auto") used_kind = g_spec.empty() ? "luxemburg" : "lorentz";
            if (used_kind == "luxemburg") {
                r = luxemburg_norm(F.phi, f, meta.tol);
            } else {
                const auto G = load_phi(g_spec);
                hash_payload += "|" + G.spec.dump();
                r = used_kind == "torchinsky" ? torchinsky_norm(F.phi, G.phi, f, meta.tol)
                                              : orlicz_lorentz_norm(F.phi, G.phi, f, meta.tol);
            }
            meta.spec_hash = fnv1a_hex(hash_payload);
            json j = norm_json(r);
            j["kind"] = used_kind;
            stamp(j, meta);
            emit(j, out_path, format);
            return r.divergent ? 2 : 0;
        }

        if (cmd_indices->parsed()) {
            const auto F = load_phi(f_spec);
            const auto G = load_phi(g_spec);
            meta.spec_hash = fnv1a_hex(F.spec.dump() + "|" + G.spec.dump());
            info("computing analytic brackets");
            const auto z = zippin_indices(F.phi, G.phi);
            const auto analytic = boyd_analytic_bracket(F.phi, G.phi);
            const auto dict = default_dictionary(
                F.phi, G.phi, F.ce_ledger ? &*F.ce_ledger : (G.ce_ledger ? &*G.ce_ledger : nullptr));
            std::vector<double> grid;
            for (int k = grid_halfspan; k >= 1; --k) grid.push_back(std::exp2(-k / 4.0));
            for (int k = 0; k <= grid_halfspan; ++k) grid.push_back(std::exp2(k / 4.0));
            info("profiling " + std::to_string(dict.size()) + " witnesses over " +
                 std::to_string(grid.size()) + " dilations");
            const auto prof = dilation_profile(F.phi, G.phi, dict, grid, meta.tol, meta.threads);
            const auto emp = boyd_empirical_bounds(prof, analytic);

            json j;
            j["zippin"] = {{"p_z", bracket_json(z.p_z)},
                           {"q_z", bracket_json(z.q_z)},
                           {"chi_read", {z.chi_read_lo, z.chi_read_hi}},
                           {"consistent", z.consistent}};
            j["boyd_analytic"] = {{"p", bracket_json(analytic.p)},
                                  {"q", bracket_json(analytic.q)},
                                  {"p_weak_lo", analytic.p_weak_lo},
                                  {"q_weak_hi", analytic.q_weak_hi}};
            j["boyd"] = {{"p", bracket_json(emp.p)},
                         {"q", bracket_json(emp.q)},
                         {"p_upper_empirical", emp.p_upper_empirical},
                         {"q_lower_empirical", emp.q_lower_empirical}};
            j["status"] = mo_indices(F.phi).method == MatuszewskaIndices::Method::window_scan ||
                                  mo_indices(G.phi).method ==
                                      MatuszewskaIndices::Method::window_scan
                              ? "bracket"
                              : "exact";
            std::ostringstream csv;
            csv << "a,ratio,witness_id,witness\n";
            for (const auto& s : prof.samples)
                csv << json(s.a).dump() << "," << json(s.ratio).dump() << "," << s.witness << ","
                    << prof.witness_names[std::size_t(std::max(0, s.witness))] << "\n";
            j["csv"] = csv.str();
            stamp(j, meta);
            emit(j, out_path, format);
            return 0;
        }

        if (cmd_ce->parsed()) {
            const auto built = ce_mode == "thm42" ? build_theorem42_phi(ce_blocks, ce_schedule)
                                                  : build_theorem41_phi(ce_p, ce_q, ce_blocks,
                                                                        ce_schedule);
            json spec_j{{"kind", "counterexample"}, {"p", ce_p},        {"q", ce_q},
                        {"blocks", ce_blocks},      {"mode", ce_mode},  {"schedule", ce_schedule}};
            meta.spec_hash = fnv1a_hex(spec_j.dump());

            json blocks = json::array();
            bool all_pass = true;
            for (int k = 0; k < ce_blocks; ++k) {
                const bool has_b = built.spec.variant == CounterexampleSpec::Variant::thm41;
                for (int side = 0; side < (has_b ? 2 : 1); ++side) {
                    const auto blk = block_params(built.spec, k, side == 1);
                    const double tmax = std::min(blk.q / blk.p, 1.0);
                    for (double theta : {0.0, 0.5 * tmax, tmax}) {
                        auto [f, g] = lemma43_witnesses(blk, theta);
                        const auto rep = verify_lemma43(built.phi, blk, f, g, theta, 1e-9);
                        all_pass = all_pass && rep.pass;
                        blocks.push_back({{"k", k},
                                          {"side", side == 1 ? "q-first" : "p-first"},
                                          {"a", blk.a},
                                          {"theta", theta},
                                          {"norm_f", rep.norm_f},
                                          {"norm_g", rep.norm_g},
                                          {"modular_at_1", rep.modular_f_at_1},
                                          {"dilation_ratio", rep.dilation_ratio},
                                          {"expected_ratio", rep.expected_ratio},
                                          {"cells_identity", rep.cells_identity},
                                          {"worst_err", rep.worst_err},
                                          {"pass", rep.pass}});
                    }
                }
            }

            const auto F1 = PhiFunction::power(1.0);
            const auto z = zippin_indices(F1, built.phi);
            const auto analytic = boyd_analytic_bracket(F1, built.phi);
            const auto prof = dilation_profile(F1, built.phi,
                                               default_dictionary(F1, built.phi, &built.spec),
                                               default_a_grid(), meta.tol, meta.threads);
            const auto emp = boyd_empirical_bounds(prof, analytic);

            json j;
            j["spec"] = spec_j;
            j["verification"] = blocks;
            j["all_identities_pass"] = all_pass;
            j["growth_ok"] = built.spec.growth_ok;
            j["reading"] = "blocks run n = 0..count with the count convention; the reflection "
                           "fills t < 1 in both modes";
            j["indices"] = {{"p_z", bracket_json(z.p_z)},
                            {"q_z", bracket_json(z.q_z)},
                            {"boyd_p", bracket_json(emp.p)},
                            {"boyd_q", bracket_json(emp.q)}};
            json ledger = json::array();
            for (const auto& b : built.spec.ledger)
                ledger.push_back({{"M", b.M},
                                  {"N", b.N},
                                  {"a", b.a},
                                  {"b", b.b},
                                  {"log_A", b.log_A},
                                  {"log_B", b.log_B},
                                  {"p_k", b.p_k}});
            j["ledger"] = ledger;
            stamp(j, meta);
            emit(j, out_path, format);
            return all_pass ? 0 : 5;
        }

        if (cmd_cx->parsed()) {
            const auto F = load_phi(f_spec);
            const auto G = load_phi(g_spec);
            meta.spec_hash = fnv1a_hex(F.spec.dump() + "|" + G.spec.dump() + "|" +
                                       std::to_string(cx_exponent));
            FamilyConfig cfg;
            cfg.seed = meta.seed;
            cfg.threads = meta.threads;
            cfg.sizes.clear();
            for (int n = 1; n <= cx_nmax; n *= 4) cfg.sizes.push_back(n);
            const bool convex = cx_probe != "concave";
            const auto rep = convex ? convexity_probe(F.phi, G.phi, cx_exponent, cfg)
                                    : concavity_probe(F.phi, G.phi, cx_exponent, cfg);
            const auto hyp = theorem51_hypotheses(F.phi, G.phi, cx_exponent, cx_exponent);

            // with the part-(i) hypotheses in force the ratios are bounded;
            // visible growth is a bug signal
            bool contradiction = false;
            if (convex && hyp.i_holds && rep.curve.size() >= 2)
                contradiction = rep.curve.back().second > 8.0 * rep.curve.front().second + 1e-9;

            json j;
            j["probe"] = convex ? "convex" : "concave";
            j["exponent"] = cx_exponent;
            j["max_ratio"] = rep.max_ratio;
            j["witness_family"] = rep.witness_family;
            j["hypotheses_i"] = hyp.i_holds;
            j["hypotheses_ii"] = hyp.ii_holds;
            j["verdict"] = contradiction ? "violated" : "consistent";
            json curve = json::array();
            std::ostringstream csv;
            csv << "n,ratio\n";
            for (const auto& [n, r] : rep.curve) {
                curve.push_back({n, r});
                csv << n << "," << json(r).dump() << "\n";
            }
            j["curve"] = curve;
            j["csv"] = csv.str();
            stamp(j, meta);
            emit(j, out_path, format);
            return contradiction ? 4 : 0;
        }

        if (cmd_hardy->parsed()) {
            const auto F = load_phi(f_spec);
            const auto G = load_phi(g_spec);
            meta.spec_hash = fnv1a_hex(F.spec.dump() + "|" + G.spec.dump());
            const auto rep =
                hardy_inequality_probe(F.phi, G.phi, hd_samples, meta.seed, 1e-11, meta.threads);
            json j;
            j["refused"] = rep.refused;
            if (rep.refused) {
                j["p_bracket"] = bracket_json(rep.p_bracket);
            } else {
                j["max_ratio"] = rep.max_ratio;
                j["min_ratio"] = rep.min_ratio;
                j["left_inequality_ok"] = rep.left_inequality_ok;
                j["samples"] = rep.samples;
            }
            stamp(j, meta);
            emit(j, out_path, format);
            if (!rep.refused && !rep.left_inequality_ok) return 4;
            return 0;
        }
    } catch (const ScheduleError& e) {
        std::cerr << "schedule infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
