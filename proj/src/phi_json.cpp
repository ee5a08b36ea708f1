// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/phi_json.hpp"

#include <cmath>
#include <sstream>

#include "orlicz/num.hpp"

namespace orlicz {

using nlohmann::json;

namespace {

json canonical_spec(const json& in);  // forward

PhiFunction phi_of_spec(const json& spec, std::optional<CounterexampleSpec>* ce) {
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "power") return PhiFunction::power(spec.at("p").get<double>());
    if (kind == "loglog") {
        std::vector<double> us, vs;
        for (const auto& kv : spec.at("knots")) {
            us.push_back(kv.at(0).get<double>());
            vs.push_back(kv.at(1).get<double>());
        }
        const auto f = PhiFunction::from_knots(us, vs, {spec.at("tail_lo").get<double>(), 1.0},
                                               {spec.at("tail_hi").get<double>(), 1.0});
        if (spec.contains("slopes")) {
            const auto& sl = spec.at("slopes");
            if (sl.size() != us.size() - 1)
                throw std::invalid_argument("loglog spec: slopes length mismatch");
            for (std::size_t i = 0; i + 1 < us.size(); ++i) {
                const double want = sl.at(i).get<double>();
                const double got = (vs[i + 1] - vs[i]) / (us[i + 1] - us[i]);
                if (!num::close_rel(want, got, 1e-9))
                    throw std::invalid_argument("loglog spec: slopes inconsistent with knots");
            }
        }
        return f;
    }
    if (kind == "compose")
        return compose(phi_of_spec(spec.at("outer"), ce), phi_of_spec(spec.at("inner"), ce));
    if (kind == "inverse") return inverse(phi_of_spec(spec.at("of"), ce));
    if (kind == "tilde") return tilde(phi_of_spec(spec.at("of"), ce));
    if (kind == "counterexample") {
        const std::string variant = spec.value("variant", std::string("thm41"));
        const std::string schedule = spec.value("schedule", std::string("pow2"));
        const int blocks = spec.at("blocks").get<int>();
        BuiltCounterexample built =
            variant == "thm42"
                ? build_theorem42_phi(blocks, schedule)
                : build_theorem41_phi(spec.at("p").get<double>(), spec.at("q").get<double>(),
                                      blocks, schedule);
        if (ce) *ce = built.spec;
        return built.phi;
    }
    throw std::invalid_argument("unknown phi spec kind: " + kind);
}

json canonical_spec(const json& in) {
    json out;
    const std::string kind = in.at("kind").get<std::string>();
    out["kind"] = kind;
    if (kind == "power") {
        out["p"] = in.at("p").get<double>();
    } else if (kind == "loglog") {
        out["knots"] = in.at("knots");
        if (in.contains("slopes")) out["slopes"] = in.at("slopes");
        out["tail_lo"] = in.at("tail_lo").get<double>();
        out["tail_hi"] = in.at("tail_hi").get<double>();
    } else if (kind == "compose") {
        out["outer"] = canonical_spec(in.at("outer"));
        out["inner"] = canonical_spec(in.at("inner"));
    } else if (kind == "inverse" || kind == "tilde") {
        out["of"] = canonical_spec(in.at("of"));
    } else if (kind == "counterexample") {
        out["p"] = in.value("p", 1.0);
        out["q"] = in.value("q", 2.0);
        out["blocks"] = in.at("blocks").get<int>();
        out["schedule"] = in.value("schedule", std::string("pow2"));
        out["variant"] = in.value("variant", std::string("thm41"));
    } else {
        throw std::invalid_argument("unknown phi spec kind: " + kind);
    }
    return out;
}

} // namespace

ParsedPhi parse_phi_spec(const json& spec) {
    std::optional<CounterexampleSpec> ce;
    PhiFunction phi = phi_of_spec(spec, &ce);
    return {std::move(phi), canonical_spec(spec), std::move(ce)};
}

ParsedPhi parse_phi_spec_text(const std::string& text) {
    return parse_phi_spec(json::parse(text));
}

ParsedPhi parse_phi_inline(const std::string& text) {
    if (text.rfind("power:", 0) == 0) {
        json spec{{"kind", "power"}, {"p", std::stod(text.substr(6))}};
        return parse_phi_spec(spec);
    }
    if (!text.empty() && text.front() == '{') return parse_phi_spec_text(text);
    throw std::invalid_argument("cannot parse phi spec: " + text);
}

json phi_spec_of_loglog(const PhiFunction& f) {
    json knots = json::array();
    for (std::size_t i = 0; i < f.knots_u().size(); ++i)
        knots.push_back({f.knots_u()[i], f.knots_v()[i]});
    json slopes = json::array();
    for (std::size_t i = 0; i < f.segment_count(); ++i) slopes.push_back(f.segment_slope(i));
    return json{{"kind", "loglog"},
                {"knots", knots},
                {"slopes", slopes},
                {"tail_lo", f.tail_lo().value()},
                {"tail_hi", f.tail_hi().value()}};
}

StepFunction parse_step_json(const json& j) {
    if (j.contains("log_cells")) {
        std::vector<StepFunction::LogCell> cells;
        for (const auto& c : j.at("log_cells"))
            cells.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
        return StepFunction::from_log_cells(std::move(cells));
    }
    std::vector<std::pair<double, double>> cells;
    for (const auto& c : j.at("cells"))
        cells.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    return StepFunction::from_cells(std::span<const std::pair<double, double>>(cells));
}

json step_to_json(const StepFunction& f) {
    json cells = json::array();
    bool extreme = false;
    for (const auto& c : f.log_cells())
        if (std::abs(c.log_len) > 700.0 || (c.log_val != num::neg_inf && std::abs(c.log_val) > 700.0))
            extreme = true;
    if (extreme) {
        for (const auto& c : f.log_cells()) cells.push_back({c.log_len, c.log_val});
        return json{{"log_cells", cells}};
    }
    for (const auto& [len, val] : f.cells()) cells.push_back({len, val});
    return json{{"cells", cells}};
}

StepFunction parse_step_csv(const std::string& text) {
    std::vector<std::pair<double, double>> cells;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double len, val;
        if (!(ls >> len >> val)) throw std::invalid_argument("step csv: bad line: " + line);
        cells.emplace_back(len, val);
    }
    return StepFunction::from_cells(std::span<const std::pair<double, double>>(cells));
}

StepFunction parse_step_inline(const std::string& text) {
    if (text.rfind("chi:", 0) == 0) {
        const std::string range = text.substr(4);
        const auto dots = range.find("..");
        if (dots == std::string::npos) return StepFunction::indicator(std::stod(range));
        const double a = std::stod(range.substr(0, dots));
        const double b = std::stod(range.substr(dots + 2));
        if (!(b > a) || a != 0.0)
            throw std::invalid_argument("chi ranges start at 0: " + text);
        return StepFunction::indicator(b - a);
    }
    if (!text.empty() && text.front() == '{') return parse_step_json(json::parse(text));
    // value@[x0,x1) cells, comma separated between cells
    std::vector<std::pair<double, double>> cells;
    std::size_t pos = 0;
    double expect_lo = 0.0;
    while (pos < text.size()) {
        const auto at = text.find('@', pos);
        if (at == std::string::npos) throw std::invalid_argument("bad step syntax: " + text);
        const double val = std::stod(text.substr(pos, at - pos));
        const auto lb = text.find('[', at);
        const auto comma = text.find(',', lb);
        const auto rb = text.find(')', comma);
        if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos)
            throw std::invalid_argument("bad step syntax: " + text);
        const double x0 = std::stod(text.substr(lb + 1, comma - lb - 1));
        const double x1 = std::stod(text.substr(comma + 1, rb - comma - 1));
        if (!(x1 > x0) || !num::close_rel(x0, expect_lo, 1e-12))
            throw std::invalid_argument("step cells must be contiguous from 0: " + text);
        cells.emplace_back(x1 - x0, val);
        expect_lo = x1;
        pos = rb + 1;
        if (pos < text.size() && text[pos] == ',') ++pos;
    }
    return StepFunction::from_cells(std::span<const std::pair<double, double>>(cells));
}

std::string fnv1a_hex(const std::string& payload) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace orlicz
