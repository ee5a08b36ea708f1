// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "orlicz/counterexample.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/step.hpp"

namespace orlicz {

/// φ-spec JSON:
///   {"kind":"power","p":2}
///   {"kind":"loglog","knots":[[u,v],...],"slopes":[...],"tail_lo":s,"tail_hi":s}
///   {"kind":"compose","outer":...,"inner":...}
///   {"kind":"inverse","of":...}  {"kind":"tilde","of":...}
///   {"kind":"counterexample","p":1,"q":2,"blocks":6,"schedule":"pow2","variant":"thm41"}
/// Round-trips bit-exactly: parse(dump(x)) == x.
struct ParsedPhi {
    PhiFunction phi;
    nlohmann::json spec;                          // the canonical spec tree
    std::optional<CounterexampleSpec> ce_ledger;  // set for counterexample kind
};

ParsedPhi parse_phi_spec(const nlohmann::json& spec);
ParsedPhi parse_phi_spec_text(const std::string& text);

/// Inline mini-syntax for quick runs: "power:2".
/// Full JSON is the serious format.
ParsedPhi parse_phi_inline(const std::string& text);

nlohmann::json phi_spec_of_loglog(const PhiFunction& f);

/// Step JSON: {"cells":[[len,value],...]}; the "log_cells" variant carries
/// [ln len, ln value] pairs for graphs outside double range.
StepFunction parse_step_json(const nlohmann::json& j);
nlohmann::json step_to_json(const StepFunction& f);

/// CSV import, two columns len,value; '#' starts a comment line.
StepFunction parse_step_csv(const std::string& text);

/// Inline step syntax: "3@[0,4)" cells (comma separated) or "chi:0..5".
StepFunction parse_step_inline(const std::string& text);

/// FNV-1a hash of a canonical input description, embedded in every output
/// artifact for provenance.
std::string fnv1a_hex(const std::string& payload);

} // namespace orlicz
