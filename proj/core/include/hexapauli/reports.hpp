#pragma once

#include <cstddef>
#include <string>

namespace hexapauli {

/// Shared knobs for certification runs.
struct RunConfig {
    unsigned long seed = 20080911;
    int trials = 1000;
    std::size_t budget = 1000000;
};

struct CertifyReport {
    bool pass = false;
    std::string json;  // schema "hexapauli/1"
};

/// Runs the invariant suite for one scope ("all", "pauli", "fano", "group",
/// "hexagon", "mub", "blackhole"). Throws on unknown scope.
CertifyReport certify(const std::string& scope, const RunConfig& cfg);

/// Orbit decompositions of the conjugation action of the three generators.
std::string orbit_report_json();

/// The nine maximal commuting sets, their exact eigenbases, and the
/// unbiasedness certification.
std::string mub_report_json();

/// Evaluates the entropy invariants for a charge configuration given as
/// JSON: {"charges":{"a":[8 ints],...}} with any subset of the letters a..g,
/// or {"amplitudes":[8 ints]} for the first letter only, or
/// {"four_charge":[4 ints]} for the canonical four-charge case.
std::string entropy_report_json(const std::string& charges_json);

/// DOT export: "hexagon", "heawood", "coxeter", "fano_incidence",
/// "oriented_fano". Vertices carry operator mnemonics and orbit colors.
std::string export_graph_dot(const std::string& which);

}  // namespace hexapauli
