#pragma once

#include <string>

#include "json.hpp"

#include "dpd/fibers.hpp"
#include "dpd/topology.hpp"

namespace dpd {

// Keys keep insertion order so reports render deterministically.
using Json = nlohmann::ordered_json;

// One command's outcome: the JSON body follows docs/report.schema.json, the
// text field is the human rendering (including any diagram).
struct Report {
    std::string command;
    int exit_code = 0; // 0 affirmative, 1 negative verdict
    Json body;
    std::string text;
};

// Single-line picture of the real image over an interval-type base: '=' runs
// shade the image, '-' runs are empty regions, letters tag special fibers
// (b = double circle fiber, c = fixed point), brackets close segment ends,
// parentheses mark punctures, '~' continues through an uncovered infinity.
// A second line carries the tick labels.  SemanticError on circle-type bases.
std::string render_diagram(const DpdPair& pair);

// JSON builders shared by the CLI commands; moves serialize with their exact
// parameters so an external checker can replay them.
Json pair_json(const DpdPair& pair);
Json verdict_json(const TopologyVerdict& verdict);
Json move_json(const Move& move);
Json moves_json(const std::vector<Move>& moves);
Json fiber_report_json(const FiberReport& report);

} // namespace dpd
