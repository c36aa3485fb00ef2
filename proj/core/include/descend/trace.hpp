#pragma once

#include <string>

#include <descend/solver.hpp>

namespace descend {

// Final invariant per node, one "<label>: <value>" line each.
std::string render_final(const AnalysisResult &r);

// Full iterate tables: one row per node, one column per sweep, for
// both phases; decoupled runs get a leading "transfer" column on the
// descending table. Deterministic and byte-stable.
std::string render_trace(const AnalysisResult &r);

// Widening-point view: the value trajectory of one widening point as
// "asc/i" / "dsc/i" rows, compressed at the first repeated value
// ("same value (detected ... )"). Decoupled runs include the
// transferred start as "dsc/0".
std::string render_wp_table(const AnalysisResult &r, NodeId wp);

// All widening points, in order.
std::string render_wp_tables(const AnalysisResult &r);

// JSON form of the trace (schemas/trace.schema.json).
std::string trace_to_json(const AnalysisResult &r, const std::string &program_name);

} // namespace descend
