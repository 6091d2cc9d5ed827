#pragma once

#include <iosfwd>
#include <string>

#include "pqsim/engine.hpp"
#include "pqsim/types.hpp"

namespace pqsim {

/// Trace file format: one JSON object per line. An optional first record
/// {"family", "B", "L", "k", "n", "analytic_alg_bytes"?,
/// "analytic_opt_bytes"?} carries generator provenance; every other
/// record is {"slot": t, "packets": [{"size": s, "cycles": c}, ...]} with
/// strictly increasing slot numbers. Missing slot numbers are empty slots.
Trace read_trace(std::istream& in);
Trace read_trace_file(const std::string& path); // "-" reads stdin

void write_trace(const Trace& trace, std::ostream& out);
void write_trace_file(const Trace& trace, const std::string& path); // "-" writes stdout

/// Per-slot CSV: slot,occupancy,transmitted_cum,drops,pushouts.
void write_slot_csv(const SimResult& result, std::ostream& out);

}  // namespace pqsim
