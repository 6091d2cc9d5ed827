#include "pqsim/trace_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace pqsim {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::int64_t require_integer(const json& j, const char* key, long long line,
                             std::int64_t min_value) {
    if (!j.contains(key)) throw TraceParseError(line, std::string("missing key \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer())
        throw TraceParseError(line, std::string("\"") + key + "\" must be an integer");
    const std::int64_t value = v.get<std::int64_t>();
    if (value < min_value)
        throw TraceParseError(line, std::string("\"") + key + "\" must be >= " +
                                        std::to_string(min_value));
    return value;
}

TraceMetadata parse_metadata(const json& j, long long line) {
    TraceMetadata meta;
    if (!j.at("family").is_string())
        throw TraceParseError(line, "\"family\" must be a string");
    meta.family = j.at("family").get<std::string>();
    meta.buffer = require_integer(j, "B", line, 1);
    meta.max_size = require_integer(j, "L", line, 1);
    meta.max_cycles = require_integer(j, "k", line, 1);
    meta.rounds = require_integer(j, "n", line, 0);
    if (j.contains("analytic_alg_bytes"))
        meta.analytic_alg_bytes = require_integer(j, "analytic_alg_bytes", line, 0);
    if (j.contains("analytic_opt_bytes"))
        meta.analytic_opt_bytes = require_integer(j, "analytic_opt_bytes", line, 0);
    return meta;
}

}  // namespace

Trace read_trace(std::istream& in) {
    TraceBuilder tb;
    std::optional<TraceMetadata> meta;
    std::string line;
    long long line_no = 0;
    Slot prev_slot = 0;
    bool saw_slot_record = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw TraceParseError(line_no, e.what());
        }
        if (!j.is_object()) throw TraceParseError(line_no, "expected a JSON object");

        if (j.contains("family")) {
            if (meta || saw_slot_record)
                throw TraceParseError(line_no, "metadata must be the single first record");
            meta = parse_metadata(j, line_no);
            continue;
        }

        const Slot slot = require_integer(j, "slot", line_no, 1);
        if (slot <= prev_slot)
            throw TraceParseError(line_no, "slot numbers must be strictly increasing");
        if (!j.contains("packets") || !j.at("packets").is_array())
            throw TraceParseError(line_no, "\"packets\" must be an array");
        for (const json& pj : j.at("packets")) {
            if (!pj.is_object()) throw TraceParseError(line_no, "packet entries must be objects");
            const Bytes size = require_integer(pj, "size", line_no, 1);
            const Cycles cycles = require_integer(pj, "cycles", line_no, 1);
            tb.add(slot, size, cycles);
        }
        tb.ensure_slot(slot);
        prev_slot = slot;
        saw_slot_record = true;
    }

    Trace trace = std::move(tb).finish();
    trace.metadata = std::move(meta);
    trace.validate();
    return trace;
}

Trace read_trace_file(const std::string& path) {
    if (path == "-") return read_trace(std::cin);
    std::ifstream in(path);
    if (!in) throw ParamError("cannot open trace file: " + path);
    return read_trace(in);
}

void write_trace(const Trace& trace, std::ostream& out) {
    if (trace.metadata) {
        const TraceMetadata& m = *trace.metadata;
        ordered_json j;
        j["family"] = m.family;
        j["B"] = m.buffer;
        j["L"] = m.max_size;
        j["k"] = m.max_cycles;
        j["n"] = m.rounds;
        if (m.analytic_alg_bytes) j["analytic_alg_bytes"] = *m.analytic_alg_bytes;
        if (m.analytic_opt_bytes) j["analytic_opt_bytes"] = *m.analytic_opt_bytes;
        out << j.dump() << '\n';
    }
    for (Slot t = 1; t <= trace.num_slots(); ++t) {
        const auto& arrivals = trace.arrivals_at(t);
        if (arrivals.empty()) continue; // gaps denote empty slots
        ordered_json j;
        j["slot"] = t;
        ordered_json packets = ordered_json::array();
        for (const Packet& p : arrivals) {
            ordered_json pj;
            pj["size"] = p.size;
            pj["cycles"] = p.required_cycles;
            packets.push_back(std::move(pj));
        }
        j["packets"] = std::move(packets);
        out << j.dump() << '\n';
    }
}

void write_trace_file(const Trace& trace, const std::string& path) {
    if (path == "-") {
        write_trace(trace, std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParamError("cannot open output file: " + path);
    write_trace(trace, out);
}

void write_slot_csv(const SimResult& result, std::ostream& out) {
    out << "slot,occupancy,transmitted_cum,drops,pushouts\n";
    Bytes cumulative = 0;
    for (const SlotRecord& rec : result.per_slot) {
        cumulative += rec.bytes_transmitted;
        out << rec.slot << ',' << rec.occupancy_after_arrivals << ',' << cumulative << ','
            << rec.rejected << ',' << rec.pushed_out << '\n';
    }
}

}  // namespace pqsim
