#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqsim/errors.hpp"

namespace pqsim {

using Bytes = std::int64_t;
using Cycles = std::int64_t;
using Slot = std::int64_t;
using PacketId = std::int64_t;
using Count = std::int64_t;

/// One unit of work: a size in bytes plus the number of processing cycles
/// it still needs before it can be transmitted.
struct Packet {
    PacketId id = 0;
    Slot arrival_slot = 0;
    Bytes size = 1;
    Cycles required_cycles = 1;
    Cycles residual_cycles = 1;

    bool operator==(const Packet&) const = default;
};

enum class AdmissionPolicy { Npo, Po };
enum class Discipline { Srpt, Lp };

const char* to_string(AdmissionPolicy p);
const char* to_string(Discipline d);

/// Admission policy x priority discipline x buffer geometry.
struct PolicyConfig {
    AdmissionPolicy admission = AdmissionPolicy::Npo;
    Discipline discipline = Discipline::Srpt;
    Bytes capacity = 0;              // B, bytes
    std::optional<Bytes> max_size;   // L, bytes; required for push-out

    void validate() const;           // throws ConfigError
    Bytes pushout_threshold() const; // B - 2L + 1; push-out only
};

/// Provenance block attached to generated traces. Field names mirror the
/// keys of the trace-file metadata record.
struct TraceMetadata {
    std::string family;
    Bytes buffer = 0;        // B
    Bytes max_size = 0;      // L
    Cycles max_cycles = 0;   // k
    std::int64_t rounds = 0; // n, arrival rounds after the opening burst
    std::optional<Bytes> analytic_alg_bytes;
    std::optional<Bytes> analytic_opt_bytes;

    bool operator==(const TraceMetadata&) const = default;
};

/// Slotted arrival schedule. Slot numbers are 1-based: slots[i] holds the
/// ordered arrivals of slot i+1. Trailing empty slots are not represented
/// (they behave exactly like the post-trace drain).
struct Trace {
    std::vector<std::vector<Packet>> slots;
    std::optional<TraceMetadata> metadata;

    Slot num_slots() const { return static_cast<Slot>(slots.size()); }
    const std::vector<Packet>& arrivals_at(Slot t) const;
    std::size_t packet_count() const;
    Bytes max_packet_size() const;    // 0 when empty
    Cycles max_packet_cycles() const; // 0 when empty

    /// Unique ids, slot consistency, positive sizes and cycles,
    /// fresh residuals. Throws ContractError.
    void validate() const;

    bool operator==(const Trace&) const = default;
};

/// Assigns monotone packet ids in arrival order while filling slot lists.
class TraceBuilder {
public:
    void add(Slot slot, Bytes size, Cycles cycles);
    void ensure_slot(Slot slot);
    Trace finish() &&;

private:
    Trace trace_;
    PacketId next_id_ = 0;
};

}  // namespace pqsim
