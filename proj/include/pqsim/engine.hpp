#pragma once

#include <optional>
#include <vector>

#include "pqsim/buffer.hpp"
#include "pqsim/rational.hpp"
#include "pqsim/types.hpp"

namespace pqsim {

struct SlotRecord {
    Slot slot = 0;
    Bytes occupancy_after_arrivals = 0; // also the end-of-slot occupancy
    Bytes bytes_transmitted = 0;
    Count packets_transmitted = 0;
    Count rejected = 0;
    Count pushed_out = 0;
    Bytes accepted_bytes = 0;
    Bytes pushed_out_bytes = 0;
    // Largest last-packet start seen immediately after an admission this
    // slot; 0 when nothing was admitted. Push-out keeps this <= B - 2L + 1.
    Bytes max_admission_start = 0;
    bool processed = false;

    bool operator==(const SlotRecord&) const = default;
};

struct SimResult {
    Bytes transmitted_bytes = 0;
    Count transmitted_packets = 0;
    Count rejected_count = 0;
    Count pushed_out_count = 0;
    Bytes accepted_bytes = 0;
    Bytes pushed_out_bytes = 0;
    std::vector<SlotRecord> per_slot;

    /// L_a: average size of transmitted packets; empty when none were.
    std::optional<Rational> avg_transmitted_len() const;

    bool operator==(const SimResult&) const = default;
};

struct EngineState {
    Slot clock = 1;
    BufferState buffer;
    PolicyConfig config;
    SimResult stats;

    explicit EngineState(const PolicyConfig& cfg);
};

/// One time slot: (i) packets with zero residual cycles leave and are
/// credited, (ii) arrivals are offered one at a time to the admission
/// policy, (iii) the head-of-line packet gets one processing cycle.
void step(EngineState& state, const std::vector<Packet>& arrivals);

/// Runs every trace slot, then keeps stepping with empty arrivals until
/// the buffer drains. Deterministic.
SimResult simulate(const Trace& trace, const PolicyConfig& config);

}  // namespace pqsim
