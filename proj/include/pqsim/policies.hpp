#pragma once

#include <vector>

#include "pqsim/buffer.hpp"
#include "pqsim/types.hpp"

namespace pqsim {

/// What happened to one arriving packet.
struct AdmissionOutcome {
    bool accepted = false;            // the arrival resides in the buffer afterwards
    bool rejected = false;            // non-push-out refusal; buffer untouched
    std::vector<PacketId> pushed_out; // dropped by this arrival, may include the arrival itself
    Bytes pushed_out_bytes = 0;
};

/// Greedy non-push-out admission: accept iff the free space suffices.
/// Never removes a stored packet.
AdmissionOutcome npo_admit(BufferState& buffer, const Packet& p, Discipline d);

/// Push-out admission: insert the arrival by priority, then drop the
/// lowest-priority packet while it starts above byte B - 2L + 1. The
/// arrival itself may be the packet dropped. Afterwards every stored
/// packet starts at or below the threshold, so occupancy <= B - L.
/// Requires B >= 2L (ConfigError otherwise).
AdmissionOutcome po_admit(BufferState& buffer, const Packet& p, Discipline d, Bytes max_size);

/// Dispatch on the configured admission policy.
AdmissionOutcome admit(const PolicyConfig& config, BufferState& buffer, const Packet& p);

}  // namespace pqsim
