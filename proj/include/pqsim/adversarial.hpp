#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqsim/engine.hpp"
#include "pqsim/types.hpp"

namespace pqsim {

/// Worst-case arrival sequence against greedy non-push-out under SRPT.
/// Slot 1: B-L+1 packets (1 byte, k cycles) then B/L packets (L bytes,
/// 1 cycle); each of the next n slots repeats one of each. Metadata
/// carries the analytic optimum B + nL; the greedy side is left to
/// simulation. Requires L | B, k >= 1, n >= 0.
Trace gen_npo_srpt_lb(Bytes buffer, Bytes max_size, Cycles max_cycles, std::int64_t rounds);

/// Worst-case sequence against push-out under SRPT; every packet needs a
/// single cycle. Slot 1: B-2L+1 one-byte packets then B/L packets of L
/// bytes; each of the next n slots repeats one of each. Analytic bytes:
/// push-out B-2L+1+n, optimum B+nL. Requires B >= 2L, L | B, n >= 0.
Trace gen_po_srpt_lb(Bytes buffer, Bytes max_size, std::int64_t rounds);

/// Worst-case sequence against push-out under largest-packet-first.
/// First L build-up rounds of k-1 slots each: round i opens with
/// ceil(B/i) packets of i bytes and k cycles, then the same count with 1
/// cycle. After a one-slot pause for the surviving head to finish, n
/// steady rounds of k slots each: one (L, k) packet then k packets (L, 1),
/// timed so the arrivals land in the slot where push-out transmits.
/// Analytic bytes: push-out Ln + B, optimum L(1+L)(k-1)/2 + knL + B.
/// Requires L | B, B >= 2L, k >= 2, n >= 1, B/L >= k-1.
Trace gen_po_lp_lb(Bytes buffer, Bytes max_size, Cycles max_cycles, std::int64_t rounds);

/// Dispatch by family name: "npo-srpt-lb", "po-srpt-lb", "po-lp-lb".
/// max_cycles must be absent or 1 for "po-srpt-lb".
Trace gen_family(const std::string& family, Bytes buffer, Bytes max_size,
                 std::optional<Cycles> max_cycles, std::int64_t rounds);

/// Per-slot transmissions the LP construction claims for the push-out
/// side: L bytes at the start of each steady round, then a full B-byte
/// drain in k-slot steps. Simulation may fall short of the claimed drain;
/// diff_po_lp_run reports exactly where.
std::vector<std::pair<Slot, Bytes>> po_lp_claimed_transmissions(Bytes buffer, Bytes max_size,
                                                                Cycles max_cycles,
                                                                std::int64_t rounds);

struct SlotDeviation {
    Slot slot = 0;
    Bytes expected = 0;
    Bytes actual = 0;

    bool operator==(const SlotDeviation&) const = default;
};

/// Slot-level diff between the claimed LP schedule and a simulated run of
/// the same trace. Empty means the run matches the construction exactly.
std::vector<SlotDeviation> diff_po_lp_run(const Trace& trace, const SimResult& result);

}  // namespace pqsim
