#include "pqsim/engine.hpp"

#include <cassert>
#include <unordered_set>

#include "pqsim/policies.hpp"

namespace pqsim {

const std::vector<Packet>& Trace::arrivals_at(Slot t) const {
    static const std::vector<Packet> kEmpty;
    if (t < 1 || t > num_slots()) return kEmpty;
    return slots[static_cast<std::size_t>(t - 1)];
}

std::size_t Trace::packet_count() const {
    std::size_t n = 0;
    for (const auto& s : slots) n += s.size();
    return n;
}

Bytes Trace::max_packet_size() const {
    Bytes m = 0;
    for (const auto& s : slots)
        for (const Packet& p : s) m = std::max(m, p.size);
    return m;
}

Cycles Trace::max_packet_cycles() const {
    Cycles m = 0;
    for (const auto& s : slots)
        for (const Packet& p : s) m = std::max(m, p.required_cycles);
    return m;
}

void Trace::validate() const {
    std::unordered_set<PacketId> seen;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Slot slot = static_cast<Slot>(i) + 1;
        for (const Packet& p : slots[i]) {
            if (p.arrival_slot != slot) throw ContractError("trace: packet arrival_slot mismatch");
            if (p.size < 1) throw ContractError("trace: packet size must be positive");
            if (p.required_cycles < 1) throw ContractError("trace: packet cycles must be positive");
            if (p.residual_cycles != p.required_cycles)
                throw ContractError("trace: arriving packets must be unprocessed");
            if (!seen.insert(p.id).second) throw ContractError("trace: duplicate packet id");
        }
    }
}

void TraceBuilder::add(Slot slot, Bytes size, Cycles cycles) {
    ensure_slot(slot);
    Packet p;
    p.id = next_id_++;
    p.arrival_slot = slot;
    p.size = size;
    p.required_cycles = cycles;
    p.residual_cycles = cycles;
    trace_.slots[static_cast<std::size_t>(slot - 1)].push_back(p);
}

void TraceBuilder::ensure_slot(Slot slot) {
    if (slot < 1) throw ContractError("trace slots are 1-based");
    if (slot > trace_.num_slots()) trace_.slots.resize(static_cast<std::size_t>(slot));
}

Trace TraceBuilder::finish() && {
    return std::move(trace_);
}

std::optional<Rational> SimResult::avg_transmitted_len() const {
    if (transmitted_packets == 0) return std::nullopt;
    return Rational(transmitted_bytes, transmitted_packets);
}

EngineState::EngineState(const PolicyConfig& cfg) : buffer(cfg.capacity), config(cfg) {
    config.validate();
}

void step(EngineState& state, const std::vector<Packet>& arrivals) {
    SlotRecord rec;
    rec.slot = state.clock;

    // Phase 1: transmission.
    for (const Packet& p : state.buffer.remove_transmitted()) {
        rec.bytes_transmitted += p.size;
        rec.packets_transmitted += 1;
    }

    // Phase 2: arrivals, offered one at a time in order.
    for (const Packet& a : arrivals) {
        if (a.arrival_slot != state.clock)
            throw ContractError("step: arrival does not belong to the current slot");
        AdmissionOutcome out = admit(state.config, state.buffer, a);
        if (out.rejected) {
            rec.rejected += 1;
        } else {
            rec.accepted_bytes += a.size;
        }
        rec.pushed_out += static_cast<Count>(out.pushed_out.size());
        rec.pushed_out_bytes += out.pushed_out_bytes;
        if (!state.buffer.empty())
            rec.max_admission_start = std::max(rec.max_admission_start, state.buffer.last_start());
        assert(state.buffer.occupancy() <= state.buffer.capacity());
    }
    rec.occupancy_after_arrivals = state.buffer.occupancy();

    // Phase 3: one processing cycle for the head-of-line packet.
    if (!state.buffer.empty()) {
        state.buffer.decrement_head();
        rec.processed = true;
    }

    state.stats.transmitted_bytes += rec.bytes_transmitted;
    state.stats.transmitted_packets += rec.packets_transmitted;
    state.stats.rejected_count += rec.rejected;
    state.stats.pushed_out_count += rec.pushed_out;
    state.stats.accepted_bytes += rec.accepted_bytes;
    state.stats.pushed_out_bytes += rec.pushed_out_bytes;
    state.stats.per_slot.push_back(rec);
    state.clock += 1;
}

SimResult simulate(const Trace& trace, const PolicyConfig& config) {
    config.validate();
    trace.validate();
    if (config.max_size && trace.max_packet_size() > *config.max_size)
        throw ConfigError("trace contains a packet larger than the configured max size");

    EngineState state(config);
    for (Slot t = 1; t <= trace.num_slots(); ++t) step(state, trace.arrivals_at(t));
    while (!state.buffer.empty()) step(state, {});
    return state.stats;
}

}  // namespace pqsim
