#include "pqsim/adversarial.hpp"

#include <map>

namespace pqsim {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw ParamError(message);
}

}  // namespace

Trace gen_npo_srpt_lb(Bytes buffer, Bytes max_size, Cycles max_cycles, std::int64_t rounds) {
    require(max_size >= 1, "npo-srpt-lb: L must be positive");
    require(buffer >= max_size && buffer % max_size == 0, "npo-srpt-lb: L must divide B");
    require(max_cycles >= 1, "npo-srpt-lb: k must be positive");
    require(rounds >= 0, "npo-srpt-lb: n must be non-negative");

    TraceBuilder tb;
    for (Bytes i = 0; i < buffer - max_size + 1; ++i) tb.add(1, 1, max_cycles);
    for (Bytes i = 0; i < buffer / max_size; ++i) tb.add(1, max_size, 1);
    for (Slot t = 2; t <= rounds + 1; ++t) {
        tb.add(t, 1, max_cycles);
        tb.add(t, max_size, 1);
    }
    Trace trace = std::move(tb).finish();
    TraceMetadata meta;
    meta.family = "npo-srpt-lb";
    meta.buffer = buffer;
    meta.max_size = max_size;
    meta.max_cycles = max_cycles;
    meta.rounds = rounds;
    meta.analytic_opt_bytes = buffer + rounds * max_size;
    trace.metadata = meta;
    return trace;
}

Trace gen_po_srpt_lb(Bytes buffer, Bytes max_size, std::int64_t rounds) {
    require(max_size >= 1, "po-srpt-lb: L must be positive");
    require(buffer % max_size == 0, "po-srpt-lb: L must divide B");
    require(buffer >= 2 * max_size, "po-srpt-lb: requires B >= 2L");
    require(rounds >= 0, "po-srpt-lb: n must be non-negative");

    TraceBuilder tb;
    for (Bytes i = 0; i < buffer - 2 * max_size + 1; ++i) tb.add(1, 1, 1);
    for (Bytes i = 0; i < buffer / max_size; ++i) tb.add(1, max_size, 1);
    for (Slot t = 2; t <= rounds + 1; ++t) {
        tb.add(t, 1, 1);
        tb.add(t, max_size, 1);
    }
    Trace trace = std::move(tb).finish();
    TraceMetadata meta;
    meta.family = "po-srpt-lb";
    meta.buffer = buffer;
    meta.max_size = max_size;
    meta.max_cycles = 1;
    meta.rounds = rounds;
    meta.analytic_alg_bytes = buffer - 2 * max_size + 1 + rounds;
    meta.analytic_opt_bytes = buffer + rounds * max_size;
    trace.metadata = meta;
    return trace;
}

namespace {

// Slot where steady round j of the LP construction begins: the build-up
// phase takes L*(k-1) slots, one more slot lets the surviving head finish
// its last cycle, and the transmission lands in the slot after that.
Slot po_lp_round_slot(Bytes max_size, Cycles max_cycles, std::int64_t j) {
    return max_size * (max_cycles - 1) + 2 + (j - 1) * max_cycles;
}

void check_po_lp_params(Bytes buffer, Bytes max_size, Cycles max_cycles, std::int64_t rounds) {
    require(max_size >= 1, "po-lp-lb: L must be positive");
    require(buffer % max_size == 0, "po-lp-lb: L must divide B");
    require(buffer >= 2 * max_size, "po-lp-lb: requires B >= 2L");
    require(max_cycles >= 2, "po-lp-lb: requires k >= 2");
    require(rounds >= 1, "po-lp-lb: n must be positive");
    require(buffer / max_size >= max_cycles - 1,
            "po-lp-lb: build-up rounds need B/L >= k-1");
}

}  // namespace

Trace gen_po_lp_lb(Bytes buffer, Bytes max_size, Cycles max_cycles, std::int64_t rounds) {
    check_po_lp_params(buffer, max_size, max_cycles, rounds);

    TraceBuilder tb;
    // Build-up: round i lasts k-1 slots and opens with ceil(B/i) packets
    // of i bytes needing k cycles, immediately followed by the same count
    // needing a single cycle.
    for (Bytes i = 1; i <= max_size; ++i) {
        const Slot s = (i - 1) * (max_cycles - 1) + 1;
        const Bytes count = (buffer + i - 1) / i;
        for (Bytes c = 0; c < count; ++c) tb.add(s, i, max_cycles);
        for (Bytes c = 0; c < count; ++c) tb.add(s, i, 1);
    }
    // Steady rounds: one full-work L-byte packet, then k single-cycle
    // L-byte packets, arriving in the slot where push-out transmits.
    for (std::int64_t j = 1; j <= rounds; ++j) {
        const Slot s = po_lp_round_slot(max_size, max_cycles, j);
        tb.add(s, max_size, max_cycles);
        for (Cycles c = 0; c < max_cycles; ++c) tb.add(s, max_size, 1);
    }
    Trace trace = std::move(tb).finish();
    TraceMetadata meta;
    meta.family = "po-lp-lb";
    meta.buffer = buffer;
    meta.max_size = max_size;
    meta.max_cycles = max_cycles;
    meta.rounds = rounds;
    meta.analytic_alg_bytes = max_size * rounds + buffer;
    meta.analytic_opt_bytes =
        max_size * (1 + max_size) * (max_cycles - 1) / 2 + max_cycles * rounds * max_size + buffer;
    trace.metadata = meta;
    return trace;
}

Trace gen_family(const std::string& family, Bytes buffer, Bytes max_size,
                 std::optional<Cycles> max_cycles, std::int64_t rounds) {
    if (family == "npo-srpt-lb") {
        if (!max_cycles) throw ParamError("npo-srpt-lb: k is required");
        return gen_npo_srpt_lb(buffer, max_size, *max_cycles, rounds);
    }
    if (family == "po-srpt-lb") {
        if (max_cycles && *max_cycles != 1)
            throw ParamError("po-srpt-lb: every packet needs a single cycle; k must be 1");
        return gen_po_srpt_lb(buffer, max_size, rounds);
    }
    if (family == "po-lp-lb") {
        if (!max_cycles) throw ParamError("po-lp-lb: k is required");
        return gen_po_lp_lb(buffer, max_size, *max_cycles, rounds);
    }
    throw ParamError("unknown adversarial family: " + family);
}

std::vector<std::pair<Slot, Bytes>> po_lp_claimed_transmissions(Bytes buffer, Bytes max_size,
                                                                Cycles max_cycles,
                                                                std::int64_t rounds) {
    check_po_lp_params(buffer, max_size, max_cycles, rounds);
    std::vector<std::pair<Slot, Bytes>> claimed;
    for (std::int64_t j = 1; j <= rounds; ++j)
        claimed.push_back({po_lp_round_slot(max_size, max_cycles, j), max_size});
    const Slot last = po_lp_round_slot(max_size, max_cycles, rounds);
    for (Bytes j = 1; j <= buffer / max_size; ++j)
        claimed.push_back({last + j * max_cycles, max_size});
    return claimed;
}

std::vector<SlotDeviation> diff_po_lp_run(const Trace& trace, const SimResult& result) {
    if (!trace.metadata || trace.metadata->family != "po-lp-lb")
        throw ParamError("diff_po_lp_run: trace does not carry po-lp-lb metadata");
    const TraceMetadata& m = *trace.metadata;

    std::map<Slot, Bytes> expected;
    for (const auto& [slot, bytes] :
         po_lp_claimed_transmissions(m.buffer, m.max_size, m.max_cycles, m.rounds))
        expected[slot] += bytes;
    std::map<Slot, Bytes> actual;
    for (const SlotRecord& rec : result.per_slot)
        if (rec.bytes_transmitted > 0) actual[rec.slot] = rec.bytes_transmitted;

    std::vector<SlotDeviation> diffs;
    auto ei = expected.begin();
    auto ai = actual.begin();
    while (ei != expected.end() || ai != actual.end()) {
        if (ai == actual.end() || (ei != expected.end() && ei->first < ai->first)) {
            diffs.push_back({ei->first, ei->second, 0});
            ++ei;
        } else if (ei == expected.end() || ai->first < ei->first) {
            diffs.push_back({ai->first, 0, ai->second});
            ++ai;
        } else {
            if (ei->second != ai->second) diffs.push_back({ei->first, ei->second, ai->second});
            ++ei;
            ++ai;
        }
    }
    return diffs;
}

}  // namespace pqsim
