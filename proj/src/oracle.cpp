#include "pqsim/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pqsim/engine.hpp"

namespace pqsim {

namespace {

// Canonical buffer content: identities never affect the optimum, only the
// multiset of (size, residual) pairs does. Kept sorted.
using Class = std::pair<Bytes, Cycles>;
using Buf = std::vector<Class>;

Bytes buf_bytes(const Buf& buf) {
    Bytes total = 0;
    for (const Class& c : buf) total += c.first;
    return total;
}

void buf_insert(Buf& buf, const Class& c) {
    buf.insert(std::upper_bound(buf.begin(), buf.end(), c), c);
}

// Removes entry j and re-inserts it with one cycle less.
void buf_process(Buf& buf, std::size_t j) {
    Class c = buf[j];
    buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(j));
    c.second -= 1;
    buf_insert(buf, c);
}

struct Entry {
    Bytes value = 0;
    // For arrival states: 1 = accept, 0 = reject. For the processing
    // state: index of the chosen class in the canonical buffer, -1 = idle.
    std::int32_t decision = -1;
};

class OptSearch {
public:
    OptSearch(const Trace& trace, Bytes capacity, const OracleLimits& limits, bool memoize)
        : trace_(trace), capacity_(capacity), limits_(limits), memoize_(memoize) {}

    Bytes run() { return slot_entry(1, {}); }

    std::uint64_t explored() const { return explored_; }

    OptWitness build_witness() const;

private:
    using EntryKey = std::pair<Slot, Buf>;
    using ArrKey = std::tuple<Slot, std::int32_t, Buf>;

    void count_state() {
        if (++explored_ > limits_.max_states)
            throw OracleBudgetError("oracle infeasible: state budget exceeded");
    }

    // Value of a slot before its transmission phase. Beyond the trace no
    // admission decisions remain and every resident packet drains, so the
    // future value is just the resident bytes.
    Bytes slot_entry(Slot t, Buf buf) {
        if (t > trace_.num_slots()) return buf_bytes(buf);
        if (memoize_) {
            auto it = entry_memo_.find({t, buf});
            if (it != entry_memo_.end()) return it->second;
        }
        count_state();

        Bytes gained = 0;
        Buf after;
        after.reserve(buf.size());
        for (const Class& c : buf) {
            if (c.second == 0)
                gained += c.first;
            else
                after.push_back(c);
        }
        Bytes value = gained + arrivals_from(t, 0, std::move(after));
        if (memoize_) entry_memo_.emplace(EntryKey{t, std::move(buf)}, value);
        return value;
    }

    // Arrival decisions within slot t, one packet at a time, then the
    // processing choice.
    Bytes arrivals_from(Slot t, std::int32_t i, Buf buf) {
        if (memoize_) {
            auto it = arr_memo_.find({t, i, buf});
            if (it != arr_memo_.end()) return it->second.value;
        }
        count_state();

        const auto& arrivals = trace_.arrivals_at(t);
        Entry best;
        if (i < static_cast<std::int32_t>(arrivals.size())) {
            const Packet& p = arrivals[static_cast<std::size_t>(i)];
            best.value = arrivals_from(t, i + 1, buf);
            best.decision = 0;
            if (buf_bytes(buf) + p.size <= capacity_) {
                Buf accepted = buf;
                buf_insert(accepted, {p.size, p.required_cycles});
                Bytes v = arrivals_from(t, i + 1, std::move(accepted));
                if (v > best.value) {
                    best.value = v;
                    best.decision = 1;
                }
            }
        } else if (buf.empty()) {
            best.value = slot_entry(t + 1, buf);
            best.decision = -1;
        } else {
            // Work-conserving: exactly one packet gets the cycle.
            for (std::size_t j = 0; j < buf.size(); ++j) {
                if (j > 0 && buf[j] == buf[j - 1]) continue;
                Buf next = buf;
                buf_process(next, j);
                Bytes v = slot_entry(t + 1, std::move(next));
                if (best.decision < 0 || v > best.value) {
                    best.value = v;
                    best.decision = static_cast<std::int32_t>(j);
                }
            }
        }
        if (memoize_) arr_memo_.emplace(ArrKey{t, i, std::move(buf)}, best);
        return best.value;
    }

    const Trace& trace_;
    Bytes capacity_;
    OracleLimits limits_;
    bool memoize_;
    std::uint64_t explored_ = 0;
    std::map<EntryKey, Bytes> entry_memo_;
    std::map<ArrKey, Entry> arr_memo_;
};

// Walks the memoized decisions forward from the initial state.
OptWitness OptSearch::build_witness() const {
    OptWitness w;
    Buf buf;
    for (Slot t = 1; t <= trace_.num_slots(); ++t) {
        std::erase_if(buf, [](const Class& c) { return c.second == 0; });
        const auto& arrivals = trace_.arrivals_at(t);
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(arrivals.size()); ++i) {
            const Entry& e = arr_memo_.at({t, i, buf});
            w.accept.push_back(e.decision == 1);
            if (e.decision == 1) {
                const Packet& p = arrivals[static_cast<std::size_t>(i)];
                buf_insert(buf, {p.size, p.required_cycles});
            }
        }
        const Entry& pe = arr_memo_.at({t, static_cast<std::int32_t>(arrivals.size()), buf});
        if (pe.decision >= 0) {
            std::size_t j = static_cast<std::size_t>(pe.decision);
            w.processed.push_back(buf[j]);
            buf_process(buf, j);
        } else {
            w.processed.push_back({0, 0});
        }
    }
    return w;
}

}  // namespace

OracleResult opt_offline(const Trace& trace, Bytes capacity, const OracleLimits& limits) {
    trace.validate();
    if (capacity < 1) throw ConfigError("oracle: capacity must be positive");
    OptSearch search(trace, capacity, limits, /*memoize=*/true);
    OracleResult result;
    result.opt_bytes = search.run();
    result.explored_states = search.explored();
    result.witness = search.build_witness();
    return result;
}

Bytes opt_offline_plain(const Trace& trace, Bytes capacity, const OracleLimits& limits) {
    trace.validate();
    if (capacity < 1) throw ConfigError("oracle: capacity must be positive");
    OptSearch search(trace, capacity, limits, /*memoize=*/false);
    return search.run();
}

Bytes replay_witness(const Trace& trace, Bytes capacity, const OptWitness& witness) {
    if (witness.processed.size() != static_cast<std::size_t>(trace.num_slots()))
        throw ContractError("witness: one processing decision per trace slot required");
    if (witness.accept.size() != trace.packet_count())
        throw ContractError("witness: one admission decision per arrival required");

    Buf buf;
    Bytes transmitted = 0;
    std::size_t cursor = 0;
    auto transmit = [&] {
        for (const Class& c : buf)
            if (c.second == 0) transmitted += c.first;
        std::erase_if(buf, [](const Class& c) { return c.second == 0; });
    };

    for (Slot t = 1; t <= trace.num_slots(); ++t) {
        transmit();
        for (const Packet& p : trace.arrivals_at(t)) {
            if (!witness.accept[cursor++]) continue;
            if (buf_bytes(buf) + p.size > capacity)
                throw ContractError("witness: admission overflows the buffer");
            buf_insert(buf, {p.size, p.required_cycles});
        }
        const Class chosen = witness.processed[static_cast<std::size_t>(t - 1)];
        if (chosen == Class{0, 0}) {
            if (!buf.empty()) throw ContractError("witness: idles a non-empty buffer");
            continue;
        }
        auto it = std::find(buf.begin(), buf.end(), chosen);
        if (it == buf.end()) throw ContractError("witness: processed packet not in buffer");
        buf_process(buf, static_cast<std::size_t>(it - buf.begin()));
    }
    while (!buf.empty()) {
        transmit();
        if (!buf.empty()) buf_process(buf, 0);
    }
    return transmitted;
}

const char* to_string(OptSource s) {
    return s == OptSource::Oracle ? "oracle" : "analytic";
}

RatioReport empirical_ratio(const Trace& trace, const PolicyConfig& config,
                            const OracleLimits& limits) {
    SimResult sim = simulate(trace, config);
    if (sim.transmitted_bytes == 0)
        throw UndefinedRatioError("ratio undefined: the policy transmitted nothing");

    RatioReport report;
    report.alg_bytes = sim.transmitted_bytes;
    report.avg_transmitted_len = sim.avg_transmitted_len();
    try {
        report.opt_bytes = opt_offline(trace, config.capacity, limits).opt_bytes;
        report.source = OptSource::Oracle;
    } catch (const OracleBudgetError&) {
        if (!trace.metadata || !trace.metadata->analytic_opt_bytes) throw;
        report.opt_bytes = *trace.metadata->analytic_opt_bytes;
        report.source = OptSource::Analytic;
    }
    report.ratio = Rational(report.opt_bytes, report.alg_bytes);
    return report;
}

namespace {

void check_bound_params(const BoundQuery& q) {
    constexpr Bytes kMax = 1 << 20; // keeps all closed forms inside 64-bit exact arithmetic
    if (q.buffer < 1 || q.max_size < 1 || q.max_cycles < 1)
        throw ParamError("bounds: B, L and k must be positive");
    if (q.buffer > kMax || q.max_size > kMax || q.max_cycles > kMax)
        throw ParamError("bounds: parameter too large for exact evaluation");
}

Rational require_avg_len(const BoundQuery& q) {
    if (!q.avg_transmitted_len)
        throw RegimeError("bound requires L_a (average transmitted packet size)");
    if (*q.avg_transmitted_len <= Rational(0))
        throw RegimeError("bound requires a positive L_a");
    return *q.avg_transmitted_len;
}

}  // namespace

bool bound_in_regime(BoundKind kind, const BoundQuery& q) {
    check_bound_params(q);
    const Bytes B = q.buffer;
    const Bytes L = q.max_size;
    switch (kind) {
        case BoundKind::NpoSrptLower: return true;
        case BoundKind::NpoSrptUpper: return B > L;
        case BoundKind::PoSrptLower: return B >= 2 * L;
        case BoundKind::PoSrptUpper: return B > 2 * L;
        case BoundKind::PoSrptUpperRefined: return B > 2 * L;
        case BoundKind::PoSrptUpperBigBuffer: return B > 4 * L * L - 2 * L;
        case BoundKind::PoLpLower: return B >= 2 * L;
        case BoundKind::PoLpUpper: return B >= 2 * L;
        case BoundKind::PoLpUpperAsymptotic: return true;
    }
    return false;
}

Rational bound_value(BoundKind kind, const BoundQuery& q) {
    check_bound_params(q);
    const Bytes B = q.buffer;
    const Bytes L = q.max_size;
    const Cycles k = q.max_cycles;
    switch (kind) {
        case BoundKind::NpoSrptLower:
            return Rational(k * L);
        case BoundKind::NpoSrptUpper:
            if (B <= L) throw RegimeError("npo/srpt upper bound requires B > L");
            return Rational(k * L * B, B - L);
        case BoundKind::PoSrptLower:
            if (B < 2 * L) throw RegimeError("po/srpt lower bound requires B >= 2L");
            return Rational(L);
        case BoundKind::PoSrptUpper:
            if (B <= 2 * L) throw RegimeError("po/srpt upper bound requires B > 2L");
            return Rational(4 * L - 2) / require_avg_len(q);
        case BoundKind::PoSrptUpperRefined: {
            if (B <= 2 * L) throw RegimeError("po/srpt refined upper bound requires B > 2L");
            const Bytes segments = (B - 1) / (2 * L - 1); // == ceil((B-2L+1)/(2L-1))
            return Rational((2 * L - 1) * (segments + 1), segments) / require_avg_len(q);
        }
        case BoundKind::PoSrptUpperBigBuffer:
            if (B <= 4 * L * L - 2 * L)
                throw RegimeError("po/srpt big-buffer upper bound requires B > 4L^2 - 2L");
            return Rational(2 * L) / require_avg_len(q);
        case BoundKind::PoLpLower:
            if (B < 2 * L) throw RegimeError("po/lp lower bound requires B >= 2L");
            return Rational(k);
        case BoundKind::PoLpUpper:
            if (B < 2 * L) throw RegimeError("po/lp upper bound requires B >= 2L");
            return Rational(2 * (k + 1) * B + k * L * (L + 1), 2 * (B - 2 * L + 1));
        case BoundKind::PoLpUpperAsymptotic:
            return Rational(k + 3);
    }
    throw ParamError("unknown bound kind");
}

std::vector<BoundRow> bounds_table(const BoundQuery& q) {
    struct Def {
        BoundKind kind;
        const char* name;
        bool upper;
        const char* regime;
        bool needs_la;
    };
    static const std::vector<Def> kNpoSrpt = {
        {BoundKind::NpoSrptLower, "npo_srpt_lower", false, "always", false},
        {BoundKind::NpoSrptUpper, "npo_srpt_upper", true, "B > L", false},
    };
    static const std::vector<Def> kPoSrpt = {
        {BoundKind::PoSrptLower, "po_srpt_lower", false, "B >= 2L", false},
        {BoundKind::PoSrptUpper, "po_srpt_upper", true, "B > 2L", true},
        {BoundKind::PoSrptUpperRefined, "po_srpt_upper_refined", true, "B > 2L", true},
        {BoundKind::PoSrptUpperBigBuffer, "po_srpt_upper_big_buffer", true, "B > 4L^2 - 2L", true},
    };
    static const std::vector<Def> kPoLp = {
        {BoundKind::PoLpLower, "po_lp_lower", false, "B >= 2L", false},
        {BoundKind::PoLpUpper, "po_lp_upper", true, "B >= 2L", false},
        {BoundKind::PoLpUpperAsymptotic, "po_lp_upper_asymptotic", true, "B >> kL(L+1)", false},
    };

    const std::vector<Def>* defs = nullptr;
    if (q.admission == AdmissionPolicy::Npo && q.discipline == Discipline::Srpt)
        defs = &kNpoSrpt;
    else if (q.admission == AdmissionPolicy::Po && q.discipline == Discipline::Srpt)
        defs = &kPoSrpt;
    else if (q.admission == AdmissionPolicy::Po && q.discipline == Discipline::Lp)
        defs = &kPoLp;

    std::vector<BoundRow> rows;
    if (!defs) return rows; // npo/lp carries no stated guarantee
    for (const Def& d : *defs) {
        BoundRow row;
        row.kind = d.kind;
        row.name = d.name;
        row.is_upper = d.upper;
        row.regime = d.regime;
        row.needs_avg_len = d.needs_la;
        row.in_regime = bound_in_regime(d.kind, q);
        if (row.in_regime && (!d.needs_la || q.avg_transmitted_len))
            row.value = bound_value(d.kind, q);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pqsim
