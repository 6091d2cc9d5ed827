#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqsim/engine.hpp"
#include "pqsim/rational.hpp"
#include "pqsim/types.hpp"

namespace pqsim {

struct OracleLimits {
    std::uint64_t max_states = 1'000'000;
};

/// Decisions reproducing the optimal schedule: one accept/reject flag per
/// arrival (trace order) and one processed (size, residual) class per
/// trace slot, {0,0} meaning the buffer was empty.
struct OptWitness {
    std::vector<bool> accept;
    std::vector<std::pair<Bytes, Cycles>> processed;
};

struct OracleResult {
    Bytes opt_bytes = 0;
    std::uint64_t explored_states = 0;
    OptWitness witness;
};

/// Exact offline optimum over all admission choices (no push-out, no drop
/// after accept) and all per-slot work-conserving processing choices,
/// under the engine's slot phases. Memoized depth-first search on
/// canonical states: (slot, arrival cursor, multiset of (size, residual)).
/// Throws OracleBudgetError when the state budget is exceeded.
OracleResult opt_offline(const Trace& trace, Bytes capacity, const OracleLimits& limits = {});

/// Same recursion without memoization; cross-check for opt_offline.
Bytes opt_offline_plain(const Trace& trace, Bytes capacity, const OracleLimits& limits = {});

/// Replays a witness through the slot phases and returns the bytes it
/// transmits; ContractError when the witness is infeasible.
Bytes replay_witness(const Trace& trace, Bytes capacity, const OptWitness& witness);

enum class OptSource { Oracle, Analytic };
const char* to_string(OptSource s);

struct RatioReport {
    Bytes alg_bytes = 0;
    Bytes opt_bytes = 0;
    OptSource source = OptSource::Oracle;
    Rational ratio{1};
    std::optional<Rational> avg_transmitted_len; // L_a of the simulated run
};

/// opt_bytes / alg_bytes for the configured policy on this trace. Uses the
/// exact oracle when it fits the budget, else the trace metadata's
/// analytic optimum. UndefinedRatioError when the policy transmits nothing.
RatioReport empirical_ratio(const Trace& trace, const PolicyConfig& config,
                            const OracleLimits& limits = {});

/// Closed-form competitive-ratio guarantees.
enum class BoundKind {
    NpoSrptLower,          // k*L
    NpoSrptUpper,          // k*L*B / (B-L),                 B > L
    PoSrptLower,           // L,                             B >= 2L
    PoSrptUpper,           // (4L-2) / L_a,                  B > 2L
    PoSrptUpperRefined,    // (2L-1)(N+1) / (N*L_a),         B > 2L, N = ceil((B-2L+1)/(2L-1))
    PoSrptUpperBigBuffer,  // 2L / L_a,                      B > 4L^2 - 2L
    PoLpLower,             // k,                             B >= 2L
    PoLpUpper,             // (2(k+1)B + kL(L+1)) / (2(B-2L+1)), B >= 2L; meaningful for large B
    PoLpUpperAsymptotic,   // k + 3, the large-buffer limit of PoLpUpper
};

struct BoundQuery {
    AdmissionPolicy admission = AdmissionPolicy::Npo;
    Discipline discipline = Discipline::Srpt;
    Bytes buffer = 0;     // B
    Bytes max_size = 0;   // L
    Cycles max_cycles = 0; // k
    std::optional<Rational> avg_transmitted_len; // L_a where a formula needs it
};

bool bound_in_regime(BoundKind kind, const BoundQuery& q);

/// Exact value of the selected closed form. RegimeError outside the
/// regime or when a needed L_a is missing; ParamError on bad parameters.
Rational bound_value(BoundKind kind, const BoundQuery& q);

struct BoundRow {
    BoundKind kind;
    std::string name;
    bool is_upper = false;
    std::string regime;    // human-readable regime condition
    bool in_regime = false;
    bool needs_avg_len = false;
    std::optional<Rational> value; // set when computable
};

/// Every bound applicable to the query's policy/discipline pair;
/// out-of-regime rows are included and marked, never suppressed.
std::vector<BoundRow> bounds_table(const BoundQuery& q);

}  // namespace pqsim
