#include "pqsim/policies.hpp"

#include <algorithm>

namespace pqsim {

AdmissionOutcome npo_admit(BufferState& buffer, const Packet& p, Discipline d) {
    AdmissionOutcome out;
    if (buffer.occupancy() + p.size <= buffer.capacity()) {
        buffer.insert_by_priority(p, d);
        out.accepted = true;
    } else {
        out.rejected = true;
    }
    return out;
}

AdmissionOutcome po_admit(BufferState& buffer, const Packet& p, Discipline d, Bytes max_size) {
    if (max_size < 1) throw ConfigError("push-out requires a positive max packet size");
    if (buffer.capacity() < 2 * max_size) throw ConfigError("push-out requires B >= 2L");
    if (p.size > max_size) throw ContractError("po_admit: packet exceeds the max size");

    const Bytes threshold = buffer.capacity() - 2 * max_size + 1;
    AdmissionOutcome out;
    buffer.insert_by_priority(p, d);
    while (!buffer.empty() && buffer.last_start() > threshold) {
        Packet dropped = buffer.pop_lowest();
        out.pushed_out.push_back(dropped.id);
        out.pushed_out_bytes += dropped.size;
    }
    out.accepted =
        std::find(out.pushed_out.begin(), out.pushed_out.end(), p.id) == out.pushed_out.end();
    return out;
}

AdmissionOutcome admit(const PolicyConfig& config, BufferState& buffer, const Packet& p) {
    if (config.admission == AdmissionPolicy::Po)
        return po_admit(buffer, p, config.discipline, *config.max_size);
    return npo_admit(buffer, p, config.discipline);
}

}  // namespace pqsim
