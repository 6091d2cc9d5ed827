#pragma once

#include <cstddef>
#include <vector>

#include "pqsim/types.hpp"

namespace pqsim {

/// True when a must sit strictly ahead of b under the discipline.
/// Equal keys compare false, so an arriving packet lands after every
/// stored packet of the same priority (stable arrival-order tie-break).
bool ranks_ahead(const Packet& a, const Packet& b, Discipline d);

/// Priority-ordered packet queue with 1-based byte positions.
///
/// Index 1 is head of line; packet i starts at byte
/// 1 + sum of the sizes ahead of it. The sequence is kept fully sorted by
/// the active discipline key; admission policies decide what stays.
class BufferState {
public:
    explicit BufferState(Bytes capacity);

    Bytes capacity() const { return capacity_; }
    Bytes occupancy() const { return occupancy_; }
    bool empty() const { return packets_.empty(); }
    std::size_t count() const { return packets_.size(); }
    const std::vector<Packet>& packets() const { return packets_; }

    /// Byte position where the index-th packet (1-based) starts.
    Bytes start_position(std::size_t index) const;

    /// Start of the lowest-priority packet; ContractError when empty.
    Bytes last_start() const;

    /// Inserts keeping the discipline order; returns the 1-based index.
    /// Capacity is not enforced here - that is the admission policy's job.
    std::size_t insert_by_priority(const Packet& p, Discipline d);

    /// Removes and returns the lowest-priority packet.
    Packet pop_lowest();

    /// Removes and returns every fully processed packet (residual 0).
    std::vector<Packet> remove_transmitted();

    const Packet& head() const;

    /// One processing cycle on the head-of-line packet.
    void decrement_head();

    bool is_sorted(Discipline d) const;

private:
    Bytes capacity_;
    Bytes occupancy_ = 0;
    std::vector<Packet> packets_;
};

}  // namespace pqsim
