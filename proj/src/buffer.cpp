#include "pqsim/buffer.hpp"

#include <algorithm>
#include <cassert>

namespace pqsim {

const char* to_string(AdmissionPolicy p) {
    return p == AdmissionPolicy::Npo ? "npo" : "po";
}

const char* to_string(Discipline d) {
    return d == Discipline::Srpt ? "srpt" : "lp";
}

void PolicyConfig::validate() const {
    if (capacity < 1) throw ConfigError("buffer capacity must be at least 1 byte");
    if (max_size && *max_size < 1) throw ConfigError("max packet size must be at least 1 byte");
    if (admission == AdmissionPolicy::Po) {
        if (!max_size) throw ConfigError("push-out policy needs the max packet size");
        if (capacity < 2 * *max_size)
            throw ConfigError("push-out policy requires B >= 2L");
    }
}

Bytes PolicyConfig::pushout_threshold() const {
    if (!max_size) throw ContractError("pushout_threshold: max packet size not set");
    return capacity - 2 * *max_size + 1;
}

bool ranks_ahead(const Packet& a, const Packet& b, Discipline d) {
    switch (d) {
        case Discipline::Srpt: return a.residual_cycles < b.residual_cycles;
        case Discipline::Lp: return a.size > b.size;
    }
    return false;
}

BufferState::BufferState(Bytes capacity) : capacity_(capacity) {
    if (capacity < 1) throw ConfigError("buffer capacity must be at least 1 byte");
}

Bytes BufferState::start_position(std::size_t index) const {
    if (index < 1 || index > packets_.size())
        throw ContractError("start_position: index out of range");
    Bytes pos = 1;
    for (std::size_t i = 0; i + 1 < index; ++i) pos += packets_[i].size;
    return pos;
}

Bytes BufferState::last_start() const {
    if (packets_.empty()) throw ContractError("last_start: buffer is empty");
    return occupancy_ - packets_.back().size + 1;
}

std::size_t BufferState::insert_by_priority(const Packet& p, Discipline d) {
    auto it = std::upper_bound(packets_.begin(), packets_.end(), p,
                               [d](const Packet& a, const Packet& b) { return ranks_ahead(a, b, d); });
    it = packets_.insert(it, p);
    occupancy_ += p.size;
    return static_cast<std::size_t>(it - packets_.begin()) + 1;
}

Packet BufferState::pop_lowest() {
    if (packets_.empty()) throw ContractError("pop_lowest: buffer is empty");
    Packet p = packets_.back();
    packets_.pop_back();
    occupancy_ -= p.size;
    return p;
}

std::vector<Packet> BufferState::remove_transmitted() {
    std::vector<Packet> done;
    for (const Packet& p : packets_) {
        if (p.residual_cycles == 0) {
            done.push_back(p);
            occupancy_ -= p.size;
        }
    }
    if (!done.empty())
        std::erase_if(packets_, [](const Packet& p) { return p.residual_cycles == 0; });
    return done;
}

const Packet& BufferState::head() const {
    if (packets_.empty()) throw ContractError("head: buffer is empty");
    return packets_.front();
}

void BufferState::decrement_head() {
    if (packets_.empty()) throw ContractError("decrement_head: buffer is empty");
    if (packets_.front().residual_cycles < 1)
        throw ContractError("decrement_head: head already fully processed");
    packets_.front().residual_cycles -= 1;
}

bool BufferState::is_sorted(Discipline d) const {
    for (std::size_t i = 0; i + 1 < packets_.size(); ++i)
        if (ranks_ahead(packets_[i + 1], packets_[i], d)) return false;
    return true;
}

}  // namespace pqsim
