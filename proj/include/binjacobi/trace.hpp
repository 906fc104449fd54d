#pragma once
// trace.hpp - per-iteration observation of the division loops.
//
// The loop engines take a sink callable and hand it one IterEvent per
// while-loop execution, with the operands as they stood at the start of
// the iteration. NullSink compiles away; everything else is built on top.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "binjacobi/bindiv.hpp"
#include "binjacobi/nat.hpp"

namespace binjacobi {

// References stay valid only for the duration of the sink call.
struct IterEvent {
    std::size_t index;     // 0-based iteration number
    IterClass cls;
    unsigned long j;       // nu(b) for this step
    const Nat& q;          // binary quotient (3 for the step that opens a harmless run)
    unsigned long run_len; // ugly steps consolidated: m for harmless, 1 otherwise
    const Nat& a;          // state at iteration start
    const Nat& b;
};

template <typename S>
concept TraceSink = std::invocable<S&, const IterEvent&>;

struct NullSink {
    void operator()(const IterEvent&) const noexcept {}
};

// Materialized form of one event.
struct TraceRecord {
    std::size_t index;
    IterClass cls;
    unsigned long j;
    Nat q;
    unsigned long run_len;
    std::size_t bits_a;
    std::size_t bits_b;
    unsigned a_mod8;
    unsigned b_mod8;
};

using IterTrace = std::vector<TraceRecord>;

struct RecordingSink {
    IterTrace* out;
    void operator()(const IterEvent& e) const {
        out->push_back(TraceRecord{e.index, e.cls, e.j, e.q, e.run_len,
                                   bit_length(e.a), bit_length(e.b),
                                   static_cast<unsigned>(mod_pow2_ul(e.a, 3)),
                                   static_cast<unsigned>(mod_pow2_ul(e.b, 3))});
    }
};

struct ClassCounts {
    std::uint64_t good = 0;
    std::uint64_t bad = 0;
    std::uint64_t ugly = 0;
    std::uint64_t harmless = 0;

    std::uint64_t total() const { return good + bad + ugly + harmless; }

    ClassCounts& operator+=(const ClassCounts& o) {
        good += o.good;
        bad += o.bad;
        ugly += o.ugly;
        harmless += o.harmless;
        return *this;
    }
};

struct CountingSink {
    ClassCounts* counts;
    void operator()(const IterEvent& e) const noexcept {
        switch (e.cls) {
            case IterClass::good: ++counts->good; break;
            case IterClass::bad: ++counts->bad; break;
            case IterClass::ugly: ++counts->ugly; break;
            case IterClass::harmless: ++counts->harmless; break;
        }
    }
};

}  // namespace binjacobi
