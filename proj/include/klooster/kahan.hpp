#pragma once

namespace klooster {

// Kahan compensated accumulator. Requires that the compiler does not
// reassociate floating-point arithmetic (no -ffast-math, -fno-fast-math set).
template <typename Value>
struct KahanSum {
    Value sum = Value(0);
    Value compensation = Value(0);

    void add(Value x) {
        const Value y = x - compensation;
        const Value t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    Value value() const { return sum; }
};

}  // namespace klooster
