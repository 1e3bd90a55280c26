#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace floorsum {

// Cancelling common values emptied one side: a and b were equal as multisets.
struct DegenerateInput : std::domain_error {
    using std::domain_error::domain_error;
};

// An operation that needs sum(a) == sum(b) was given a set without it.
struct UnbalancedInput : std::domain_error {
    using std::domain_error::domain_error;
};

// A pair of multisets of positive integers (a_1..a_K; b_1..b_L), stored
// sorted ascending. This is the parameter set of the factorial ratio
//
//     u_n = (a_1 n)! ... (a_K n)! / ((b_1 n)! ... (b_L n)!)
//
// and of the step function f(x) = sum floor(a_k x) - sum floor(b_l x).
//
// Flags computed on construction:
//   balanced  - sum(a) == sum(b)  (f has period 1)
//   reduced   - no value occurs on both sides
//   primitive - gcd of all elements is 1
//
// Construction does not normalize; see canonicalize().
class ParamSet {
public:
    ParamSet(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b);

    const std::vector<std::uint64_t>& a() const { return a_; }
    const std::vector<std::uint64_t>& b() const { return b_; }

    std::size_t k() const { return a_.size(); }
    std::size_t l() const { return b_.size(); }
    std::size_t length() const { return a_.size() + b_.size(); }     // K + L
    std::int64_t height() const {                                    // D = L - K
        return static_cast<std::int64_t>(l()) - static_cast<std::int64_t>(k());
    }

    std::uint64_t sum_a() const { return sum_a_; }
    std::uint64_t sum_b() const { return sum_b_; }
    std::uint64_t sum() const { return sum_a_; }  // s, meaningful when balanced

    bool balanced() const { return balanced_; }
    bool reduced() const { return reduced_; }
    bool primitive() const { return primitive_; }

    // Throws UnbalancedInput naming the operation when sum(a) != sum(b).
    void require_balanced(const char* op) const;

    bool operator==(const ParamSet& other) const {
        return a_ == other.a_ && b_ == other.b_;
    }

private:
    std::vector<std::uint64_t> a_, b_;
    std::uint64_t sum_a_ = 0, sum_b_ = 0;
    bool balanced_ = false, reduced_ = false, primitive_ = false;
};

// Normal form: repeatedly deletes one copy of any value present on both
// sides, then divides everything by the common gcd. Neither step changes
// whether f is nonnegative (cancellation leaves f unchanged; gcd scaling
// rescales x). Throws DegenerateInput when cancellation empties a side.
ParamSet canonicalize(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b);

}  // namespace floorsum
