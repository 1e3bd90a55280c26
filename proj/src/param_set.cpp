#include "floorsum/param_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace floorsum {

namespace {

// Parameters are small by nature (the interesting regime is sums below a few
// hundred); the cap keeps divisor sums and breakpoint counts in machine range.
constexpr std::uint64_t kMaxElement = 100'000'000;
constexpr std::uint64_t kMaxTotalSum = std::uint64_t(1) << 31;

std::uint64_t checked_sum(const std::vector<std::uint64_t>& v, const char* side) {
    std::uint64_t s = 0;
    for (std::uint64_t x : v) {
        if (x == 0) throw std::invalid_argument(std::string(side) + " contains 0; all parameters must be >= 1");
        if (x > kMaxElement) throw std::invalid_argument(std::string(side) + " contains an element beyond the supported range");
        s += x;
    }
    return s;
}

}  // namespace

ParamSet::ParamSet(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || b_.empty())
        throw std::invalid_argument("both multisets must be nonempty");
    sum_a_ = checked_sum(a_, "a");
    sum_b_ = checked_sum(b_, "b");
    if (sum_a_ + sum_b_ > kMaxTotalSum)
        throw std::invalid_argument("parameter sums beyond the supported range");
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
    balanced_ = (sum_a_ == sum_b_);

    // reduced: sorted multiset intersection is empty
    reduced_ = true;
    for (std::size_t i = 0, j = 0; i < a_.size() && j < b_.size();) {
        if (a_[i] == b_[j]) { reduced_ = false; break; }
        if (a_[i] < b_[j]) ++i; else ++j;
    }

    std::uint64_t g = 0;
    for (std::uint64_t x : a_) g = std::gcd(g, x);
    for (std::uint64_t x : b_) g = std::gcd(g, x);
    primitive_ = (g == 1);
}

void ParamSet::require_balanced(const char* op) const {
    if (!balanced_)
        throw UnbalancedInput(std::string(op) + ": unbalanced parameter set (sum(a) = " +
                              std::to_string(sum_a_) + ", sum(b) = " + std::to_string(sum_b_) + ")");
}

ParamSet canonicalize(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    // multiset difference in both directions
    std::vector<std::uint64_t> ra, rb;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++i; ++j; }
        else if (a[i] < b[j]) ra.push_back(a[i++]);
        else rb.push_back(b[j++]);
    }
    ra.insert(ra.end(), a.begin() + i, a.end());
    rb.insert(rb.end(), b.begin() + j, b.end());

    if (ra.empty() || rb.empty())
        throw DegenerateInput("degenerate parameter set: a and b cancel completely (f is identically 0)");

    std::uint64_t g = 0;
    for (std::uint64_t x : ra) g = std::gcd(g, x);
    for (std::uint64_t x : rb) g = std::gcd(g, x);
    if (g > 1) {
        for (auto& x : ra) x /= g;
        for (auto& x : rb) x /= g;
    }
    return ParamSet(std::move(ra), std::move(rb));
}

}  // namespace floorsum
