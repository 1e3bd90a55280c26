#include "floorsum/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace floorsum {

Int evaluate(const ParamSet& p, const Rational& x) {
    const Int& num = numerator(x);
    const Int& den = denominator(x);
    Int acc = 0;
    for (std::uint64_t v : p.a()) acc += floor_div(num * v, den);
    for (std::uint64_t v : p.b()) acc -= floor_div(num * v, den);
    return acc;
}

std::vector<Rational> breakpoints(const ParamSet& p) {
    p.require_balanced("breakpoints");
    std::vector<Rational> pts;
    auto add_side = [&pts](const std::vector<std::uint64_t>& side) {
        std::uint64_t prev = 0;
        for (std::uint64_t v : side) {
            if (v == prev) continue;  // sorted, duplicates contribute nothing new
            prev = v;
            for (std::uint64_t n = 1; n <= v; ++n) pts.emplace_back(n, v);
        }
    };
    add_side(p.a());
    add_side(p.b());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

StepProfile profile(const ParamSet& p) {
    StepProfile prof;
    prof.points = breakpoints(p);
    prof.values.reserve(prof.points.size());
    for (const Rational& c : prof.points) {
        if (c == 1) break;  // last interval ends at 1; f(1) belongs to the next period
        Int v = evaluate(p, c);
        prof.values.push_back(static_cast<std::int64_t>(v));
    }
    return prof;
}

std::int64_t StepProfile::value_min() const {
    std::int64_t m = 0;  // [0, c_1) carries 0
    for (std::int64_t v : values) m = std::min(m, v);
    return m;
}

std::int64_t StepProfile::value_max() const {
    std::int64_t m = 0;
    for (std::int64_t v : values) m = std::max(m, v);
    return m;
}

Rational StepProfile::mean_square() const {
    Rational total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        // values[i] lives on [points[i], points[i+1])
        Rational len = points[i + 1] - points[i];
        total += Rational(Int(values[i]) * values[i]) * len;
    }
    return total;
}

Extrema extrema(const ParamSet& p) {
    StepProfile prof = profile(p);
    return Extrema{prof.value_min(), prof.value_max()};
}

bool is_nonnegative(const ParamSet& p) {
    return extrema(p).min >= 0;
}

Rational mean_square(const ParamSet& p) {
    return profile(p).mean_square();
}

}  // namespace floorsum
