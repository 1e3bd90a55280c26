#include "floorsum/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace floorsum {

std::vector<std::uint64_t> random_partition(std::mt19937_64& rng, std::uint64_t s,
                                            std::size_t parts) {
    if (parts == 0 || s < parts)
        throw std::invalid_argument("random_partition: need s >= parts >= 1");
    // random composition via cuts, then sort
    std::vector<std::uint64_t> cuts{0, s - parts};
    std::uniform_int_distribution<std::uint64_t> pick(0, s - parts);
    for (std::size_t i = 1; i < parts; ++i) cuts.push_back(pick(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::uint64_t> out;
    out.reserve(parts);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        out.push_back(cuts[i + 1] - cuts[i] + 1);
    std::sort(out.begin(), out.end());
    return out;
}

ParamSet random_balanced_reduced(std::mt19937_64& rng, std::uint64_t max_sum,
                                 std::size_t max_side) {
    if (max_sum < 3) throw std::invalid_argument("random_balanced_reduced: max_sum too small");
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        std::uniform_int_distribution<std::uint64_t> pick_s(3, max_sum);
        const std::uint64_t s = pick_s(rng);
        std::uniform_int_distribution<std::size_t> pick_side(1, max_side);
        std::size_t k = pick_side(rng), l = pick_side(rng);
        k = std::min<std::size_t>(k, s);
        l = std::min<std::size_t>(l, s);
        auto a = random_partition(rng, s, k);
        auto b = random_partition(rng, s, l);
        bool overlap = false;
        for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
            if (a[i] == b[j]) { overlap = true; break; }
            if (a[i] < b[j]) ++i; else ++j;
        }
        if (overlap) continue;
        return ParamSet(std::move(a), std::move(b));
    }
    throw std::runtime_error("random_balanced_reduced: rejection sampling failed");
}

ParamSet random_any(std::mt19937_64& rng, std::uint64_t max_value, std::size_t max_side) {
    std::uniform_int_distribution<std::size_t> pick_side(1, max_side);
    std::uniform_int_distribution<std::uint64_t> pick_v(1, max_value);
    std::vector<std::uint64_t> a(pick_side(rng)), b(pick_side(rng));
    for (auto& v : a) v = pick_v(rng);
    for (auto& v : b) v = pick_v(rng);
    return ParamSet(std::move(a), std::move(b));
}

}  // namespace floorsum
