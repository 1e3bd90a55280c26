#pragma once

#include "floorsum/numeric.hpp"
#include "floorsum/param_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace floorsum::search {

// A bounded catalogue run: all balanced, reduced, primitive parameter sets
// with height D, length drawn from `lengths`, and common sum <= max_sum whose
// step function is nonnegative.
struct SearchConfig {
    std::int64_t d = 1;
    std::uint64_t max_sum = 0;
    std::vector<std::uint32_t> lengths;  // each > d and of the same parity
    unsigned workers = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    std::string output_path;      // empty: caller handles output
    bool strict_resume = false;
    std::uint64_t verify_horizon = 100;

    // Sorts and deduplicates lengths; throws std::invalid_argument on bad fields.
    void validate();
};

struct CatalogEntry {
    std::vector<std::uint64_t> a, b;  // canonical (sorted, disjoint, gcd 1)
    std::uint64_t s = 0;
    std::uint32_t length = 0;
    std::int64_t height = 0;
    std::int64_t min = 0, max = 0;
    Rational mean_square;
    std::uint64_t verified_n = 0;  // integrality horizon the entry passed

    bool operator==(const CatalogEntry&) const = default;
};

// (s, smallest element of a) — the unit of parallel work and of checkpoint
// granularity. A unit either completed (its survivors are durable) or runs
// again from scratch; resume never revisits a completed unit and never skips
// a pending one.
struct WorkUnit {
    std::uint64_t s = 0;
    std::uint32_t a1 = 0;

    auto operator<=>(const WorkUnit&) const = default;
};

struct CompletedUnit {
    WorkUnit unit;
    std::uint64_t examined = 0;  // candidates that reached the sign test
    std::vector<CatalogEntry> survivors;
};

struct SearchState {
    std::string config_hash;
    std::vector<CompletedUnit> completed;
};

struct RunStats {
    std::uint64_t units_total = 0;
    std::uint64_t units_resumed = 0;
    std::uint64_t candidates_examined = 0;
    std::uint64_t survivors = 0;
};

// Deterministic unit list for a config, (s, a1) ascending.
std::vector<WorkUnit> plan_units(const SearchConfig& cfg);

// Hash covering the fields that determine the result set (not workers/paths).
std::string config_hash(const SearchConfig& cfg);

// Runs one unit to completion. Pure function of (cfg, unit).
CompletedUnit process_unit(const SearchConfig& cfg, const WorkUnit& unit);

// Full run: enumerate + prune + test, parallel over units, checkpointing as
// configured. The returned catalogue is sorted by (s, length, a, b) and is
// identical for any worker count and across kill/resume.
std::vector<CatalogEntry> run_search(const SearchConfig& cfg, RunStats* stats = nullptr);

// One catalogue line, stable byte-for-byte:
// {"a":[...],"b":[...],"s":..,"length":..,"height":..,"min":..,"max":..,
//  "mean_square":"num/den","verified_n":..}
std::string entry_to_json(const CatalogEntry& e);
void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> read_catalog(std::istream& is);

// Atomic (write-to-temp, rename) checkpoint save.
void checkpoint_save(const SearchState& state, const std::string& path);

// Absent or unreadable checkpoint: returns nullopt after a stderr warning,
// or throws when strict. A well-formed file round-trips exactly.
std::optional<SearchState> checkpoint_load(const std::string& path, bool strict);

struct CatalogMismatch {
    std::size_t index = 0;
    std::string reason;
};

struct VerifyReport {
    std::uint64_t entries = 0;
    std::vector<CatalogMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

// Re-derives every entry from scratch: canonical-form flags, extrema and
// sign, exact mean square, and an integrality scan to `horizon`.
VerifyReport catalog_verify(const std::vector<CatalogEntry>& entries, std::uint64_t horizon);

}  // namespace floorsum::search
