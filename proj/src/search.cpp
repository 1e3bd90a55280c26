#include "floorsum/search.hpp"

#include "floorsum/factorial_ratio.hpp"
#include "floorsum/step_function.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace floorsum::search {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kMaxSumCap = 2000;

bool entry_less(const CatalogEntry& x, const CatalogEntry& y) {
    if (x.s != y.s) return x.s < y.s;
    if (x.length != y.length) return x.length < y.length;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

// ---------------------------------------------------------------------------
// candidate testing
// ---------------------------------------------------------------------------

struct Scratch {
    std::vector<std::uint32_t> distinct;
    std::vector<std::pair<std::int64_t, std::int64_t>> fracs;  // (num, den), reduced
};

// Early-exit sign test: evaluates f at every breakpoint in (0,1), ascending,
// and stops at the first negative value. x = 1 is skipped (f(1) = 0 for a
// balanced set). Machine arithmetic throughout; parts stay <= kMaxSumCap.
bool nonneg_scan(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                 Scratch& sc) {
    sc.distinct.clear();
    auto merge_side = [&sc](const std::vector<std::uint32_t>& side) {
        for (std::uint32_t v : side)
            if (sc.distinct.empty() || sc.distinct.back() != v) sc.distinct.push_back(v);
    };
    merge_side(a);
    merge_side(b);
    std::sort(sc.distinct.begin(), sc.distinct.end());
    sc.distinct.erase(std::unique(sc.distinct.begin(), sc.distinct.end()), sc.distinct.end());

    sc.fracs.clear();
    for (std::uint32_t v : sc.distinct)
        for (std::uint32_t n = 1; n < v; ++n) {
            const std::uint32_t g = std::gcd(n, v);
            sc.fracs.emplace_back(n / g, v / g);
        }
    std::sort(sc.fracs.begin(), sc.fracs.end(), [](const auto& x, const auto& y) {
        return x.first * y.second < y.first * x.second;
    });
    sc.fracs.erase(std::unique(sc.fracs.begin(), sc.fracs.end()), sc.fracs.end());

    for (const auto& [p, q] : sc.fracs) {
        std::int64_t f = 0;
        for (std::uint32_t v : a) f += (v * p) / q;
        for (std::uint32_t v : b) f -= (v * p) / q;
        if (f < 0) return false;
    }
    return true;
}

CatalogEntry make_entry(const SearchConfig& cfg, const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
    ParamSet p(std::vector<std::uint64_t>(a.begin(), a.end()),
               std::vector<std::uint64_t>(b.begin(), b.end()));
    const Extrema ex = extrema(p);
    if (auto fail = integrality_scan(p, cfg.verify_horizon))
        throw std::logic_error("sign test and factorial-ratio oracle disagree at n = " +
                               std::to_string(*fail));
    CatalogEntry e;
    e.a = p.a();
    e.b = p.b();
    e.s = p.sum();
    e.length = static_cast<std::uint32_t>(p.length());
    e.height = p.height();
    e.min = ex.min;
    e.max = ex.max;
    e.mean_square = mean_square(p);
    e.verified_n = cfg.verify_horizon;
    return e;
}

// ---------------------------------------------------------------------------
// enumeration: for a unit (s, a1), walk every pair (a, b) of ascending
// partitions of s with a_1 = a1, |a| = K, |b| = L, disjoint supports and
// gcd 1. b is generated first; the primary prune is the necessary condition
// max(a) > max(b) (if the overall maximum sat in b, f(1/max) would already
// be negative).
// ---------------------------------------------------------------------------

struct UnitRun {
    const SearchConfig& cfg;
    std::uint64_t s;
    std::uint32_t a1;

    std::vector<std::uint32_t> a_parts, b_parts;
    std::vector<std::uint8_t> support;  // of b, indexed by value
    std::uint32_t k = 0, l = 0;
    std::uint32_t cap_a = 0;  // largest value the a side can reach
    std::uint32_t b_max = 0;
    std::uint32_t gcd_b = 0;
    Scratch scratch;

    CompletedUnit out;

    explicit UnitRun(const SearchConfig& c, const WorkUnit& u)
        : cfg(c), s(u.s), a1(u.a1), support(u.s + 1, 0) {
        out.unit = u;
    }

    void candidate() {
        ++out.examined;
        if (nonneg_scan(a_parts, b_parts, scratch))
            out.survivors.push_back(make_entry(cfg, a_parts, b_parts));
    }

    void extend_a(std::uint32_t slots, std::uint32_t last, std::uint32_t remaining,
                  std::uint32_t g) {
        if (slots == 1) {
            const std::uint32_t x = remaining;
            if (x < last || x <= b_max || support[x]) return;
            if (std::gcd(g, x) != 1) return;
            a_parts.push_back(x);
            candidate();
            a_parts.pop_back();
            return;
        }
        for (std::uint32_t x = last; x <= remaining / slots; ++x) {
            // highest value still reachable in the final slot
            if (remaining - static_cast<std::uint64_t>(x) * (slots - 1) <= b_max) break;
            if (support[x]) continue;
            a_parts.push_back(x);
            extend_a(slots - 1, x, remaining - x, std::gcd(g, x));
            a_parts.pop_back();
        }
    }

    void a_side() {
        if (k == 1) {
            // a = {s}; disjointness from b and s > b_max are already enforced
            if (std::gcd(gcd_b, static_cast<std::uint32_t>(s)) != 1) return;
            a_parts.assign(1, static_cast<std::uint32_t>(s));
            candidate();
            return;
        }
        a_parts.assign(1, a1);
        extend_a(k - 1, a1, static_cast<std::uint32_t>(s) - a1, std::gcd(gcd_b, a1));
    }

    void complete_b() {
        b_max = b_parts.back();
        gcd_b = b_parts.front();
        for (std::uint32_t v : b_parts) gcd_b = std::gcd(gcd_b, v);
        for (std::uint32_t v : b_parts) support[v] = 1;
        a_side();
        for (std::uint32_t v : b_parts) support[v] = 0;
    }

    void extend_b(std::uint32_t slots, std::uint32_t last, std::uint32_t remaining) {
        if (slots == 1) {
            const std::uint32_t x = remaining;
            if (x < last || x >= cap_a || x == a1) return;
            b_parts.push_back(x);
            complete_b();
            b_parts.pop_back();
            return;
        }
        // even the flattest completion pushes max(b) to ceil(remaining/slots)
        if ((remaining + slots - 1) / slots >= cap_a) return;
        for (std::uint32_t x = last; x <= remaining / slots; ++x) {
            if (x == a1) continue;
            b_parts.push_back(x);
            extend_b(slots - 1, x, remaining - x);
            b_parts.pop_back();
        }
    }

    void run() {
        for (std::uint32_t len : cfg.lengths) {
            k = (len - static_cast<std::uint32_t>(cfg.d)) / 2;
            l = len - k;
            if (s < l || s < static_cast<std::uint64_t>(k) * a1) continue;
            if (k == 1 && a1 != s) continue;
            cap_a = (k == 1) ? static_cast<std::uint32_t>(s)
                             : static_cast<std::uint32_t>(s - static_cast<std::uint64_t>(a1) * (k - 1));
            b_parts.clear();
            extend_b(l, 1, static_cast<std::uint32_t>(s));
        }
    }
};

// ---------------------------------------------------------------------------
// checkpoint / catalogue serialization
// ---------------------------------------------------------------------------

ordered_json entry_to_ordered(const CatalogEntry& e) {
    ordered_json j;
    j["a"] = e.a;
    j["b"] = e.b;
    j["s"] = e.s;
    j["length"] = e.length;
    j["height"] = e.height;
    j["min"] = e.min;
    j["max"] = e.max;
    j["mean_square"] = rational_str(e.mean_square);
    j["verified_n"] = e.verified_n;
    return j;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
    CatalogEntry e;
    e.a = j.at("a").get<std::vector<std::uint64_t>>();
    e.b = j.at("b").get<std::vector<std::uint64_t>>();
    e.s = j.at("s").get<std::uint64_t>();
    e.length = j.at("length").get<std::uint32_t>();
    e.height = j.at("height").get<std::int64_t>();
    e.min = j.at("min").get<std::int64_t>();
    e.max = j.at("max").get<std::int64_t>();
    e.mean_square = parse_rational(j.at("mean_square").get<std::string>());
    e.verified_n = j.at("verified_n").get<std::uint64_t>();
    return e;
}

void atomic_write(const std::string& path, const std::string& payload) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
        os << payload;
        if (!os.flush()) throw std::runtime_error("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename " + tmp + " -> " + path + " failed");
}

}  // namespace

void SearchConfig::validate() {
    if (d < 1 || d > 500) throw std::invalid_argument("search: D must lie in [1, 500]");
    if (max_sum < 1 || max_sum > kMaxSumCap)
        throw std::invalid_argument("search: max_sum must lie in [1, " + std::to_string(kMaxSumCap) + "]");
    if (lengths.empty()) throw std::invalid_argument("search: at least one length required");
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (std::uint32_t len : lengths) {
        if (len > 999) throw std::invalid_argument("search: length beyond supported range");
        if (len < d + 2 || (len - d) % 2 != 0)
            throw std::invalid_argument(
                "search: each length must be >= D+2 and of the same parity as D (got " +
                std::to_string(len) + " with D=" + std::to_string(d) + ")");
    }
    if (workers == 0) workers = 1;
}

std::vector<WorkUnit> plan_units(const SearchConfig& cfg) {
    std::vector<WorkUnit> units;
    for (std::uint64_t s = 1; s <= cfg.max_sum; ++s) {
        std::uint64_t a1_hi = 0;
        bool single_a = false;
        for (std::uint32_t len : cfg.lengths) {
            const std::uint64_t k = (len - cfg.d) / 2;
            const std::uint64_t l = len - k;
            if (s < l || s < k) continue;
            if (k == 1) single_a = true;
            else a1_hi = std::max(a1_hi, s / k);
        }
        for (std::uint64_t a1 = 1; a1 <= a1_hi; ++a1)
            units.push_back({s, static_cast<std::uint32_t>(a1)});
        if (single_a && s > a1_hi) units.push_back({s, static_cast<std::uint32_t>(s)});
    }
    return units;
}

std::string config_hash(const SearchConfig& cfg) {
    std::ostringstream os;
    os << "d=" << cfg.d << ";max_sum=" << cfg.max_sum << ";lengths=";
    for (std::size_t i = 0; i < cfg.lengths.size(); ++i)
        os << (i ? "," : "") << cfg.lengths[i];
    os << ";horizon=" << cfg.verify_horizon;
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CompletedUnit process_unit(const SearchConfig& cfg, const WorkUnit& unit) {
    UnitRun run(cfg, unit);
    run.run();
    std::sort(run.out.survivors.begin(), run.out.survivors.end(), entry_less);
    return std::move(run.out);
}

std::vector<CatalogEntry> run_search(const SearchConfig& cfg_in, RunStats* stats) {
    SearchConfig cfg = cfg_in;
    cfg.validate();
    const std::vector<WorkUnit> units = plan_units(cfg);
    const std::string hash = config_hash(cfg);

    std::map<WorkUnit, CompletedUnit> done;
    if (!cfg.checkpoint_path.empty()) {
        if (auto st = checkpoint_load(cfg.checkpoint_path, cfg.strict_resume)) {
            if (st->config_hash == hash) {
                for (auto& cu : st->completed) {
                    WorkUnit key = cu.unit;
                    done.emplace(key, std::move(cu));
                }
            } else if (cfg.strict_resume) {
                throw std::runtime_error("search: checkpoint was written for a different configuration");
            } else {
                std::cerr << "floorsum search: ignoring checkpoint for a different configuration\n";
            }
        }
    }
    const std::uint64_t resumed = done.size();

    std::vector<WorkUnit> pending;
    for (const WorkUnit& u : units)
        if (!done.contains(u)) pending.push_back(u);

    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr first_error;
    auto last_save = std::chrono::steady_clock::time_point{};

    auto save_locked = [&] {
        if (cfg.checkpoint_path.empty()) return;
        SearchState st;
        st.config_hash = hash;
        st.completed.reserve(done.size());
        for (const auto& [key, cu] : done) st.completed.push_back(cu);
        checkpoint_save(st, cfg.checkpoint_path);
    };

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            try {
                CompletedUnit result = process_unit(cfg, pending[i]);
                std::lock_guard<std::mutex> lock(mu);
                WorkUnit key = result.unit;
                done.emplace(key, std::move(result));
                const auto now = std::chrono::steady_clock::now();
                if (now - last_save >= std::chrono::milliseconds(25)) {
                    last_save = now;
                    save_locked();
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    unsigned n_threads = std::max(1u, cfg.workers);
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, std::max<std::size_t>(1, pending.size())));
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    save_locked();

    std::vector<CatalogEntry> entries;
    std::uint64_t examined = 0;
    for (const auto& [key, cu] : done) {
        examined += cu.examined;
        entries.insert(entries.end(), cu.survivors.begin(), cu.survivors.end());
    }
    std::sort(entries.begin(), entries.end(), entry_less);

    if (stats) {
        stats->units_total = units.size();
        stats->units_resumed = resumed;
        stats->candidates_examined = examined;
        stats->survivors = entries.size();
    }

    if (!cfg.output_path.empty()) {
        std::ostringstream os;
        write_catalog(os, entries);
        atomic_write(cfg.output_path, os.str());
    }
    return entries;
}

std::string entry_to_json(const CatalogEntry& e) {
    return entry_to_ordered(e).dump();
}

void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries) {
    for (const CatalogEntry& e : entries) os << entry_to_json(e) << "\n";
}

std::vector<CatalogEntry> read_catalog(std::istream& is) {
    std::vector<CatalogEntry> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(entry_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

void checkpoint_save(const SearchState& state, const std::string& path) {
    ordered_json j;
    j["format"] = 1;
    j["config_hash"] = state.config_hash;
    ordered_json completed = ordered_json::array();
    for (const CompletedUnit& cu : state.completed) {
        ordered_json u;
        u["s"] = cu.unit.s;
        u["a1"] = cu.unit.a1;
        u["examined"] = cu.examined;
        ordered_json survivors = ordered_json::array();
        for (const CatalogEntry& e : cu.survivors) survivors.push_back(entry_to_ordered(e));
        u["survivors"] = std::move(survivors);
        completed.push_back(std::move(u));
    }
    j["completed"] = std::move(completed);
    atomic_write(path, j.dump());
}

std::optional<SearchState> checkpoint_load(const std::string& path, bool strict) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        if (strict) throw std::runtime_error("search: checkpoint " + path + " is missing");
        return std::nullopt;
    }
    try {
        const nlohmann::json j = nlohmann::json::parse(is);
        SearchState st;
        st.config_hash = j.at("config_hash").get<std::string>();
        for (const auto& u : j.at("completed")) {
            CompletedUnit cu;
            cu.unit.s = u.at("s").get<std::uint64_t>();
            cu.unit.a1 = u.at("a1").get<std::uint32_t>();
            cu.examined = u.at("examined").get<std::uint64_t>();
            for (const auto& e : u.at("survivors")) cu.survivors.push_back(entry_from_json(e));
            st.completed.push_back(std::move(cu));
        }
        return st;
    } catch (const std::exception& ex) {
        if (strict)
            throw std::runtime_error("search: checkpoint " + path + " is unreadable: " + ex.what());
        std::cerr << "floorsum search: discarding unreadable checkpoint " << path << " ("
                  << ex.what() << ")\n";
        return std::nullopt;
    }
}

VerifyReport catalog_verify(const std::vector<CatalogEntry>& entries, std::uint64_t horizon) {
    VerifyReport report;
    report.entries = entries.size();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const CatalogEntry& e = entries[i];
        std::ostringstream why;
        try {
            ParamSet p(e.a, e.b);
            if (p.a() != e.a || p.b() != e.b) why << "entries not sorted ascending; ";
            if (!p.balanced() || !p.reduced() || !p.primitive())
                why << "not in canonical form (balanced=" << p.balanced()
                    << " reduced=" << p.reduced() << " primitive=" << p.primitive() << "); ";
            else {
                if (e.s != p.sum() || e.length != p.length() || e.height != p.height())
                    why << "header fields disagree with the parameter sets; ";
                const Extrema ex = extrema(p);
                if (ex.min < 0) {
                    for (const Rational& x : breakpoints(p)) {
                        const Int v = evaluate(p, x);
                        if (v < 0) {
                            why << "f(" << rational_str(x) << ") = " << v.str() << " < 0; ";
                            break;
                        }
                    }
                }
                if (ex.min != e.min || ex.max != e.max)
                    why << "extrema are (" << ex.min << ", " << ex.max << ") not (" << e.min
                        << ", " << e.max << "); ";
                if (mean_square(p) != e.mean_square) why << "mean square differs; ";
                if (auto fail = integrality_scan(p, horizon))
                    why << "u_n not integral at n = " << *fail << "; ";
            }
        } catch (const std::exception& ex) {
            why << "rejected: " << ex.what() << "; ";
        }
        if (!why.str().empty()) report.mismatches.push_back({i, why.str()});
    }
    return report;
}

}  // namespace floorsum::search
