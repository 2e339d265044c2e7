#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "lensinv/lens_invariants.hpp"
#include "lensinv/rt_oracle.hpp"

namespace lensinv {

/// Branch label with eta folded in: "CaseOne", "CaseTwo(+1)", "CaseTwo(-1)", "Zero".
inline std::string branch_label(Branch b, int eta)
{
    if (b != Branch::case_two)
        return std::string(to_string(b));
    return eta > 0 ? "CaseTwo(+1)" : "CaseTwo(-1)";
}

struct SweepTask {
    LensSpace lens;
    std::int64_t r;
};

/// All (L(p,q), r) with p <= max_p and 0 <= q < p coprime, sorted by (p, q, r).
inline std::vector<SweepTask> sweep_tasks(std::int64_t max_p, const std::vector<std::int64_t>& levels)
{
    std::vector<std::int64_t> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SweepTask> tasks;
    for (std::int64_t p = 1; p <= max_p; ++p) {
        for (std::int64_t q = 0; q < p; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            for (auto r : sorted)
                tasks.push_back({make_lens_space(p, q), r});
        }
    }
    return tasks;
}

/// Runs `fn` over tasks on `jobs` threads; results keep the task order.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(const std::vector<SweepTask>& tasks, unsigned jobs, Fn fn)
{
    std::vector<Result> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = fn(tasks[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

struct SweepSummary {
    std::vector<VerifyReport> reports;
    std::map<std::string, std::size_t> branch_counts;
    std::size_t mismatches = 0;
    double worst_error = 0.0;
    bool all_direct = true;
    bool all_conjugate = true;
    /// convention name -> (integral count, match count) over CaseTwo instances.
    std::map<std::string, std::pair<std::size_t, std::size_t>> convention_tally;

    /// Every instance matched and one orientation reading fits all of them.
    bool passed() const { return mismatches == 0 && (all_direct || all_conjugate); }

    std::string match_kind() const
    {
        if (all_direct)
            return "direct";
        if (all_conjugate)
            return "conjugate";
        return "inconsistent";
    }
};

inline SweepSummary summarize(std::vector<VerifyReport> reports)
{
    SweepSummary s;
    for (const auto& rep : reports) {
        ++s.branch_counts[branch_label(rep.branch, rep.eta)];
        if (rep.match == MatchKind::none)
            ++s.mismatches;
        s.worst_error = std::max(s.worst_error, rep.abs_error);
        s.all_direct = s.all_direct && rep.direct_ok;
        s.all_conjugate = s.all_conjugate && rep.conjugate_ok;
        for (const auto& c : rep.conventions) {
            auto& tally = s.convention_tally[std::string(to_string(c.convention))];
            tally.first += c.integral ? 1 : 0;
            tally.second += c.match != MatchKind::none ? 1 : 0;
        }
    }
    s.reports = std::move(reports);
    return s;
}

inline SweepSummary verify_sweep(std::int64_t max_p, const std::vector<std::int64_t>& levels, double tolerance,
                                 unsigned jobs = std::max(1u, std::thread::hardware_concurrency()))
{
    const auto tasks = sweep_tasks(max_p, levels);
    auto reports = parallel_map<VerifyReport>(tasks, jobs, [tolerance](const SweepTask& t) {
        return verify(t.lens, t.r, tolerance);
    });
    return summarize(std::move(reports));
}

} // namespace lensinv
