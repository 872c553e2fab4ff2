#include "cbc/retrieval.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "cbc/combinatorics.hpp"
#include "cbc/errors.hpp"

namespace cbc {

std::optional<int> RetrievalPlan::server_for(int file) const {
    for (const auto& [f, s] : assignment)
        if (f == file) return s;
    return std::nullopt;
}

namespace {

// Kuhn's augmenting-path matching on a demand of at most 64 files.
class Matcher {
public:
    Matcher(std::vector<ServerSet> reach, int m) : reach_(std::move(reach)), owner_(m + 1, -1) {}

    // Tries to match demand slot `f`; marks every slot visited along alternating paths.
    bool augment(int f, std::vector<char>& visited) {
        visited[f] = 1;
        for (int s : reach_[f].elements()) {
            if (seen_server_.contains(s)) continue;
            seen_server_.insert(s);
            if (owner_[s] < 0 || augment(owner_[s], visited)) {
                owner_[s] = f;
                return true;
            }
        }
        return false;
    }

    // The lowest free server wins outright; only then search for an augmenting path.
    bool add(int f, std::vector<char>& visited) {
        for (int s : reach_[f].elements())
            if (owner_[s] < 0) {
                owner_[s] = f;
                return true;
            }
        seen_server_ = ServerSet{};
        return augment(f, visited);
    }

    const std::vector<int>& owner() const { return owner_; }

private:
    std::vector<ServerSet> reach_;
    std::vector<int> owner_;
    ServerSet seen_server_;
};

}  // namespace

RetrievalOutcome plan_retrieval(const BatchCode& code, const CodeParams& p, const Demand& d,
                                const Availability& avail) {
    using Reason = InfeasibleDemand::Reason;
    validate_params(p);
    if (code.m() != p.m || code.n() != p.n)
        throw ContractError("code is " + std::to_string(code.m()) + "x" + std::to_string(code.n()) +
                            " but parameters are " + p.to_string());

    if (static_cast<int>(d.files.size()) > p.k) return InfeasibleDemand{Reason::DemandTooLarge, {}};
    const ServerSet live = avail.servers & ServerSet::full(p.m);
    if (live.size() < p.m - p.r) return InfeasibleDemand{Reason::TooFewServers, {}};
    std::vector<int> files = d.files;
    std::sort(files.begin(), files.end());
    if (std::adjacent_find(files.begin(), files.end()) != files.end() ||
        (!files.empty() && (files.front() < 1 || files.back() > code.n())))
        return InfeasibleDemand{Reason::UnknownFile, {}};

    const int count = static_cast<int>(files.size());
    std::vector<ServerSet> reach(count);
    for (int f = 0; f < count; ++f) reach[f] = code.column(files[f]) & live;

    Matcher matcher(reach, p.m);
    for (int f = 0; f < count; ++f) {
        std::vector<char> visited(count, 0);
        if (!matcher.add(f, visited)) {
            InfeasibleDemand fail{Reason::HallViolation, {}};
            for (int g = 0; g < count; ++g)
                if (visited[g]) fail.witness.push_back(files[g]);
            std::sort(fail.witness.begin(), fail.witness.end());
            return fail;
        }
    }

    RetrievalPlan plan;
    plan.assignment.resize(count);
    for (int f = 0; f < count; ++f) plan.assignment[f].first = files[f];
    for (int s = 1; s <= p.m; ++s) {
        const int f = matcher.owner()[s];
        if (f >= 0) plan.assignment[f].second = s;
    }
    return plan;
}

bool plan_is_valid(const BatchCode& code, const Demand& d, const Availability& avail, const RetrievalPlan& plan) {
    if (plan.assignment.size() != d.files.size()) return false;
    std::vector<int> wanted = d.files, served;
    for (const auto& [file, server] : plan.assignment) served.push_back(file);
    std::sort(wanted.begin(), wanted.end());
    std::sort(served.begin(), served.end());
    if (wanted != served) return false;
    ServerSet used;
    for (const auto& [file, server] : plan.assignment) {
        if (file < 1 || file > code.n()) return false;
        if (!code.column(file).contains(server) || !avail.servers.contains(server)) return false;
        if (used.contains(server)) return false;
        used.insert(server);
    }
    return true;
}

bool hall_witness_is_valid(const BatchCode& code, const Availability& avail, const std::vector<int>& witness) {
    if (witness.empty()) return false;
    ServerSet seen;
    for (int f : witness) {
        if (f < 1 || f > code.n()) return false;
        seen = seen | (code.column(f) & avail.servers);
    }
    return seen.size() < static_cast<int>(witness.size());
}

namespace {

// First failure among demands whose first file lies in the given set, or nullopt.
std::optional<ServiceFailure> scan_demands(const BatchCode& code, const CodeParams& p, int first_file_stride,
                                           int first_file_offset, const std::atomic<long>& best_rank_so_far,
                                           long& rank_out) {
    const ServerSet all = ServerSet::full(p.m);
    long rank = 0;
    for (Combination demand(p.n, p.k); demand.valid(); demand.next(), ++rank) {
        if ((demand.current().front() - 1) % first_file_stride != first_file_offset) continue;
        if (rank > best_rank_so_far.load(std::memory_order_relaxed)) return std::nullopt;
        const Demand d{demand.current()};
        for (Combination down(p.m, p.r); down.valid(); down.next()) {
            const Availability avail{all - ServerSet(std::span<const int>(down.current()))};
            if (std::holds_alternative<InfeasibleDemand>(plan_retrieval(code, p, d, avail))) {
                rank_out = rank;
                return ServiceFailure{d, avail};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ServiceFailure> exhaustive_service_check(const BatchCode& code, const CodeParams& p, int jobs) {
    validate_params(p);
    if (code.m() != p.m || code.n() != p.n) throw ContractError("code dimensions do not match " + p.to_string());
    jobs = std::max(1, std::min(jobs, p.n));

    std::atomic<long> best_rank{std::numeric_limits<long>::max()};
    std::vector<std::optional<ServiceFailure>> found(jobs);
    std::vector<long> ranks(jobs, std::numeric_limits<long>::max());

    auto worker = [&](int w) {
        long rank = 0;
        found[w] = scan_demands(code, p, jobs, w, best_rank, rank);
        if (found[w]) {
            ranks[w] = rank;
            long cur = best_rank.load();
            while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }

    int best = -1;
    for (int w = 0; w < jobs; ++w)
        if (found[w] && (best < 0 || ranks[w] < ranks[best])) best = w;
    if (best < 0) return std::nullopt;
    return found[best];
}

}  // namespace cbc
