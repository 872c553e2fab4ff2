#include <doctest.h>

#include <numeric>
#include <random>

#include "cbc/combinatorics.hpp"
#include "cbc/constructions.hpp"
#include "cbc/retrieval.hpp"
#include "cbc/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cbc;

namespace {

const RetrievalPlan& plan_of(const RetrievalOutcome& o) {
    REQUIRE(std::holds_alternative<RetrievalPlan>(o));
    return std::get<RetrievalPlan>(o);
}

}  // namespace

TEST_CASE("plan_retrieval on an all-ones code picks lowest servers") {
    const BatchCode ones(3, std::vector<ServerSet>(3, ServerSet::full(3)));
    const auto plan = plan_of(plan_retrieval(ones, {3, 2, 3, 1}, {{1, 2}}, {ServerSet{1, 2}}));
    CHECK(plan.assignment == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
}

TEST_CASE("plan_retrieval on the tall reference matrix") {
    // A_1 & avail = {4}, A_4 & avail = {4,5,6}: file 1 is forced onto 4, file 4 takes 5.
    const Availability avail{ServerSet{4, 5, 6}};
    const Demand d{{1, 4}};
    const auto plan = plan_of(plan_retrieval(fixtures::tall(), {4, 3, 6, 3}, d, avail));
    CHECK(plan.assignment == std::vector<std::pair<int, int>>{{1, 4}, {4, 5}});
    CHECK(plan_is_valid(fixtures::tall(), d, avail, plan));
    CHECK(plan.server_for(4) == 5);
    CHECK_FALSE(plan.server_for(2).has_value());
}

TEST_CASE("plan_retrieval reports a Hall witness") {
    const BatchCode code(3, {ServerSet{1}, ServerSet{1}});
    const Availability avail{ServerSet{1, 2}};
    const auto outcome = plan_retrieval(code, {2, 2, 3, 1}, {{1, 2}}, avail);
    REQUIRE(std::holds_alternative<InfeasibleDemand>(outcome));
    const auto& fail = std::get<InfeasibleDemand>(outcome);
    CHECK(fail.reason == InfeasibleDemand::Reason::HallViolation);
    CHECK(fail.witness == std::vector<int>{1, 2});
    CHECK(hall_witness_is_valid(code, avail, fail.witness));
}

TEST_CASE("plan_retrieval bound checks") {
    const BatchCode code = fixtures::tall();
    const CodeParams p{4, 3, 6, 3};
    auto reason = [&](const Demand& d, ServerSet avail) {
        const auto o = plan_retrieval(code, p, d, {avail});
        REQUIRE(std::holds_alternative<InfeasibleDemand>(o));
        return std::get<InfeasibleDemand>(o).reason;
    };
    CHECK(reason({{1, 2, 3, 4}}, ServerSet::full(6)) == InfeasibleDemand::Reason::DemandTooLarge);
    CHECK(reason({{1, 2}}, ServerSet{1, 2}) == InfeasibleDemand::Reason::TooFewServers);
    CHECK(reason({{1, 5}}, ServerSet::full(6)) == InfeasibleDemand::Reason::UnknownFile);
    CHECK(reason({{2, 2}}, ServerSet::full(6)) == InfeasibleDemand::Reason::UnknownFile);
    // smaller demands and larger availabilities are fine
    CHECK(std::holds_alternative<RetrievalPlan>(plan_retrieval(code, p, {{3}}, {ServerSet::full(6)})));
}

TEST_CASE("exhaustive_service_check") {
    CHECK_FALSE(exhaustive_service_check(fixtures::max_k(), {7, 3, 6, 3}).has_value());
    CHECK_FALSE(exhaustive_service_check(fixtures::large_n(), {8, 2, 4, 1}).has_value());

    // drop column 7 of the large-n reference matrix: result must match column-union verify
    const BatchCode fig = fixtures::large_n();
    std::vector<ServerSet> cols(fig.columns().begin(), fig.columns().end());
    cols.erase(cols.begin() + 6);
    const BatchCode mutated(4, cols);
    const CodeParams p{7, 2, 4, 1};
    CHECK(exhaustive_service_check(mutated, p).has_value() == !verify(mutated, p, VerifyStrategy::ColumnUnion).ok);

    // two copies of {1,2} fail at demand {1,2} with server 1 down... or 2 down; first in order is server 1
    const BatchCode bad(3, {ServerSet{1, 2}, ServerSet{1, 2}});
    const auto fail = exhaustive_service_check(bad, {2, 2, 3, 1});
    REQUIRE(fail.has_value());
    CHECK(fail->demand.files == std::vector<int>{1, 2});
    CHECK(fail->availability.servers == ServerSet{2, 3});
}

TEST_CASE("exhaustive_service_check result does not depend on the worker count") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 3), n = 3 + static_cast<int>(rng() % 4);
        std::vector<ServerSet> cols;
        for (int j = 0; j < n; ++j) cols.emplace_back(1 + rng() % ((1u << m) - 1));
        const BatchCode code(m, cols);
        const int r = static_cast<int>(rng() % (m - 1));
        const int k = 1 + static_cast<int>(rng() % std::min(n, m - r));
        const CodeParams p{n, k, m, r};
        const auto serial = exhaustive_service_check(code, p, 1);
        const auto parallel = exhaustive_service_check(code, p, 3);
        REQUIRE(serial.has_value() == parallel.has_value());
        if (serial) {
            CHECK(serial->demand.files == parallel->demand.files);
            CHECK(serial->availability.servers == parallel->availability.servers);
        }
    }
}

TEST_CASE("definitional check equals column-union verify, exhaustive m <= 4, n <= 5") {
    long checked = 0;
    for (int m = 1; m <= 4; ++m) {
        const int subsets = 1 << m;
        for (int n = 1; n <= 5; ++n) {
            std::vector<int> idx(n, 0);
            for (;;) {
                std::vector<ServerSet> cols;
                for (int v : idx) cols.emplace_back(static_cast<std::uint64_t>(v));
                const BatchCode code(m, cols);
                for (int r = 0; r < m; ++r)
                    for (int k = 1; k <= std::min(n, m - r); ++k) {
                        const CodeParams p{n, k, m, r};
                        const bool def = !exhaustive_service_check(code, p).has_value();
                        REQUIRE(def == verify(code, p, VerifyStrategy::ColumnUnion).ok);
                        ++checked;
                    }
                int pos = n - 1;
                while (pos >= 0 && idx[pos] == subsets - 1) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int q = pos + 1; q < n; ++q) idx[q] = idx[pos];
            }
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("definitional check equals column-union verify on random larger codes") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 5 + static_cast<int>(rng() % 3), n = 4 + static_cast<int>(rng() % 4);
        std::vector<ServerSet> cols;
        // bias toward dense columns so a fair share of codes are accepted
        for (int j = 0; j < n; ++j) cols.emplace_back((rng() | rng()) % (1u << m));
        const BatchCode code(m, cols);
        const int r = static_cast<int>(rng() % (m - 1));
        const int k = 1 + static_cast<int>(rng() % std::min(n, m - r));
        const CodeParams p{n, k, m, r};
        CHECK(!exhaustive_service_check(code, p).has_value() == verify(code, p, VerifyStrategy::ColumnUnion).ok);
    }
}

TEST_CASE("plans are monotone, valid, deterministic; witnesses are sound") {
    std::mt19937 rng(23);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 4), n = 2 + static_cast<int>(rng() % 5);
        std::vector<ServerSet> cols;
        for (int j = 0; j < n; ++j) cols.emplace_back(rng() % (1u << m));
        const BatchCode code(m, cols);
        const int r = static_cast<int>(rng() % m);
        const int k = 1 + static_cast<int>(rng() % std::min(n, m - r));
        const CodeParams p{n, k, m, r};

        std::vector<int> files(n);
        std::iota(files.begin(), files.end(), 1);
        std::shuffle(files.begin(), files.end(), rng);
        files.resize(1 + rng() % k);
        ServerSet down;
        const int down_count = static_cast<int>(rng() % (r + 1));
        while (down.size() < down_count) down.insert(1 + static_cast<int>(rng() % m));
        const Demand d{files};
        const Availability avail = Availability::all_but(m, down);

        const auto outcome = plan_retrieval(code, p, d, avail);
        CHECK(outcome == plan_retrieval(code, p, d, avail));

        std::vector<oracle::Mask> reach;
        for (int f : files) reach.push_back(static_cast<oracle::Mask>((code.column(f) & avail.servers).mask()));
        const bool brute = oracle::has_sdr(reach);

        if (const auto* plan = std::get_if<RetrievalPlan>(&outcome)) {
            ++feasible;
            CHECK(brute);
            CHECK(plan_is_valid(code, d, avail, *plan));
            // a sub-demand with one more server available stays feasible
            Demand smaller{std::vector<int>(files.begin(), files.end() - (files.size() > 1 ? 1 : 0))};
            Availability more{avail.servers | ServerSet::full(m)};
            CHECK(std::holds_alternative<RetrievalPlan>(plan_retrieval(code, p, smaller, more)));
        } else {
            ++infeasible;
            CHECK_FALSE(brute);
            const auto& fail = std::get<InfeasibleDemand>(outcome);
            REQUIRE(fail.reason == InfeasibleDemand::Reason::HallViolation);
            CHECK(hall_witness_is_valid(code, avail, fail.witness));
        }
    }
    CHECK(feasible > 100);
    CHECK(infeasible > 100);
}
