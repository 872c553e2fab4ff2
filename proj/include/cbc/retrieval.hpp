#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cbc/batch_code.hpp"
#include "cbc/params.hpp"

namespace cbc {

/// Files requested together, 1-based.
struct Demand {
    std::vector<int> files;
};

/// Servers currently reachable.
struct Availability {
    ServerSet servers;

    static Availability all_but(int m, ServerSet down) { return {ServerSet::full(m) - down}; }
};

/// file -> server, one file per server.
struct RetrievalPlan {
    std::vector<std::pair<int, int>> assignment;  ///< (file, server), ascending by file

    std::optional<int> server_for(int file) const;
    friend bool operator==(const RetrievalPlan&, const RetrievalPlan&) = default;
};

struct InfeasibleDemand {
    enum class Reason {
        HallViolation,      ///< `witness` files see fewer than |witness| available servers
        DemandTooLarge,     ///< |demand| > k
        TooFewServers,      ///< |available| < m - r
        UnknownFile,        ///< a demanded file is not in {1..n} or repeats
    };
    Reason reason = Reason::HallViolation;
    std::vector<int> witness;  ///< ascending; set only for HallViolation

    friend bool operator==(const InfeasibleDemand&, const InfeasibleDemand&) = default;
};

using RetrievalOutcome = std::variant<RetrievalPlan, InfeasibleDemand>;

/// Finds a one-file-per-server assignment by augmenting paths. Files are matched in
/// ascending index; each augmenting search tries servers in ascending order, so the plan is
/// deterministic. On failure the witness is the set of files reachable by alternating
/// paths from the unmatched file.
RetrievalOutcome plan_retrieval(const BatchCode& code, const CodeParams& p, const Demand& d,
                                const Availability& avail);

/// True iff `plan` serves exactly the files of `d`, injectively, from available servers storing them.
bool plan_is_valid(const BatchCode& code, const Demand& d, const Availability& avail, const RetrievalPlan& plan);

/// True iff the witness files really see fewer available servers than their count.
bool hall_witness_is_valid(const BatchCode& code, const Availability& avail, const std::vector<int>& witness);

struct ServiceFailure {
    Demand demand;
    Availability availability;
};

/// Runs plan_retrieval on all C(n,k) * C(m,r) maximal pairs (k files, m - r servers).
/// Returns the lexicographically first failure (by demand, then by down-set), or nullopt.
/// `jobs` > 1 splits demands across threads; the reported failure does not depend on it.
std::optional<ServiceFailure> exhaustive_service_check(const BatchCode& code, const CodeParams& p, int jobs = 1);

}  // namespace cbc
