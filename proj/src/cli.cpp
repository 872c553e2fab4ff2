#include "cbc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cbc/batch_code.hpp"
#include "cbc/constructions.hpp"
#include "cbc/errors.hpp"
#include "cbc/graphs.hpp"
#include "cbc/retrieval.hpp"
#include "cbc/search.hpp"
#include "cbc/verify.hpp"

namespace cbc::cli {

namespace {

struct RunConfig {
    std::string params;  // packed "n,k,m,r"
    int n = -1, k = -1, m = -1, r = -1;
    std::string input;
    std::string output;
    std::string strategy = "auto";
    std::string demand;
    std::string down;
    std::uint64_t node_limit = SearchBudget{}.node_limit;
    double time_limit_s = std::chrono::duration<double>(SearchBudget{}.time_limit).count();
    int m_min = 1, m_max = 5, n_min = 1, n_max = 7;
    bool no_oracle = false;
    int jobs = 1;
    int girth = 3;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad integer '") + item + "' in " + what);
        }
    }
    return out;
}

// Merges --params with --n/--k/--m/--r; explicit flags win over unset packed values only.
CodeParams resolve_params(const RunConfig& c, bool require_all) {
    CodeParams p{c.n, c.k, c.m, c.r};
    if (!c.params.empty()) {
        const auto packed = parse_list(c.params, "--params");
        if (packed.size() != 4) throw UsageError("--params expects n,k,m,r");
        CodeParams q{packed[0], packed[1], packed[2], packed[3]};
        for (auto [mine, theirs] : {std::pair{&p.n, q.n}, {&p.k, q.k}, {&p.m, q.m}, {&p.r, q.r}}) {
            if (*mine >= 0 && *mine != theirs) throw UsageError("--params conflicts with an explicit flag");
            *mine = theirs;
        }
    }
    if (require_all && (p.n < 0 || p.k < 0 || p.m < 0 || p.r < 0))
        throw UsageError("parameters n, k, m, r are required (--params n,k,m,r or --n/--k/--m/--r)");
    return p;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SearchBudget budget_of(const RunConfig& c) {
    SearchBudget b;
    b.node_limit = c.node_limit;
    b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(c.time_limit_s * 1000.0));
    if (b.node_limit == 0 || b.time_limit.count() <= 0) throw UsageError("budgets must be positive");
    return b;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
    if (c.output.empty() || c.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw UsageError("cannot write " + c.output);
    f << text;
}

int do_construct(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const CodeParams p = resolve_params(c, true);
    validate_params(p);
    const SearchBudget budget = budget_of(c);
    const PackingProvider packings = [&](int k, int m, int r) { return compute_F(k, m, r, budget).witness; };
    if (auto built = construct_for(p, packings)) {
        emit(c, out,
             "# regime: " + to_string(built->regime) + "\n# weight: " + std::to_string(weight(built->code)) + "\n" +
                 render_matrix(built->code));
        return kOk;
    }
    const SearchResult res = exact_min_weight(p, budget);
    if (!res.witness) {
        err << "no construction covers " << p.to_string() << " and the search found no code within budget\n";
        return kBudgetExhausted;
    }
    emit(c, out,
         std::string("# regime: search") + (res.exact ? "" : " (inexact)") +
             "\n# weight: " + std::to_string(weight(*res.witness)) + "\n" + render_matrix(*res.witness));
    return res.exact ? kOk : kBudgetExhausted;
}

int do_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const BatchCode code = parse_matrix(read_input(c.input));
    CodeParams p = resolve_params(c, false);
    if (p.k < 0 || p.r < 0) throw UsageError("verify needs k and r (--params or --k/--r)");
    if (p.n < 0) p.n = code.n();
    if (p.m < 0) p.m = code.m();
    if (p.n != code.n() || p.m != code.m())
        throw UsageError("matrix is " + std::to_string(code.m()) + "x" + std::to_string(code.n()) +
                         " but parameters say " + p.to_string());
    validate_params(p);

    if (c.strategy == "all") {
        const VerifyStrategy all[] = {VerifyStrategy::Definitional, VerifyStrategy::ColumnUnion,
                                      VerifyStrategy::RowContainment};
        std::vector<VerifyReport> reports;
        for (VerifyStrategy s : all) reports.push_back(verify(code, p, s));
        for (const auto& rep : reports) {
            if (rep.ok != reports.front().ok) {
                err << "strategies disagree on " << p.to_string() << ":";
                for (const auto& r2 : reports) err << ' ' << to_string(r2.strategy) << '=' << (r2.ok ? "ok" : "fail");
                err << '\n';
                return kFailure;
            }
        }
        if (reports.front().ok) {
            out << "ok (definitional, column-union, row-containment agree)\n";
            return kOk;
        }
        for (const auto& rep : reports) err << to_string(rep.strategy) << ": " << describe(*rep.witness) << '\n';
        out << "fail\n";
        return kFailure;
    }

    const auto strategy = parse_strategy(c.strategy);
    if (!strategy) throw UsageError("unknown strategy '" + c.strategy + "'");
    const VerifyReport rep = verify(code, p, *strategy);
    if (rep.ok) {
        out << "ok (" << to_string(rep.strategy) << ")\n";
        return kOk;
    }
    out << "fail (" << to_string(rep.strategy) << ")\n";
    err << describe(*rep.witness) << '\n';
    return kFailure;
}

int do_retrieve(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const BatchCode code = parse_matrix(read_input(c.input));
    const Demand d{parse_list(c.demand, "--demand")};
    const std::vector<int> down_list = parse_list(c.down, "--down");
    ServerSet down;
    for (int s : down_list) {
        if (s < 1 || s > code.m()) throw UsageError("server " + std::to_string(s) + " is not in the matrix");
        down.insert(s);
    }
    if (d.files.empty()) throw UsageError("--demand must name at least one file");

    CodeParams p = resolve_params(c, false);
    if (p.n < 0) p.n = code.n();
    if (p.m < 0) p.m = code.m();
    if (p.k < 0) p.k = static_cast<int>(d.files.size());
    if (p.r < 0) p.r = down.size();
    if (p.n != code.n() || p.m != code.m()) throw UsageError("parameters do not match the matrix dimensions");
    validate_params(p);

    const auto outcome = plan_retrieval(code, p, d, Availability::all_but(p.m, down));
    if (const auto* plan = std::get_if<RetrievalPlan>(&outcome)) {
        std::string line;
        for (const auto& [file, server] : plan->assignment)
            line += (line.empty() ? "" : " ") + std::to_string(file) + "→" + std::to_string(server);
        out << line << '\n';
        return kOk;
    }
    const auto& fail = std::get<InfeasibleDemand>(outcome);
    switch (fail.reason) {
        case InfeasibleDemand::Reason::HallViolation: {
            ServerSet seen;
            for (int f : fail.witness) seen = seen | (code.column(f) - down);
            err << "infeasible: files";
            for (int f : fail.witness) err << ' ' << f;
            err << " are stored on only " << seen.size() << " available servers " << seen.to_string() << '\n';
            break;
        }
        case InfeasibleDemand::Reason::DemandTooLarge: err << "infeasible: demand exceeds k = " << p.k << '\n'; break;
        case InfeasibleDemand::Reason::TooFewServers: err << "infeasible: more than r = " << p.r << " servers down\n"; break;
        case InfeasibleDemand::Reason::UnknownFile: err << "infeasible: demand names an unknown or repeated file\n"; break;
    }
    return kFailure;
}

int do_optimal(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const CodeParams p = resolve_params(c, true);
    validate_params(p);
    const SearchResult res = exact_min_weight(p, budget_of(c));
    std::string text = "# N" + p.to_string() + " " + (res.exact ? "= " : ">= ") + std::to_string(*res.value) +
                       (res.exact ? " (exact)" : " (budget exhausted)") + "\n";
    if (res.witness) {
        text += "# witness weight " + std::to_string(weight(*res.witness)) + "\n" + render_matrix(*res.witness);
    } else {
        err << "no code found within budget\n";
    }
    emit(c, out, text);
    return res.exact ? kOk : kBudgetExhausted;
}

struct TableRow {
    CodeParams p;
    std::string line;
    bool exact = true;
};

int do_table(const RunConfig& c, std::ostream& out, std::ostream&) {
    const SearchBudget budget = budget_of(c);
    std::vector<TableRow> rows;
    for (int m = c.m_min; m <= c.m_max; ++m)
        for (int r = 0; r < m; ++r)
            for (int k = 1; k <= m - r; ++k)
                for (int n = std::max(k, c.n_min); n <= c.n_max; ++n) rows.push_back({{n, k, m, r}, {}, true});

    const PackingProvider packings = [&](int k, int m, int r) { return compute_F(k, m, r, budget).witness; };
    auto fill = [&](TableRow& row) {
        const RegimePrediction pred = predicted_weight(row.p, packings);
        std::string oracle = "", exact = "";
        if (!c.no_oracle) {
            const SearchResult res = exact_min_weight(row.p, budget);
            oracle = std::to_string(*res.value);
            exact = res.exact ? "true" : "false";
            row.exact = res.exact;
        }
        row.line = std::to_string(row.p.n) + "," + std::to_string(row.p.k) + "," + std::to_string(row.p.m) + "," +
                   std::to_string(row.p.r) + "," + (pred.regime ? to_string(*pred.regime) : "none") + "," +
                   (pred.value ? std::to_string(*pred.value) : "unknown") + "," + oracle + "," + exact;
    };

    const int jobs = std::max(1, c.jobs);
    if (jobs == 1) {
        for (auto& row : rows) fill(row);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < rows.size(); i = next++) fill(rows[i]);
            });
        for (auto& t : pool) t.join();
    }

    std::string text = "n,k,m,r,regime,predicted,oracle,exact\n";
    bool all_exact = true;
    for (const auto& row : rows) {
        text += row.line + "\n";
        all_exact = all_exact && row.exact;
    }
    emit(c, out, text);
    return all_exact ? kOk : kBudgetExhausted;
}

int do_girth_search(const RunConfig& c, std::ostream& out, std::ostream&) {
    if (c.m < 1) throw UsageError("girth-search needs --m");
    const SearchResult res = max_edges_with_girth(c.m, c.girth, budget_of(c));
    const SimpleGraph g = graph_from_code(*res.witness);
    emit(c, out,
         "# max edges with girth >= " + std::to_string(c.girth) + " on " + std::to_string(c.m) + " vertices: " +
             std::to_string(*res.value) + (res.exact ? " (exact)" : " (lower bound, budget exhausted)") + "\n" +
             render_graph(g));
    return res.exact ? kOk : kBudgetExhausted;
}

void add_param_flags(CLI::App* sub, RunConfig& c) {
    sub->add_option("--params", c.params, "packed n,k,m,r");
    sub->add_option("--n", c.n, "files");
    sub->add_option("--k", c.k, "batch size");
    sub->add_option("--m", c.m, "servers");
    sub->add_option("--r", c.r, "redundancy");
}

void add_budget_flags(CLI::App* sub, RunConfig& c) {
    sub->add_option("--node-limit", c.node_limit, "search node budget");
    sub->add_option("--time-limit", c.time_limit_s, "search time budget in seconds");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Construct, verify and optimize combinatorial batch codes with redundancy"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "emit the construction for the regime covering the parameters");
    add_param_flags(construct, c);
    add_budget_flags(construct, c);
    construct->add_option("-o,--out", c.output, "output file");

    auto* verify_cmd = app.add_subcommand("verify", "check a matrix file; exit 0 iff it is an r-CBC");
    add_param_flags(verify_cmd, c);
    verify_cmd->add_option("--strategy", c.strategy, "auto|definitional|column-union|row-containment|all");
    verify_cmd->add_option("file", c.input, "matrix file ('-' for stdin)");

    auto* retrieve = app.add_subcommand("retrieve", "plan a one-file-per-server retrieval");
    add_param_flags(retrieve, c);
    retrieve->add_option("--demand", c.demand, "comma-separated files")->required();
    retrieve->add_option("--down", c.down, "comma-separated unavailable servers");
    retrieve->add_option("file", c.input, "matrix file ('-' for stdin)");

    auto* optimal = app.add_subcommand("optimal", "exact minimum weight with a witness");
    add_param_flags(optimal, c);
    add_budget_flags(optimal, c);
    optimal->add_option("-o,--out", c.output, "output file");

    auto* table = app.add_subcommand("table", "CSV sweep of predicted vs oracle weights");
    table->add_option("--m-min", c.m_min);
    table->add_option("--m-max", c.m_max);
    table->add_option("--n-min", c.n_min);
    table->add_option("--n-max", c.n_max);
    table->add_flag("--no-oracle", c.no_oracle, "skip the exact search");
    table->add_option("--jobs", c.jobs, "worker threads");
    add_budget_flags(table, c);
    table->add_option("-o,--out", c.output, "output file");

    auto* girth_cmd = app.add_subcommand("girth-search", "most edges on m vertices with a girth floor");
    girth_cmd->add_option("--m", c.m, "vertices")->required();
    girth_cmd->add_option("--girth", c.girth, "minimum girth (>= 3)");
    add_budget_flags(girth_cmd, c);
    girth_cmd->add_option("-o,--out", c.output, "output file");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*construct) return do_construct(c, out, err);
        if (*verify_cmd) return do_verify(c, out, err);
        if (*retrieve) return do_retrieve(c, out, err);
        if (*optimal) return do_optimal(c, out, err);
        if (*table) return do_table(c, out, err);
        if (*girth_cmd) return do_girth_search(c, out, err);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cbc::cli
