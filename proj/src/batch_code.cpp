#include "cbc/batch_code.hpp"

#include <algorithm>
#include <charconv>

#include "cbc/errors.hpp"

namespace cbc {

BatchCode::BatchCode(int m, std::vector<ServerSet> columns) : m_(m), columns_(std::move(columns)) {
    if (m < 1 || m > ServerSet::kMaxServer) throw ContractError("server count must lie in [1, 64]");
    const ServerSet all = ServerSet::full(m);
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (!columns_[j].is_subset_of(all))
            throw ContractError("column " + std::to_string(j + 1) + " names a server above m = " + std::to_string(m));
    }
}

ServerSet BatchCode::column(int file) const {
    if (file < 1 || file > n()) throw ContractError("file index " + std::to_string(file) + " out of range");
    return columns_[file - 1];
}

std::vector<int> BatchCode::row(int server) const {
    std::vector<int> files;
    for (int j = 0; j < n(); ++j)
        if (columns_[j].contains(server)) files.push_back(j + 1);
    return files;
}

BatchCode BatchCode::canonical() const {
    BatchCode out = *this;
    std::stable_sort(out.columns_.begin(), out.columns_.end(), LexLess{});
    return out;
}

BatchCode BatchCode::with_column(ServerSet column) const {
    std::vector<ServerSet> cols = columns_;
    cols.push_back(column);
    return BatchCode(m_, std::move(cols));
}

std::int64_t weight(const BatchCode& code) {
    std::int64_t total = 0;
    for (ServerSet c : code.columns()) total += c.size();
    return total;
}

int CardinalityProfile::ell(int i) const {
    if (i < 0 || i >= static_cast<int>(by_cardinality.size())) return 0;
    return by_cardinality[i];
}

int CardinalityProfile::below_band() const {
    int total = 0;
    for (int i = 0; i <= r && i < static_cast<int>(by_cardinality.size()); ++i) total += by_cardinality[i];
    return total;
}

int CardinalityProfile::above_band() const {
    int total = 0;
    for (int i = r + k + 1; i < static_cast<int>(by_cardinality.size()); ++i) total += by_cardinality[i];
    return total;
}

int CardinalityProfile::total() const {
    int total = 0;
    for (int c : by_cardinality) total += c;
    return total;
}

CardinalityProfile cardinality_profile(const BatchCode& code, const CodeParams& p) {
    CardinalityProfile prof;
    prof.r = p.r;
    prof.k = p.k;
    prof.by_cardinality.assign(code.m() + 1, 0);
    for (ServerSet c : code.columns()) ++prof.by_cardinality[c.size()];
    return prof;
}

namespace {

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string_view trim_left(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

bool parse_int(std::string_view token, int& out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

BatchCode parse_matrix(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    int m = 0, n = 0;
    std::vector<ServerSet> columns;
    int rows_read = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = trim_right(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (trim_left(line).empty() || trim_left(line).front() == '#') {
            if (end == text.size()) break;
            continue;
        }

        if (!have_header) {
            std::string_view rest = trim_left(line);
            const std::size_t sep = rest.find_first_of(" \t");
            if (sep == std::string_view::npos) throw ParseError(line_no, 0, "header must be \"m n\"");
            if (!parse_int(rest.substr(0, sep), m) || !parse_int(trim_left(rest.substr(sep)), n))
                throw ParseError(line_no, 0, "header must be two integers \"m n\"");
            if (m < 1 || m > ServerSet::kMaxServer) throw ParseError(line_no, 0, "m must lie in [1, 64]");
            if (n < 0) throw ParseError(line_no, 0, "n must be nonnegative");
            columns.assign(n, ServerSet{});
            have_header = true;
        } else {
            if (rows_read == m) throw ParseError(line_no, 0, "more than m = " + std::to_string(m) + " rows");
            if (static_cast<int>(line.size()) != n)
                throw ParseError(line_no, 0,
                                 "row " + std::to_string(rows_read + 1) + " length mismatch: expected " +
                                     std::to_string(n) + " symbols, got " + std::to_string(line.size()));
            for (int j = 0; j < n; ++j) {
                if (line[j] == '1')
                    columns[j].insert(rows_read + 1);
                else if (line[j] != '0')
                    throw ParseError(line_no, j + 1, std::string("illegal character '") + line[j] + "'");
            }
            ++rows_read;
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no, 0, "missing header \"m n\"");
    // n = 0 has no row text to carry
    if (n > 0 && rows_read != m)
        throw ParseError(line_no, 0, "expected " + std::to_string(m) + " rows, got " + std::to_string(rows_read));
    return BatchCode(m, std::move(columns));
}

std::string render_matrix(const BatchCode& code) {
    std::string out = std::to_string(code.m()) + " " + std::to_string(code.n()) + "\n";
    if (code.n() == 0) return out;
    for (int i = 1; i <= code.m(); ++i) {
        for (ServerSet c : code.columns()) out += c.contains(i) ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace cbc
