#include "vknot/quandle.hpp"

#include <queue>
#include <sstream>

namespace vknot {

QuandleTable::QuandleTable(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ <= 0) throw ValidationError("quandle order must be positive");
    if (entries_.size() != static_cast<size_t>(order_) * order_)
        throw ValidationError("operation table must have order*order entries");
    for (int e : entries_)
        if (e < 1 || e > order_) throw ValidationError("table entry outside 1..n");
}

AxiomReport check_axioms(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ValidationError("malformed table: empty");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("malformed table: not square");
    for (const auto& row : rows)
        for (int e : row)
            if (e < 1 || e > n) throw ValidationError("malformed table: entry outside 1..n");

    AxiomReport rep;

    for (int a = 0; a < n; ++a) {
        if (rows[a][a] != a + 1) {
            rep.idempotent = false;
            rep.idempotent_at = {a + 1, 0, 0};
            break;
        }
    }

    for (int j = 0; j < n && rep.right_invertible; ++j) {
        std::vector<char> seen(n + 1, 0);
        for (int i = 0; i < n; ++i) {
            const int v = rows[i][j];
            if (seen[v]) {
                rep.right_invertible = false;
                rep.right_invertible_at = {j + 1, v, 0};
                break;
            }
            seen[v] = 1;
        }
    }

    for (int a = 0; a < n && rep.self_distributive; ++a) {
        for (int b = 0; b < n && rep.self_distributive; ++b) {
            for (int c = 0; c < n; ++c) {
                const int lhs = rows[rows[a][b] - 1][c];
                const int rhs = rows[rows[a][c] - 1][rows[b][c] - 1];
                if (lhs != rhs) {
                    rep.self_distributive = false;
                    rep.self_distributive_at = {a + 1, b + 1, c + 1};
                    break;
                }
            }
        }
    }

    return rep;
}

AxiomReport check_axioms(const QuandleTable& q) {
    const int n = q.order();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) rows[i - 1][j - 1] = q.op(i, j);
    return check_axioms(rows);
}

std::string describe(const AxiomReport& r) {
    if (r.ok()) return "all quandle axioms hold";
    std::ostringstream os;
    const char* sep = "";
    if (!r.idempotent) {
        os << "axiom i fails at a=" << r.idempotent_at[0];
        sep = "; ";
    }
    if (!r.right_invertible) {
        os << sep << "axiom ii fails in column " << r.right_invertible_at[0] << " (value "
           << r.right_invertible_at[1] << " repeats)";
        sep = "; ";
    }
    if (!r.self_distributive) {
        os << sep << "axiom iii fails at (a,b,c)=(" << r.self_distributive_at[0] << ","
           << r.self_distributive_at[1] << "," << r.self_distributive_at[2] << ")";
    }
    return os.str();
}

bool is_connected(const QuandleTable& q) {
    const int n = q.order();
    std::vector<char> reached(n + 1, 0);
    std::queue<int> frontier;
    reached[1] = 1;
    frontier.push(1);
    int count = 1;
    while (!frontier.empty()) {
        const int a = frontier.front();
        frontier.pop();
        for (int j = 1; j <= n; ++j) {
            const int b = q.op(a, j);
            if (!reached[b]) {
                reached[b] = 1;
                ++count;
                frontier.push(b);
            }
        }
    }
    return count == n;
}

namespace {

struct Builtin {
    const char* name;
    int order;
    std::vector<int> entries;
};

const std::vector<Builtin>& builtin_tables() {
    // The six smallest connected quandles, in census order.
    static const std::vector<Builtin> tables = {
        {"T3", 3,
         {1, 3, 2,
          3, 2, 1,
          2, 1, 3}},
        {"T4", 4,
         {1, 3, 4, 2,
          4, 2, 1, 3,
          2, 4, 3, 1,
          3, 1, 2, 4}},
        {"T5a", 5,
         {1, 3, 4, 5, 2,
          3, 2, 5, 1, 4,
          4, 5, 3, 2, 1,
          5, 1, 2, 4, 3,
          2, 4, 1, 3, 5}},
        {"T5b", 5,
         {1, 4, 5, 3, 2,
          3, 2, 4, 5, 1,
          2, 5, 3, 1, 4,
          5, 1, 2, 4, 3,
          4, 3, 1, 2, 5}},
        {"T5c", 5,
         {1, 4, 5, 2, 3,
          3, 2, 1, 5, 4,
          4, 5, 3, 1, 2,
          5, 3, 2, 4, 1,
          2, 1, 4, 3, 5}},
        {"T6", 6,
         {1, 4, 5, 2, 3, 1,
          4, 2, 6, 1, 2, 3,
          5, 6, 3, 3, 1, 2,
          2, 1, 4, 4, 6, 5,
          3, 5, 1, 6, 5, 4,
          6, 3, 2, 5, 4, 6}},
    };
    return tables;
}

}  // namespace

QuandleTable builtin(std::string_view name) {
    for (const auto& b : builtin_tables())
        if (name == b.name) return QuandleTable(b.order, b.entries);
    // Tn-trivial: the trivial quandle x ▷ y = x of order n.
    if (name.size() >= 2 && name.front() == 'T' && name.ends_with("-trivial")) {
        const std::string_view digits = name.substr(1, name.size() - 1 - 8);
        if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '9') {
            const int n = digits[0] - '0';
            std::vector<int> entries(static_cast<size_t>(n) * n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    entries[static_cast<size_t>(i - 1) * n + (j - 1)] = i;
            return QuandleTable(n, std::move(entries));
        }
    }
    throw ValidationError("unknown quandle name: " + std::string(name));
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& b : builtin_tables()) out.emplace_back(b.name);
        return out;
    }();
    return names;
}

QuandleTable parse_table(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<int> row;
        std::string tok;
        while (fields >> tok) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw ParseError("non-integer table entry: '" + tok + "'");
            }
            if (used != tok.size()) throw ParseError("non-integer table entry: '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty quandle table");
    const int n = static_cast<int>(rows.size());
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw ParseError("ragged quandle table: expected " + std::to_string(n) +
                             " entries per row");
        for (int v : row) {
            if (v < 1 || v > n)
                throw ParseError("table entry " + std::to_string(v) + " outside 1.." +
                                 std::to_string(n));
            entries.push_back(v);
        }
    }
    return QuandleTable(n, std::move(entries));
}

std::string serialize_table(const QuandleTable& q) {
    std::ostringstream os;
    for (int i = 1; i <= q.order(); ++i) {
        if (i > 1) os << '\n';
        for (int j = 1; j <= q.order(); ++j) {
            if (j > 1) os << ' ';
            os << q.op(i, j);
        }
    }
    return os.str();
}

}  // namespace vknot
