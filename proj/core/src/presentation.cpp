#include "vknot/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vknot {

PresentationMatrix::PresentationMatrix(int generators, std::vector<int> entries)
    : generators_(generators), entries_(std::move(entries)) {
    if (generators_ <= 0) throw ValidationError("presentation needs at least one generator");
    if (entries_.size() != static_cast<size_t>(generators_) * generators_)
        throw ValidationError("presentation matrix must have g*g entries");
    for (int e : entries_)
        if (e < 0 || e > generators_)
            throw ValidationError("presentation matrix entry outside 0..g");
}

namespace {

// Index (1-based) of the arc containing position p: the arc ends at the
// first under-symbol after p, wrapping to arc 1.
int arc_of(const std::vector<int>& under_positions, int p) {
    auto it = std::upper_bound(under_positions.begin(), under_positions.end(), p);
    if (it == under_positions.end()) return 1;
    return static_cast<int>(it - under_positions.begin()) + 1;
}

}  // namespace

RelationList upper_relations(const GaussCode& code) {
    const auto& syms = code.knot();
    const int m = static_cast<int>(syms.size());
    const int n = m / 2;

    std::vector<int> under_positions;
    std::map<int, int> over_position;
    for (int p = 0; p < m; ++p) {
        if (syms[static_cast<size_t>(p)].role == Role::Under)
            under_positions.push_back(p);
        else
            over_position[syms[static_cast<size_t>(p)].label] = p;
    }

    RelationList rel;
    rel.generators = n;
    for (int k = 1; k <= n; ++k) {
        const auto& head = syms[static_cast<size_t>(under_positions[static_cast<size_t>(k - 1)])];
        const int j = arc_of(under_positions, over_position.at(head.label));
        const int next = k % n + 1;
        if (head.sign == Sign::Plus)
            rel.relations.push_back({k, j, next});
        else
            rel.relations.push_back({next, j, k});
    }
    return rel;
}

RelationList lower_relations(const GaussCode& code) { return upper_relations(flip(code)); }

std::variant<PresentationMatrix, ConflictReport> relations_to_matrix(const RelationList& rel) {
    const int g = rel.generators;
    if (g <= 0) throw ValidationError("presentation needs at least one generator");
    std::vector<int> entries(static_cast<size_t>(g) * g, 0);
    for (const auto& r : rel.relations) {
        if (r.lhs < 1 || r.lhs > g || r.rhs < 1 || r.rhs > g || r.out < 1 || r.out > g)
            throw ValidationError("relation index outside 1..g");
        int& cell = entries[static_cast<size_t>(r.lhs - 1) * g + (r.rhs - 1)];
        if (cell != 0 && cell != r.out)
            return ConflictReport{r.lhs, r.rhs, cell, r.out};
        cell = r.out;
    }
    return PresentationMatrix(g, std::move(entries));
}

RelationList matrix_to_relations(const PresentationMatrix& m) {
    RelationList rel;
    rel.generators = m.generators();
    for (int i = 1; i <= m.generators(); ++i)
        for (int j = 1; j <= m.generators(); ++j)
            if (const int k = m.at(i, j); k != 0) rel.relations.push_back({i, j, k});
    return rel;
}

GaussCode gfix(const GaussCode& code) {
    std::vector<GaussSymbol> syms = code.knot();
    const int cap = static_cast<int>(syms.size());  // 2n insertions
    int inserted = 0;

    for (;;) {
        GaussCode current{{syms}};
        const RelationList rel = upper_relations(current);
        if (std::holds_alternative<PresentationMatrix>(relations_to_matrix(rel)))
            return current;
        if (inserted >= cap)
            throw ValidationError("gfix did not converge within the insertion cap");

        // A conflict always comes from consecutive arrowheads, the first
        // negative and the next positive, whose over-strands share an arc.
        // Find the earliest such pair and split the arc between them.
        const int m = static_cast<int>(syms.size());
        const int n = m / 2;
        std::vector<int> under_positions;
        std::map<int, int> over_position;
        for (int p = 0; p < m; ++p) {
            if (syms[static_cast<size_t>(p)].role == Role::Under)
                under_positions.push_back(p);
            else
                over_position[syms[static_cast<size_t>(p)].label] = p;
        }
        int insert_after = -1;
        for (int k = 1; k <= n && insert_after < 0; ++k) {
            const auto& head = syms[static_cast<size_t>(under_positions[static_cast<size_t>(k - 1)])];
            const auto& next_head =
                syms[static_cast<size_t>(under_positions[static_cast<size_t>(k % n)])];
            if (head.sign != Sign::Minus || next_head.sign != Sign::Plus) continue;
            const int j1 = arc_of(under_positions, over_position.at(head.label));
            const int j2 = arc_of(under_positions, over_position.at(next_head.label));
            if (j1 != j2) continue;
            // Outputs k and (k+2 mod n); equal outputs are a duplicate, not
            // a conflict.
            if (k == (k + 1) % n + 1) continue;
            insert_after = under_positions[static_cast<size_t>(k - 1)];
        }
        if (insert_after < 0)
            throw ValidationError("gfix found a conflict without the expected kink site");

        int fresh = 0;
        for (const auto& s : syms) fresh = std::max(fresh, s.label);
        ++fresh;
        syms.insert(syms.begin() + insert_after + 1,
                    {GaussSymbol{fresh, Role::Over, Sign::Plus},
                     GaussSymbol{fresh, Role::Under, Sign::Plus}});
        ++inserted;
    }
}

std::string serialize_matrix(const PresentationMatrix& m) {
    std::ostringstream os;
    for (int i = 1; i <= m.generators(); ++i) {
        if (i > 1) os << '\n';
        for (int j = 1; j <= m.generators(); ++j) {
            if (j > 1) os << ' ';
            os << m.at(i, j);
        }
    }
    return os.str();
}

PresentationMatrix parse_matrix(const std::string& text) {
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
                throw ParseError("non-integer matrix entry: '" + tok + "'");
            }
            if (used != tok.size()) throw ParseError("non-integer matrix entry: '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty presentation matrix");
    const int g = static_cast<int>(rows.size());
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(g) * g);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != g)
            throw ParseError("ragged presentation matrix");
        for (int v : row) {
            if (v < 0 || v > g)
                throw ParseError("matrix entry " + std::to_string(v) + " outside 0.." +
                                 std::to_string(g));
            entries.push_back(v);
        }
    }
    return PresentationMatrix(g, std::move(entries));
}

}  // namespace vknot
