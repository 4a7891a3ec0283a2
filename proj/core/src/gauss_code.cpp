#include "vknot/gauss_code.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vknot {

const std::vector<GaussSymbol>& GaussCode::knot() const {
    if (!single_component())
        throw UnsupportedError("operation requires a single-component code");
    return components.front();
}

int GaussCode::crossings() const {
    std::vector<int> labels;
    for (const auto& comp : components)
        for (const auto& sym : comp) labels.push_back(sym.label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return static_cast<int>(labels.size());
}

void validate(const GaussCode& code) {
    if (code.components.empty()) throw ValidationError("code has no components");
    struct Seen {
        int over = 0;
        int under = 0;
        Sign sign = Sign::Plus;
        bool sign_set = false;
    };
    std::map<int, Seen> seen;
    for (const auto& comp : code.components) {
        if (comp.empty()) throw ValidationError("empty component");
        for (const auto& sym : comp) {
            if (sym.label < 1) throw ValidationError("crossing label must be >= 1");
            auto& s = seen[sym.label];
            (sym.role == Role::Over ? s.over : s.under)++;
            if (s.sign_set && s.sign != sym.sign)
                throw ValidationError("crossing " + std::to_string(sym.label) +
                                      " appears with both signs");
            s.sign = sym.sign;
            s.sign_set = true;
        }
    }
    for (const auto& [label, s] : seen) {
        if (s.over + s.under != 2)
            throw ValidationError("crossing " + std::to_string(label) + " appears " +
                                  std::to_string(s.over + s.under) + " times (expected 2)");
        if (s.over != 1)
            throw ValidationError("crossing " + std::to_string(label) +
                                  " must appear once over and once under");
    }
}

GaussCode parse_text(const std::string& s) {
    std::vector<std::vector<GaussSymbol>> comps(1);
    size_t i = 0;
    const auto is_sep = [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == '/';
    };
    while (i < s.size()) {
        if (is_sep(s[i])) {
            if (!comps.back().empty()) comps.emplace_back();
            ++i;
            continue;
        }
        GaussSymbol sym;
        if (s[i] == 'O')
            sym.role = Role::Over;
        else if (s[i] == 'U')
            sym.role = Role::Under;
        else
            throw ParseError("expected O or U at position " + std::to_string(i + 1));
        ++i;
        if (i >= s.size()) throw ParseError("truncated token at end of code");
        if (s[i] >= 'A' && s[i] <= 'Z') {
            sym.label = s[i] - 'A' + 1;
            ++i;
        } else if (s[i] >= '0' && s[i] <= '9') {
            int label = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                label = label * 10 + (s[i] - '0');
                ++i;
            }
            if (label < 1) throw ParseError("crossing label must be a positive integer");
            sym.label = label;
        } else {
            throw ParseError(std::string("bad crossing label character '") + s[i] + "'");
        }
        if (i >= s.size()) throw ParseError("missing sign at end of code");
        if (s[i] == '+')
            sym.sign = Sign::Plus;
        else if (s[i] == '-')
            sym.sign = Sign::Minus;
        else
            throw ParseError(std::string("expected + or - but found '") + s[i] + "'");
        ++i;
        comps.back().push_back(sym);
    }
    if (comps.back().empty()) comps.pop_back();
    if (comps.empty()) throw ParseError("empty Gauss code");
    GaussCode code{std::move(comps)};
    validate(code);
    return code;
}

std::string to_text(const GaussCode& code) {
    std::ostringstream os;
    for (size_t c = 0; c < code.components.size(); ++c) {
        if (c > 0) os << ", ";
        for (const auto& sym : code.components[c])
            os << (sym.role == Role::Over ? 'O' : 'U') << sym.label
               << (sym.sign == Sign::Plus ? '+' : '-');
    }
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

GaussSymbol parse_vector_entry(const std::string& tok) {
    // Forms: X | -X | X+I | -X-I, with X a positive integer.
    GaussSymbol sym;
    size_t i = 0;
    bool negative = false;
    if (i < tok.size() && tok[i] == '-') {
        negative = true;
        ++i;
    }
    size_t dstart = i;
    int label = 0;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') {
        label = label * 10 + (tok[i] - '0');
        ++i;
    }
    if (i == dstart) throw ParseError("bad vector entry '" + tok + "'");
    if (label < 1) throw ParseError("crossing label must be a positive integer in '" + tok + "'");
    sym.label = label;
    sym.role = negative ? Role::Under : Role::Over;
    if (i == tok.size()) {
        sym.sign = Sign::Plus;
        return sym;
    }
    // Imaginary part: must match the real part's sign (+I with X, -I with -X).
    const std::string rest = tok.substr(i);
    if (!negative && rest == "+I")
        sym.sign = Sign::Minus;
    else if (negative && rest == "-I")
        sym.sign = Sign::Minus;
    else
        throw ParseError("bad vector entry '" + tok + "' (mixed-sign entries are invalid)");
    return sym;
}

}  // namespace

GaussCode parse_vector(const std::string& s) {
    const std::string body = trim(s);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("vector notation must be bracketed: [entry,entry,...]");
    std::vector<std::vector<GaussSymbol>> comps;
    std::vector<GaussSymbol> current;
    std::istringstream inner(body.substr(1, body.size() - 2));
    std::string tok;
    bool any = false;
    while (std::getline(inner, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw ParseError("empty vector entry");
        any = true;
        if (tok == "0") {
            if (current.empty()) throw ParseError("component terminator 0 after empty component");
            comps.push_back(std::move(current));
            current.clear();
            continue;
        }
        current.push_back(parse_vector_entry(tok));
    }
    if (!any) throw ParseError("empty Gauss code vector");
    if (!current.empty()) throw ParseError("missing terminating 0 after last component");
    if (comps.empty()) throw ParseError("empty Gauss code vector");
    GaussCode code{std::move(comps)};
    validate(code);
    return code;
}

std::string to_vector(const GaussCode& code) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& comp : code.components) {
        for (const auto& sym : comp) {
            if (!first) os << ',';
            first = false;
            if (sym.role == Role::Under) os << '-';
            os << sym.label;
            if (sym.sign == Sign::Minus) os << (sym.role == Role::Under ? "-I" : "+I");
        }
        if (!first) os << ',';
        first = false;
        os << '0';
    }
    os << ']';
    return os.str();
}

GaussCode flip(const GaussCode& code) {
    const auto& syms = code.knot();
    std::vector<GaussSymbol> flipped;
    flipped.reserve(syms.size());
    int min_label = syms.front().label;
    for (const auto& sym : syms) {
        flipped.push_back({sym.label, opposite(sym.role), sym.sign});
        min_label = std::min(min_label, sym.label);
    }
    size_t start = 0;
    for (size_t p = 0; p < flipped.size(); ++p) {
        if (flipped[p].label == min_label && flipped[p].role == Role::Under) {
            start = p;
            break;
        }
    }
    std::rotate(flipped.begin(), flipped.begin() + static_cast<std::ptrdiff_t>(start),
                flipped.end());
    return GaussCode{{std::move(flipped)}};
}

bool is_evenly_intersticed(const GaussCode& code) {
    return is_evenly_intersticed(code, IntersticeConvention::EvenBetween);
}

bool is_evenly_intersticed(const GaussCode& code, IntersticeConvention convention) {
    const auto& syms = code.knot();
    const int want = convention == IntersticeConvention::EvenBetween ? 0 : 1;
    std::map<int, int> first_at;
    for (size_t p = 0; p < syms.size(); ++p) {
        auto [it, inserted] = first_at.try_emplace(syms[p].label, static_cast<int>(p));
        if (!inserted) {
            const int between = static_cast<int>(p) - it->second - 1;
            if (between % 2 != want) return false;
        }
    }
    return true;
}

bool is_r1_reducible(const GaussCode& code, bool cyclic) {
    const auto& syms = code.knot();
    const size_t m = syms.size();
    for (size_t p = 0; p + 1 < m; ++p)
        if (syms[p].label == syms[p + 1].label) return true;
    if (cyclic && m >= 2 && syms[m - 1].label == syms[0].label) return true;
    return false;
}

bool is_r2_reducible(const GaussCode& code, bool cyclic, R2Patterns patterns) {
    if (!patterns.nested && !patterns.interleaved) return false;
    const auto& syms = code.knot();
    const size_t m = syms.size();
    if (m < 4) return false;

    // Adjacent position pairs (p, p+1), plus the wrap pair when cyclic.
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t p = 0; p + 1 < m; ++p) pairs.emplace_back(p, p + 1);
    if (cyclic) pairs.emplace_back(m - 1, 0);

    for (size_t a = 0; a < pairs.size(); ++a) {
        const auto& s1 = syms[pairs[a].first];
        const auto& s2 = syms[pairs[a].second];
        if (s1.label == s2.label || s1.role != s2.role || s1.sign == s2.sign) continue;
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            // All four positions distinct.
            if (pairs[b].first == pairs[a].first || pairs[b].first == pairs[a].second ||
                pairs[b].second == pairs[a].first || pairs[b].second == pairs[a].second)
                continue;
            const auto& t1 = syms[pairs[b].first];
            const auto& t2 = syms[pairs[b].second];
            if (t1.role != t2.role || t1.role == s1.role) continue;
            const bool same_order = t1.label == s1.label && t2.label == s2.label;
            const bool reversed = t1.label == s2.label && t2.label == s1.label;
            if (same_order && patterns.interleaved) return true;
            if (reversed && patterns.nested) return true;
        }
    }
    return false;
}

}  // namespace vknot
