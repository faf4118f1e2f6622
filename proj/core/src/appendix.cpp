#include "spincrystal/appendix.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "spincrystal/crystal.hpp"
#include "spincrystal/graph.hpp"
#include "spincrystal/partitions.hpp"

namespace spincrystal {

namespace {

// ---- fixture mini-language ----

// a symbol in a label/word: either a literal residue digit, or a letter
// family with a prime count (i'' = family 'i' bumped by 2)
struct Symbol {
    bool literal = false;
    int value = 0;   // literal residue
    char family = 0;  // 'i', 'j', 'k', 'l'
    int primes = 0;
};

using SymWord = std::vector<Symbol>;

struct Term {
    long long coeff = 0;
    bool perm = false;  // sum over distinct rearrangements
    SymWord word;
};

// range endpoint: integer or ell-K
struct Expr {
    bool uses_ell = false;
    int offset = 0;
    int eval(int ell) const { return uses_ell ? ell + offset : offset; }
};

struct VarSpec {
    char family = 0;
    enum Kind { full_index_set, range, either } kind = full_index_set;
    Expr lo, hi;  // range; for 'either', the two values
};

struct Row {
    int line = 0;
    int deg = 0;
    SymWord label;
    std::vector<Term> terms;
    bool require_ell_eq_1 = false;
    bool require_ell_gt_1 = false;
    std::vector<VarSpec> vars;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

SymWord parse_word(const std::string& s, int line) {
    SymWord w;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        Symbol sym;
        if (isdigit(static_cast<unsigned char>(c))) {
            sym.literal = true;
            sym.value = c - '0';
        } else if (c == 'i' || c == 'j' || c == 'k' || c == 'l') {
            sym.family = c;
            while (k + 1 < s.size() && s[k + 1] == '\'') {
                ++sym.primes;
                ++k;
            }
        } else {
            throw AppendixParseError(line, std::string("bad word character '") + c + "'");
        }
        w.push_back(sym);
    }
    if (w.empty()) throw AppendixParseError(line, "empty word");
    return w;
}

Term parse_term(const std::string& raw, int line) {
    std::string s = raw;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    size_t dot = s.find('.');
    if (dot == std::string::npos || dot == 0)
        throw AppendixParseError(line, "term needs COEFF.WORD: '" + raw + "'");
    Term t;
    try {
        size_t pos = 0;
        t.coeff = std::stoll(s.substr(0, dot), &pos);
        if (pos != dot) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw AppendixParseError(line, "bad coefficient in '" + raw + "'");
    }
    std::string body = s.substr(dot + 1);
    if (body.rfind("perm(", 0) == 0 && body.back() == ')') {
        t.perm = true;
        body = body.substr(5, body.size() - 6);
    }
    t.word = parse_word(body, line);
    return t;
}

Expr parse_expr(const std::string& s, int line) {
    Expr e;
    if (s.rfind("ell", 0) == 0) {
        e.uses_ell = true;
        std::string rest = s.substr(3);
        if (rest.empty()) return e;
        try {
            e.offset = std::stoi(rest);
        } catch (const std::exception&) {
            throw AppendixParseError(line, "bad expression '" + s + "'");
        }
        return e;
    }
    try {
        e.offset = std::stoi(s);
    } catch (const std::exception&) {
        throw AppendixParseError(line, "bad expression '" + s + "'");
    }
    return e;
}

void parse_conditions(const std::string& s, Row& row) {
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) {
        if (tok == "ell=1") {
            row.require_ell_eq_1 = true;
        } else if (tok == "ell>1") {
            row.require_ell_gt_1 = true;
        } else if (tok.size() > 2 && tok[1] == ':') {
            VarSpec v;
            v.family = tok[0];
            std::string spec = tok.substr(2);
            if (spec == "I") {
                v.kind = VarSpec::full_index_set;
            } else if (auto bar = spec.find('|'); bar != std::string::npos) {
                v.kind = VarSpec::either;
                v.lo = parse_expr(spec.substr(0, bar), row.line);
                v.hi = parse_expr(spec.substr(bar + 1), row.line);
            } else if (auto dots = spec.find(".."); dots != std::string::npos) {
                v.kind = VarSpec::range;
                v.lo = parse_expr(spec.substr(0, dots), row.line);
                v.hi = parse_expr(spec.substr(dots + 2), row.line);
            } else {
                v.kind = VarSpec::range;
                v.lo = v.hi = parse_expr(spec, row.line);
            }
            row.vars.push_back(v);
        } else {
            throw AppendixParseError(row.line, "bad condition token '" + tok + "'");
        }
    }
}

std::vector<Row> parse_fixture(const char* text) {
    std::vector<Row> rows;
    std::istringstream in(text);
    std::string linebuf;
    int lineno = 0, deg = 0;
    while (std::getline(in, linebuf)) {
        ++lineno;
        std::string line = trim(linebuf);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("table ", 0) == 0) {
            try {
                deg = std::stoi(line.substr(6));
            } catch (const std::exception&) {
                throw AppendixParseError(lineno, "bad table header");
            }
            continue;
        }
        size_t p1 = line.find('|');
        size_t p2 = p1 == std::string::npos ? std::string::npos : line.find('|', p1 + 1);
        if (p2 == std::string::npos)
            throw AppendixParseError(lineno, "row needs LABEL | TERMS | CONDITIONS");
        if (deg == 0) throw AppendixParseError(lineno, "row before any table header");
        Row row;
        row.line = lineno;
        row.deg = deg;
        row.label = parse_word(trim(line.substr(0, p1)), lineno);
        std::string terms = line.substr(p1 + 1, p2 - p1 - 1);
        size_t start = 0;
        while (start <= terms.size()) {
            size_t plus = terms.find('+', start);
            std::string piece = terms.substr(start, plus == std::string::npos
                                                        ? std::string::npos
                                                        : plus - start);
            if (!trim(piece).empty()) row.terms.push_back(parse_term(piece, lineno));
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        if (row.terms.empty()) throw AppendixParseError(lineno, "row without terms");
        parse_conditions(line.substr(p2 + 1), row);
        if (static_cast<int>(row.label.size()) != deg)
            throw AppendixParseError(lineno, "label length != table degree");
        for (const auto& t : row.terms)
            if (static_cast<int>(t.word.size()) != deg)
                throw AppendixParseError(lineno, "term word length != table degree");
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- instantiation ----

// families actually appearing in the row, with the largest prime count used
std::map<char, int> families_of(const Row& row) {
    std::map<char, int> fams;
    auto scan = [&](const SymWord& w) {
        for (const auto& s : w)
            if (!s.literal) {
                auto [it, _] = fams.try_emplace(s.family, 0);
                it->second = std::max(it->second, s.primes);
            }
    };
    scan(row.label);
    for (const auto& t : row.terms) scan(t.word);
    return fams;
}

std::vector<int> candidate_values(const VarSpec& v, int ell) {
    std::vector<int> out;
    switch (v.kind) {
        case VarSpec::full_index_set:
            for (int x = 0; x <= ell; ++x) out.push_back(x);
            break;
        case VarSpec::range:
            for (int x = std::max(0, v.lo.eval(ell)); x <= std::min(ell, v.hi.eval(ell)); ++x)
                out.push_back(x);
            break;
        case VarSpec::either:
            for (int x : {v.lo.eval(ell), v.hi.eval(ell)})
                if (x >= 0 && x <= ell &&
                    std::find(out.begin(), out.end(), x) == out.end())
                    out.push_back(x);
            break;
    }
    return out;
}

ResidueWord instantiate_word(const SymWord& w, const std::map<char, int>& assign) {
    ResidueWord out;
    for (const auto& s : w)
        out.push_back(s.literal ? s.value : assign.at(s.family) + s.primes);
    return out;
}

void emit(const Row& row, const std::map<char, int>& assign,
          std::map<ResidueWord, AppendixEntry>& table) {
    ResidueWord label = instantiate_word(row.label, assign);
    Character ch(row.deg);
    for (const auto& t : row.terms) {
        ResidueWord w = instantiate_word(t.word, assign);
        if (t.perm) {
            ResidueWord p = w;
            std::sort(p.begin(), p.end());
            do ch.add(p, t.coeff);
            while (std::next_permutation(p.begin(), p.end()));
        } else {
            ch.add(w, t.coeff);
        }
    }
    auto it = table.find(label);
    if (it == table.end()) {
        table.emplace(label, AppendixEntry{label, ch, ""});
    } else if (!(it->second.character == ch)) {
        it->second.flag = "conflicting duplicate (kept first) from fixture line " +
                          std::to_string(row.line);
    }
}

void instantiate_row(const Row& row, int ell, std::map<ResidueWord, AppendixEntry>& table) {
    if (row.require_ell_eq_1 && ell != 1) return;
    if (row.require_ell_gt_1 && ell <= 1) return;

    auto fams = families_of(row);
    for (auto& [fam, _] : fams) {
        bool listed = std::any_of(row.vars.begin(), row.vars.end(),
                                  [&](const VarSpec& v) { return v.family == fam; });
        if (!listed)
            throw AppendixParseError(row.line,
                                     std::string("letter '") + fam + "' has no condition");
    }

    std::vector<char> order;
    for (auto& [fam, _] : fams) order.push_back(fam);

    std::map<char, int> assign;
    auto admissible = [&]() {
        // every primed letter stays in the index set; letters from
        // different families are never Dynkin neighbours
        std::vector<int> concrete[4];
        for (size_t a = 0; a < order.size(); ++a) {
            char fam = order[a];
            for (int p = 0; p <= fams[fam]; ++p) {
                int x = assign[fam] + p;
                if (x > ell) return false;
                concrete[a].push_back(x);
            }
        }
        for (size_t a = 0; a < order.size(); ++a)
            for (size_t b = a + 1; b < order.size(); ++b)
                for (int x : concrete[a])
                    for (int y : concrete[b])
                        if (std::abs(x - y) <= 1) return false;
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == order.size()) {
            if (admissible()) emit(row, assign, table);
            return;
        }
        char fam = order[k];
        auto spec = std::find_if(row.vars.begin(), row.vars.end(),
                                 [&](const VarSpec& v) { return v.family == fam; });
        for (int x : candidate_values(*spec, ell)) {
            assign[fam] = x;
            rec(k + 1);
        }
        assign.erase(fam);
    };
    rec(0);
}

}  // namespace

std::vector<AppendixEntry> load_appendix(const CartanType& ct) {
    if (ct.is_infinite())
        throw std::domain_error("load_appendix: tables require finite ell");
    int ell = ct.ell();
    auto rows = parse_fixture(kAppendixFixture);
    std::map<ResidueWord, AppendixEntry> table;
    for (const auto& row : rows) instantiate_row(row, ell, table);

    std::vector<AppendixEntry> out;
    for (auto& [_, e] : table) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(), [](const AppendixEntry& a, const AppendixEntry& b) {
        if (a.label.size() != b.label.size()) return a.label.size() < b.label.size();
        return a.label < b.label;
    });
    return out;
}

CrossCheckReport cross_check(const std::vector<AppendixEntry>& entries, const CartanType& ct) {
    CrossCheckReport rep;
    std::vector<int> degrees;
    for (const auto& e : entries) {
        ++rep.entries;
        if (!e.flag.empty())
            rep.flagged.push_back("L(" + word_to_string(e.label) + "): " + e.flag);
        int n = static_cast<int>(e.label.size());
        if (std::find(degrees.begin(), degrees.end(), n) == degrees.end())
            degrees.push_back(n);
        if (!survives_lambda0(e.character)) continue;
        ++rep.survivors;
        ++rep.survivors_per_degree[n];

        std::string name = "L(" + word_to_string(e.label) + ")";
        auto lam = path_to_partition(e.label, ct);
        if (!lam) {
            rep.failures.push_back(name + ": label is not a valid path");
            continue;
        }
        for (Residue i = 0; i <= ct.ell(); ++i) {
            int from_ch = eps_from_character(e.character, i);
            int from_cr = eps(*lam, ct, i);
            if (from_ch != from_cr)
                rep.failures.push_back(name + ": eps_" + std::to_string(i) + " " +
                                       std::to_string(from_ch) + " (character) != " +
                                       std::to_string(from_cr) + " (crystal)");
        }
        long long gamma0 = std::count(e.label.begin(), e.label.end(), 0);
        bool type_m_content = gamma0 % 2 == 0;
        bool type_m_parts = b_of(*lam, ct) % 2 == 0;
        if (type_m_content != type_m_parts)
            rep.failures.push_back(name + ": content parity type mismatch at " +
                                   to_string(*lam));
    }
    for (int n : degrees) {
        int expect = static_cast<int>(enumerate_restricted(n, ct).size());
        rep.expected_per_degree[n] = expect;
        if (rep.survivors_per_degree[n] != expect)
            rep.failures.push_back("degree " + std::to_string(n) + ": " +
                                   std::to_string(rep.survivors_per_degree[n]) +
                                   " survivors != " + std::to_string(expect) +
                                   " restricted partitions");
    }
    return rep;
}

}  // namespace spincrystal
