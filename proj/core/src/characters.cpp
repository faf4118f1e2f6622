#include "spincrystal/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace spincrystal {

std::string word_to_string(const ResidueWord& w) {
    bool wide = std::any_of(w.begin(), w.end(), [](Residue r) { return r > 9; });
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (wide && k) s += ".";
        s += std::to_string(w[k]);
    }
    return s;
}

void Character::add(const ResidueWord& w, long long c) {
    if (static_cast<int>(w.size()) != deg_)
        throw std::invalid_argument("Character::add: word length != degree");
    auto it = coeffs_.find(w);
    long long v = (it == coeffs_.end() ? 0 : it->second) + c;
    if (v == 0) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
        coeffs_[w] = v;
    }
}

Character Character::operator+(const Character& o) const {
    if (deg_ != o.deg_) throw std::invalid_argument("Character: degree mismatch in +");
    Character r = *this;
    for (auto& [w, c] : o.coeffs_) r.add(w, c);
    return r;
}

std::string Character::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "." + (w.empty() ? "()" : word_to_string(w));
    }
    return s;
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

Character kato_character(Residue i, int n) {
    if (n < 0) throw std::invalid_argument("kato_character: n < 0");
    Character c(n);
    c.add(ResidueWord(n, i), factorial(n));
    return c;
}

Character wedge_character(Residue i, Residue j, int a, int b, const CartanType& ct) {
    if (std::abs(i - j) != 1)
        throw std::invalid_argument("wedge_character: i, j must be adjacent residues");
    if (a < 0 || b < 0) throw std::invalid_argument("wedge_character: negative exponent");
    long long c = -cartan_entry(i, j, ct);

    auto word = [&](int na, int nb) {
        ResidueWord w(na, i);
        w.push_back(j);
        w.insert(w.end(), nb, i);
        return w;
    };
    Character ch(a + b + 1);
    if (a + b <= c) {
        ch.add(word(a, b), factorial(a) * factorial(b));
        return ch;
    }
    if (b >= 1 && a + b - 1 == c) {
        ch.add(word(a, b), factorial(a) * factorial(b));
        ch.add(word(a + 1, b - 1), factorial(a + 1) * factorial(b - 1));
        return ch;
    }
    throw std::domain_error("wedge_character: no closed form for i^" + std::to_string(a) +
                            " j i^" + std::to_string(b) + " with <h_i,alpha_j> = " +
                            std::to_string(-c));
}

namespace {

void interleave(const ResidueWord& u, size_t ui, const ResidueWord& v, size_t vi,
                ResidueWord& acc, long long coeff, Character& out) {
    if (ui == u.size() && vi == v.size()) {
        out.add(acc, coeff);
        return;
    }
    if (ui < u.size()) {
        acc.push_back(u[ui]);
        interleave(u, ui + 1, v, vi, acc, coeff, out);
        acc.pop_back();
    }
    if (vi < v.size()) {
        acc.push_back(v[vi]);
        interleave(u, ui, v, vi + 1, acc, coeff, out);
        acc.pop_back();
    }
}

}  // namespace

Character shuffle(const Character& c1, const Character& c2) {
    Character out(c1.deg() + c2.deg());
    for (auto& [u, cu] : c1.coeffs())
        for (auto& [v, cv] : c2.coeffs()) {
            ResidueWord acc;
            acc.reserve(u.size() + v.size());
            interleave(u, 0, v, 0, acc, cu * cv, out);
        }
    return out;
}

int eps_from_character(const Character& c, Residue i) {
    if (c.zero()) throw std::invalid_argument("eps_from_character: zero character");
    int best = 0;
    for (auto& [w, _] : c.coeffs()) {
        int m = 0;
        for (auto it = w.rbegin(); it != w.rend() && *it == i; ++it) ++m;
        best = std::max(best, m);
    }
    return best;
}

int eps_star_from_character(const Character& c, Residue i) {
    if (c.zero()) throw std::invalid_argument("eps_star_from_character: zero character");
    int best = 0;
    for (auto& [w, _] : c.coeffs()) {
        int m = 0;
        for (auto it = w.begin(); it != w.end() && *it == i; ++it) ++m;
        best = std::max(best, m);
    }
    return best;
}

bool survives_lambda0(const Character& c) {
    if (c.zero()) throw std::invalid_argument("survives_lambda0: zero character");
    for (auto& [w, _] : c.coeffs()) {
        if (w.empty()) continue;
        if (w[0] != 0) return false;           // eps*_i > 0 for some i != 0
        if (w.size() >= 2 && w[1] == 0) return false;  // eps*_0 >= 2
    }
    return true;
}

}  // namespace spincrystal
