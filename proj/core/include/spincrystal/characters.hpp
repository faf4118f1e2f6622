#pragma once

#include <map>
#include <string>
#include <vector>

#include "spincrystal/cartan.hpp"

namespace spincrystal {

/// Word of residues; length = degree of the character it appears in.
using ResidueWord = std::vector<Residue>;

std::string word_to_string(const ResidueWord& w);  // "0102", or "0.1.10.2" past residue 9

/// Formal sum of residue words with integer coefficients, all words of one
/// length. Zero coefficients are never stored.
class Character {
public:
    Character() = default;
    explicit Character(int deg) : deg_(deg) {}

    int deg() const { return deg_; }
    bool zero() const { return coeffs_.empty(); }
    long long operator[](const ResidueWord& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? 0 : it->second;
    }
    void add(const ResidueWord& w, long long c);
    const std::map<ResidueWord, long long>& coeffs() const { return coeffs_; }
    bool operator==(const Character& o) const {
        return deg_ == o.deg_ && coeffs_ == o.coeffs_;
    }
    Character operator+(const Character& o) const;
    std::string str() const;  // "2.00 + 1.01"

private:
    int deg_ = 0;
    std::map<ResidueWord, long long> coeffs_;
};

/// n! times the word i^n.
Character kato_character(Residue i, int n);

/// Character of the irreducible with word label i^a j i^b:
///  a! b! [i^a j i^b] when a + b <= -<h_i, alpha_j>, and the two-term form
///  a! b! [i^a j i^b] + (a+1)! (b-1)! [i^{a+1} j i^{b-1}] when b >= 1 and
///  a + b - 1 = -<h_i, alpha_j>. Throws std::domain_error outside these
///  ranges (no closed form is available).
Character wedge_character(Residue i, Residue j, int a, int b, const CartanType& ct);

/// Bilinear extension of the order-preserving interleavings of two words.
Character shuffle(const Character& c1, const Character& c2);

/// Max m with some word ending in i^m / starting with i^k. Throw
/// std::invalid_argument on the zero character.
int eps_from_character(const Character& c, Residue i);
int eps_star_from_character(const Character& c, Residue i);

/// True iff eps*(c,0) <= 1 and eps*(c,i) = 0 for i != 0: the words
/// compatible with a highest weight pairing <h_i, .> = delta_{i,0}.
bool survives_lambda0(const Character& c);

}  // namespace spincrystal
