#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace spincrystal {

using Residue = int;

/// Root-system datum for type A_{2l}^{(2)} (finite odd h = 2l+1 >= 3)
/// or B_infinity (h = infinity). The residue index set is
/// I = {0,...,l}, or all non-negative integers when l is infinite.
class CartanType {
public:
    static CartanType finite(int ell) {
        if (ell < 1) throw std::invalid_argument("CartanType: ell must be >= 1");
        return CartanType(ell);
    }
    static CartanType b_infinity() { return CartanType(-1); }

    bool is_infinite() const { return ell_ < 0; }
    int ell() const {
        if (is_infinite()) throw std::domain_error("CartanType: ell is infinite");
        return ell_;
    }
    int h() const {
        if (is_infinite()) throw std::domain_error("CartanType: h is infinite");
        return 2 * ell_ + 1;
    }
    bool in_index_set(Residue i) const {
        return i >= 0 && (is_infinite() || i <= ell_);
    }
    std::string str() const {
        return is_infinite() ? "inf" : std::to_string(h());
    }
    bool operator==(const CartanType& o) const { return ell_ == o.ell_; }

private:
    explicit CartanType(int ell) : ell_(ell) {}
    int ell_;  // -1 means infinity
};

/// Finitely supported residue -> count map; the gamma of a weight
/// Lambda_0 - sum gamma_i alpha_i.
class ContentVector {
public:
    ContentVector() = default;

    long long operator[](Residue i) const {
        auto it = gamma_.find(i);
        return it == gamma_.end() ? 0 : it->second;
    }
    void add(Residue i, long long k = 1) {
        if (i < 0) throw std::invalid_argument("ContentVector: negative residue");
        auto it = gamma_.find(i);
        long long v = (it == gamma_.end() ? 0 : it->second) + k;
        if (v < 0) throw std::invalid_argument("ContentVector: negative count");
        if (v == 0) {
            if (it != gamma_.end()) gamma_.erase(it);
        } else {
            gamma_[i] = v;
        }
    }
    long long degree() const {
        long long d = 0;
        for (auto& [i, c] : gamma_) d += c;
        return d;
    }
    const std::map<Residue, long long>& entries() const { return gamma_; }
    bool operator==(const ContentVector& o) const { return gamma_ == o.gamma_; }
    bool operator<(const ContentVector& o) const { return gamma_ < o.gamma_; }

private:
    std::map<Residue, long long> gamma_;
};

/// A weight written in the basis {Lambda_0, alpha_i}: lambda0 * Lambda_0
/// + sum alpha[i] * alpha_i. Enough for every weight this library touches.
struct Weight {
    long long lambda0 = 0;
    std::map<Residue, long long> alpha;

    void add_alpha(Residue i, long long k) {
        long long v = alpha[i] + k;
        if (v == 0) alpha.erase(i); else alpha[i] = v;
    }
    Weight operator+(const Weight& o) const {
        Weight w = *this;
        w.lambda0 += o.lambda0;
        for (auto& [i, c] : o.alpha) w.add_alpha(i, c);
        return w;
    }
    bool operator==(const Weight& o) const {
        return lambda0 == o.lambda0 && alpha == o.alpha;
    }
};

/// Cartan matrix entry <h_i, alpha_j>.
int cartan_entry(Residue i, Residue j, const CartanType& ct);

/// <h_i, Lambda_0 - sum gamma_j alpha_j> = delta_{i,0} - sum_j gamma_j <h_i, alpha_j>.
long long pairing_hi(Residue i, const ContentVector& gamma, const CartanType& ct);

/// <h_i, w> for a general weight.
long long pairing_weight(Residue i, const Weight& w, const CartanType& ct);

/// Coefficients of the canonical central element: {0:1, i:2 for 1<=i<=l}.
std::map<Residue, int> c_coefficients(const CartanType& ct);

}  // namespace spincrystal
