#include "spincrystal/cartan.hpp"

#include <cstdlib>

namespace spincrystal {

int cartan_entry(Residue i, Residue j, const CartanType& ct) {
    if (!ct.in_index_set(i) || !ct.in_index_set(j))
        throw std::out_of_range("cartan_entry: residue outside index set");
    if (i == j) return 2;
    if (!ct.is_infinite() && ct.ell() == 1) {
        // 2x2 case: rows (2,-4),(-1,2)
        return i == 0 ? -4 : -1;
    }
    if (std::abs(i - j) != 1) return 0;
    if (i == 0 && j == 1) return -2;
    if (!ct.is_infinite() && i == ct.ell() - 1 && j == ct.ell()) return -2;
    return -1;
}

long long pairing_hi(Residue i, const ContentVector& gamma, const CartanType& ct) {
    if (!ct.in_index_set(i))
        throw std::out_of_range("pairing_hi: residue outside index set");
    long long r = (i == 0) ? 1 : 0;
    for (auto& [j, c] : gamma.entries())
        r -= c * cartan_entry(i, j, ct);
    return r;
}

long long pairing_weight(Residue i, const Weight& w, const CartanType& ct) {
    if (!ct.in_index_set(i))
        throw std::out_of_range("pairing_weight: residue outside index set");
    long long r = w.lambda0 * (i == 0 ? 1 : 0);
    for (auto& [j, c] : w.alpha)
        r += c * cartan_entry(i, j, ct);
    return r;
}

std::map<Residue, int> c_coefficients(const CartanType& ct) {
    if (ct.is_infinite())
        throw std::domain_error("c_coefficients: undefined for B_infinity");
    std::map<Residue, int> c;
    c[0] = 1;
    for (int i = 1; i <= ct.ell(); ++i) c[i] = 2;
    return c;
}

}  // namespace spincrystal
