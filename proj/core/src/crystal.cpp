#include "spincrystal/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace spincrystal {

namespace {

// lam with row r (1-based) changed by delta; std::nullopt when the result
// is not a valid shape. Row lam.size()+1 may be created.
std::optional<Partition> adjust_row(const Partition& lam, int r, int delta) {
    Partition mu = lam;
    if (r == static_cast<int>(mu.size()) + 1) mu.push_back(0);
    if (r < 1 || r > static_cast<int>(mu.size())) return std::nullopt;
    mu[r - 1] += delta;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    if (!is_valid_partition(mu)) return std::nullopt;
    return mu;
}

bool strict_shape(const std::optional<Partition>& mu, const CartanType& ct) {
    return mu && is_h_strict(*mu, ct);
}

// rim order: bottom row first, left to right within a row
void rim_sort(std::vector<SignedNode>& v) {
    std::sort(v.begin(), v.end(), [](const SignedNode& a, const SignedNode& b) {
        if (a.node.row != b.node.row) return a.node.row > b.node.row;
        return a.node.col < b.node.col;
    });
}

}  // namespace

std::vector<SignedNode> removable_nodes(const Partition& lam, const CartanType& ct, Residue i) {
    std::vector<SignedNode> out;
    for (int r = 1; r <= static_cast<int>(lam.size()); ++r) {
        int end = lam[r - 1];
        // one node off the end of the row
        if (residue(end, ct) == i && strict_shape(adjust_row(lam, r, -1), ct))
            out.push_back({{r, end}, Sign::minus, RuleCase::R1});
        // a pair of equal-residue nodes at the end of the row; the sign
        // sits on the left one
        if (end >= 2 && residue(end - 1, ct) == i && residue(end, ct) == i &&
            strict_shape(adjust_row(lam, r, -1), ct) &&
            strict_shape(adjust_row(lam, r, -2), ct))
            out.push_back({{r, end - 1}, Sign::minus, RuleCase::R2});
    }
    rim_sort(out);
    return out;
}

std::vector<SignedNode> addable_nodes(const Partition& lam, const CartanType& ct, Residue i) {
    std::vector<SignedNode> out;
    for (int r = 1; r <= static_cast<int>(lam.size()) + 1; ++r) {
        int end = (r <= static_cast<int>(lam.size())) ? lam[r - 1] : 0;
        if (residue(end + 1, ct) == i && strict_shape(adjust_row(lam, r, 1), ct))
            out.push_back({{r, end + 1}, Sign::plus, RuleCase::A1});
        // a pair of equal-residue slots past the end; the sign sits on the
        // right one
        if (residue(end + 1, ct) == i && residue(end + 2, ct) == i &&
            strict_shape(adjust_row(lam, r, 1), ct) &&
            strict_shape(adjust_row(lam, r, 2), ct))
            out.push_back({{r, end + 2}, Sign::plus, RuleCase::A2});
    }
    rim_sort(out);
    return out;
}

Signature signature(const Partition& lam, const CartanType& ct, Residue i) {
    Signature sig = removable_nodes(lam, ct, i);
    auto add = addable_nodes(lam, ct, i);
    sig.insert(sig.end(), add.begin(), add.end());
    rim_sort(sig);
    return sig;
}

Signature reduce_signature(const Signature& sig) {
    Signature out;
    for (const auto& sn : sig) {
        if (sn.sign == Sign::minus && !out.empty() && out.back().sign == Sign::plus)
            out.pop_back();
        else
            out.push_back(sn);
    }
    return out;
}

int eps(const Partition& lam, const CartanType& ct, Residue i) {
    int n = 0;
    for (const auto& sn : reduce_signature(signature(lam, ct, i)))
        if (sn.sign == Sign::minus) ++n;
    return n;
}

int phi(const Partition& lam, const CartanType& ct, Residue i) {
    int n = 0;
    for (const auto& sn : reduce_signature(signature(lam, ct, i)))
        if (sn.sign == Sign::plus) ++n;
    return n;
}

std::optional<Partition> e_tilde(const Partition& lam, const CartanType& ct, Residue i) {
    auto red = reduce_signature(signature(lam, ct, i));
    const SignedNode* good = nullptr;
    for (const auto& sn : red)
        if (sn.sign == Sign::minus) good = &sn;
    if (!good) return std::nullopt;
    // an R2 minus is always followed in rim order by the R1 minus of its
    // right neighbour, so the rightmost surviving minus is R1
    if (good->rule != RuleCase::R1)
        throw std::logic_error("e_tilde: good node is not a single-node removal");
    return adjust_row(lam, good->node.row, -1);
}

std::optional<Partition> f_tilde(const Partition& lam, const CartanType& ct, Residue i) {
    auto red = reduce_signature(signature(lam, ct, i));
    const SignedNode* cogood = nullptr;
    for (const auto& sn : red)
        if (sn.sign == Sign::plus) { cogood = &sn; break; }
    if (!cogood) return std::nullopt;
    if (cogood->rule != RuleCase::A1)
        throw std::logic_error("f_tilde: cogood node is not a single-node addition");
    return adjust_row(lam, cogood->node.row, 1);
}

std::pair<long long, ContentVector> weight(const Partition& lam, const CartanType& ct) {
    return {1, content(lam, ct)};
}

}  // namespace spincrystal
