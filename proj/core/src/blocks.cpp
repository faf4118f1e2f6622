#include "spincrystal/blocks.hpp"

#include <limits>

namespace spincrystal {

BlockId block_of(const Partition& lam, const CartanType& ct) {
    if (!is_h_strict(lam, ct))
        throw std::invalid_argument("block_of: not h-strict: " + to_string(lam));
    return {content(lam, ct), bar_core(lam, ct), bar_weight(lam, ct)};
}

long long par_ell(int N, int ell) {
    if (N < 0 || ell < 0) throw std::invalid_argument("par_ell: negative argument");
    std::vector<long long> coeff(N + 1, 0);
    coeff[0] = 1;
    // multiply by (1-q^k)^(-1), ell times for each part size k
    for (int color = 0; color < ell; ++color)
        for (int k = 1; k <= N; ++k)
            for (int v = k; v <= N; ++v) {
                if (coeff[v] > std::numeric_limits<long long>::max() - coeff[v - k])
                    throw std::overflow_error("par_ell: count overflow");
                coeff[v] += coeff[v - k];
            }
    return coeff[N];
}

long long block_size(const Partition& lam, const CartanType& ct) {
    if (!is_restricted(lam, ct))
        throw std::invalid_argument("block_size: not restricted h-strict: " + to_string(lam));
    ContentVector gamma = content(lam, ct);
    long long count = 0;
    for (const auto& mu : enumerate_restricted(degree(lam), ct))
        if (content(mu, ct) == gamma) ++count;
    return count;
}

KacReport kac_check(int n, const CartanType& ct) {
    KacReport rep;
    for (const auto& lam : enumerate_restricted(n, ct)) {
        ++rep.checked;
        long long size = block_size(lam, ct);
        long long expect = ct.is_infinite() ? 1 : par_ell(bar_weight(lam, ct), ct.ell());
        if (size != expect)
            rep.failures.push_back(to_string(lam) + ": block size " + std::to_string(size) +
                                   " != " + std::to_string(expect));
    }
    return rep;
}

ModuleType type_W(const Partition& lam, const CartanType& ct) {
    return b_of(lam, ct) % 2 == 0 ? ModuleType::M : ModuleType::Q;
}

ModuleType type_S(const Partition& lam, const CartanType& ct) {
    return a_of(lam, ct) % 2 == 0 ? ModuleType::M : ModuleType::Q;
}

ModuleType type_from_content(const ContentVector& gamma) {
    return gamma[0] % 2 == 0 ? ModuleType::M : ModuleType::Q;
}

bool is_projective_W(const Partition& lam, const CartanType& ct) {
    return bar_weight(lam, ct) == 0;
}

bool is_projective_S(const Partition& lam, const CartanType& ct) {
    return bar_weight(lam, ct) == 0;
}

namespace {

std::pair<long long, long long> parity_counts(int n, const CartanType& ct) {
    long long even = 0, odd = 0;
    for (const auto& lam : enumerate_restricted(n, ct))
        (a_of(lam, ct) % 2 == 0 ? even : odd) += 1;
    return {even, odd};
}

}  // namespace

long long count_ungraded_S(int n, const CartanType& ct) {
    auto [even, odd] = parity_counts(n, ct);
    return even + 2 * odd;
}

long long count_irreducible_A(int n, const CartanType& ct) {
    auto [even, odd] = parity_counts(n, ct);
    return 2 * even + odd;
}

}  // namespace spincrystal
