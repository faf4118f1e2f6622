#pragma once

#include <string>
#include <vector>

#include "spincrystal/cartan.hpp"
#include "spincrystal/graph.hpp"  // ModuleType
#include "spincrystal/partitions.hpp"

namespace spincrystal {

/// A block is determined by the content, equivalently by (bar core,
/// bar weight); the core/weight are carried for display.
struct BlockId {
    ContentVector gamma;
    Partition core;
    int weight = 0;

    bool operator==(const BlockId& o) const { return gamma == o.gamma; }
    bool operator<(const BlockId& o) const { return gamma < o.gamma; }
};

BlockId block_of(const Partition& lam, const CartanType& ct);

/// Number of partitions of N with parts in ell colors: coefficient of q^N
/// in prod_k (1-q^k)^(-ell). Throws std::overflow_error if the count
/// exceeds long long.
long long par_ell(int N, int ell);

/// Number of restricted h-strict partitions of |lam| sharing lam's content.
long long block_size(const Partition& lam, const CartanType& ct);

struct KacReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Assert block_size(lam) = par_ell(bar_weight(lam), ell) across degree n.
KacReport kac_check(int n, const CartanType& ct);

ModuleType type_W(const Partition& lam, const CartanType& ct);  // parity of b(lam)
ModuleType type_S(const Partition& lam, const CartanType& ct);  // parity of a(lam)
ModuleType type_from_content(const ContentVector& gamma);       // parity of gamma_0

bool is_projective_W(const Partition& lam, const CartanType& ct);
bool is_projective_S(const Partition& lam, const CartanType& ct);

/// #{a even} + 2 #{a odd} resp. 2 #{a even} + #{a odd} over restricted
/// h-strict partitions of n.
long long count_ungraded_S(int n, const CartanType& ct);
long long count_irreducible_A(int n, const CartanType& ct);

}  // namespace spincrystal
