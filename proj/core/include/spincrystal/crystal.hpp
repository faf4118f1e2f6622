#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spincrystal/cartan.hpp"
#include "spincrystal/partitions.hpp"

namespace spincrystal {

enum class Sign { plus, minus };
enum class RuleCase { R1, R2, A1, A2 };

struct SignedNode {
    Node node;
    Sign sign;
    RuleCase rule;
};

/// Signed nodes in rim order: row descending, then column ascending
/// (bottom left to top right).
using Signature = std::vector<SignedNode>;

/// Nodes removable (resp. addable) for residue i, in rim order.
/// The sign of an R2 pair sits on the left node, of an A2 pair on the
/// right node; a candidate whose one-node diagram change is not a valid
/// Young shape is excluded.
std::vector<SignedNode> removable_nodes(const Partition& lam, const CartanType& ct, Residue i);
std::vector<SignedNode> addable_nodes(const Partition& lam, const CartanType& ct, Residue i);

Signature signature(const Partition& lam, const CartanType& ct, Residue i);

/// Erase adjacent +- pairs until none remain; result matches -*+*.
Signature reduce_signature(const Signature& sig);

/// Counts of -'s / +'s in the reduced i-signature (normal / conormal nodes).
int eps(const Partition& lam, const CartanType& ct, Residue i);
int phi(const Partition& lam, const CartanType& ct, Residue i);

/// Remove the i-good node (rightmost normal) / add the i-cogood node
/// (leftmost conormal); nullopt when eps = 0 / phi = 0.
std::optional<Partition> e_tilde(const Partition& lam, const CartanType& ct, Residue i);
std::optional<Partition> f_tilde(const Partition& lam, const CartanType& ct, Residue i);

/// wt(lam) = Lambda_0 - sum gamma_i alpha_i, returned as (1, gamma).
std::pair<long long, ContentVector> weight(const Partition& lam, const CartanType& ct);

}  // namespace spincrystal
