#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spincrystal/cartan.hpp"
#include "spincrystal/partitions.hpp"

namespace spincrystal {

enum class Algebra { W, S };
enum class Direction { restrict, induce };

/// One residue's contribution to a restriction/induction: the outer
/// multiplicity of the block projection, the socle (resp. cosocle) label
/// with its multiplicity, and whether the piece is irreducible.
struct BranchPiece {
    Residue i = 0;
    int outer_mult = 1;
    std::optional<Partition> socle;  // absent when the statistic is 0
    int socle_mult = 0;
    bool irreducible = false;
};

struct BranchReport {
    Algebra algebra = Algebra::W;
    Direction direction = Direction::restrict;
    Partition source;
    std::vector<BranchPiece> pieces;
    bool completely_reducible = true;
};

/// Theorems determining socles/cosocles of e_i / f_i applied to an
/// irreducible: socle label e~_i(lam) with multiplicity eps_i (restrict)
/// or f~_i(lam) with multiplicity phi_i (induce); outer multiplicities by
/// the parity of b(lam) (W) or a(lam) (S). Throws std::invalid_argument
/// on non-restricted input.
BranchReport restrict_W(const Partition& lam, const CartanType& ct);
BranchReport induce_W(const Partition& lam, const CartanType& ct);
BranchReport restrict_S(const Partition& lam, const CartanType& ct);
BranchReport induce_S(const Partition& lam, const CartanType& ct);

/// Irreducible-restriction predicates: for S(n), eps_0 = sum eps_i = 1
/// when a(lam) is even, sum eps_i = 1 when odd; for A(n) the two
/// conditions swap.
bool jantzen_seitz_S(const Partition& lam, const CartanType& ct);
bool jantzen_seitz_A(const Partition& lam, const CartanType& ct);

/// Label of the basic spin module: with n = a h + b, 0 <= b < h,
/// (h^a, b) if b != 0, else (h^{a-1}, h-1, 1).
Partition omega(int n, const CartanType& ct);

/// (dimension over W(n), dimension over S(n)).
std::pair<unsigned long long, unsigned long long> basic_spin_dims(int n, const CartanType& ct);

std::string branch_report_json(const BranchReport& rep);

}  // namespace spincrystal
