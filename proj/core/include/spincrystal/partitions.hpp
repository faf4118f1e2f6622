#pragma once

#include <string>
#include <vector>

#include "spincrystal/cartan.hpp"

namespace spincrystal {

/// Weakly decreasing list of positive parts. The empty partition is {}.
using Partition = std::vector<int>;

struct Node {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    bool operator==(const Node& o) const { return row == o.row && col == o.col; }
};

enum class BarKind { B1, B2 };

/// An h-bar: B1 strips the rightmost h nodes of row1, B2 deletes rows
/// row1 < row2 whose lengths sum to h. Rows are 1-based.
struct Bar {
    BarKind kind;
    int row1 = 0;
    int row2 = 0;  // only for B2
};

int degree(const Partition& lam);
bool is_valid_partition(const Partition& lam);

/// True iff every repeated positive part is divisible by h.
/// At h = infinity: true iff all parts are distinct.
bool is_h_strict(const Partition& lam, const CartanType& ct);

/// Successive differences bounded by h (< h at multiples of h, <= h otherwise).
bool is_restricted(const Partition& lam, const CartanType& ct);

/// Residue of a column: the folded pattern 0,1,...,l,...,1,0 repeating
/// with period h; col-1 itself when h = infinity.
Residue residue(int col, const CartanType& ct);

ContentVector content(const Partition& lam, const CartanType& ct);

/// All h-strict (resp. restricted h-strict) partitions of n, sorted
/// lexicographically.
std::vector<Partition> enumerate_h_strict(int n, const CartanType& ct);
std::vector<Partition> enumerate_restricted(int n, const CartanType& ct);

/// All h-bars of lam whose removal (after re-sorting) is again h-strict.
std::vector<Bar> h_bars(const Partition& lam, const CartanType& ct);

/// Remove one bar, re-sort rows, drop empty rows.
Partition remove_bar(const Partition& lam, const Bar& bar, const CartanType& ct);

Partition bar_core(const Partition& lam, const CartanType& ct);
int bar_weight(const Partition& lam, const CartanType& ct);

/// Number of parts not divisible by h; a = n - b.
int b_of(const Partition& lam, const CartanType& ct);
int a_of(const Partition& lam, const CartanType& ct);

std::string to_string(const Partition& lam);  // "[4,1]"
/// Accepts "4,1", "[4,1]" or "" / "[]" for the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace spincrystal
