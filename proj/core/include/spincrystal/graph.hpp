#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincrystal/cartan.hpp"
#include "spincrystal/partitions.hpp"

namespace spincrystal {

enum class ModuleType { M, Q };

struct GraphNode {
    Partition partition;
    int deg = 0;
    ContentVector gamma;
    std::vector<int> eps;  // indexed by residue 0..rank-1
    std::vector<int> phi;
    ModuleType type = ModuleType::M;
};

struct GraphEdge {
    Partition from;
    Residue label = 0;
    Partition to;
};

/// The highest-weight crystal on restricted h-strict partitions, generated
/// breadth-first from the empty partition up to degree max_n. Nodes in each
/// layer are sorted lexicographically; edges by (from, label).
class CrystalGraph {
public:
    CrystalGraph(CartanType ct, int max_n);

    const CartanType& cartan_type() const { return ct_; }
    int max_n() const { return max_n_; }
    int rank() const { return rank_; }  // residues 0..rank-1 tracked per node
    const std::vector<std::vector<GraphNode>>& layers() const { return layers_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    std::string export_dot() const;
    std::string export_json() const;

private:
    CartanType ct_;
    int max_n_;
    int rank_;
    std::vector<std::vector<GraphNode>> layers_;
    std::vector<GraphEdge> edges_;
};

/// f_tilde along the labels starting from the empty partition; nullopt if
/// some step is undefined.
std::optional<Partition> path_to_partition(const std::vector<Residue>& labels,
                                           const CartanType& ct);

/// A path from the empty partition to lam: repeatedly strip the good node
/// of the smallest residue with eps > 0. Throws std::invalid_argument if
/// lam is not restricted h-strict.
std::vector<Residue> partition_to_canonical_path(const Partition& lam, const CartanType& ct);

}  // namespace spincrystal
