// decomposition.hpp — Invariant-subspace partition of the eigenbasis from the coupling matrix

#pragma once

#include "lindblock/model.hpp"

#include <vector>

namespace lindblock {

// Undirected graph on eigenbasis indices with an edge (i, j), i ≠ j, wherever
// |S_ij| exceeds the threshold. Diagonal entries never create edges.
struct CouplingGraph {
    double threshold = 0.0;
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

    Eigen::Index dim() const { return static_cast<Eigen::Index>(adjacency.size()); }
};

// Default ε_S policy: 1e-12 × max |S_ij| (relative, survives rescaling of S).
double default_coupling_threshold(const Matrix& coupling_in_eigenbasis);

// Partition of {0..N-1} into invariant blocks. Canonical ordering: blocks
// sorted by smallest member, members ascending. `permutation[pos]` is the
// original index placed at position `pos`, so permuting basis vectors in this
// order makes the coupling matrix block-diagonal.
struct SubspacePartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> permutation;
    std::vector<int> block_index;  // block_index[i] = block containing index i
    double epsilon_s = 0.0;        // threshold the partition was built with

    Eigen::Index dim() const { return static_cast<Eigen::Index>(permutation.size()); }
    std::vector<int> block_sizes() const;
};

CouplingGraph coupling_graph(const EigenSystem& eig, double epsilon_s);

// Connected components of the coupling graph. This is the reachability closure
// of repeated coupling-operator application; Hermiticity of S makes membership
// symmetric, so an undirected traversal reproduces the recursive construction.
// epsilon_s < 0 selects the default threshold.
SubspacePartition invariant_partition(const EigenSystem& eig, double epsilon_s = -1.0);

// Canonicalize externally supplied blocks (must be disjoint and cover {0..N-1}).
SubspacePartition partition_from_blocks(std::vector<std::vector<int>> blocks,
                                        Eigen::Index n, double epsilon_s);

// P·S·Pᵀ for the partition's permutation; entries outside the declared blocks
// have magnitude ≤ ε_S.
Matrix block_permuted_coupling(const EigenSystem& eig, const SubspacePartition& part);

double max_off_block_magnitude(const EigenSystem& eig, const SubspacePartition& part);

}  // namespace lindblock
