#pragma once

#include <vector>

#include "treearch/classify.hpp"
#include "treearch/tree.hpp"
#include "treearch/turn_angle.hpp"

namespace treearch {

enum class LayoutMode { FixedEmbedding, Free };

// One fork: a maximal-step pair of path children adjacent in a vertex's child
// order with only rake children between them.  At the root the child order is
// cyclic, so a lone path child whose siblings are all rakes pairs with itself.
struct Fork {
    int vertex = -1;
    int first_child = -1;  // path child opening the fork
    int last_child = -1;   // path child closing it (== first_child when cyclic self-pair)
    int rakes_between = 0;
};

struct ForkReport {
    int root = -1;
    std::vector<int> forks_at;      // per-vertex fork count
    int total_forks = 0;            // f
    std::vector<int> subtree_forks; // per vertex: forks inside its own subtree (root slot == f)
    std::vector<int> excess_at;     // E_v
    int total_excess = 0;           // E(T)
    std::vector<Fork> forks;        // every fork, for span checking
    std::vector<SubtreeClass> classes;
};

// Fork and excess accounting for the tree rooted at `root`: forks per vertex
// (cyclic child order at the root, linear elsewhere), forks per subtree, and
// the excess E_v = max(0, P_v - N_v - 1) (root: max(0, P_r - N_r)) where P
// counts path children and N counts children that are neither paths nor
// rakes.  O(n).
ForkReport fork_report(const Tree& t, int root);

// Re-embedding with the fewest possible forks: at every vertex the path and
// non-path/non-rake children alternate while both remain, then the leftovers,
// then all rake children.  Achieves count == total_excess.
Tree embed_min_forks(const Tree& t, int root);

// Best achievable angular resolution for the tree, as an exact turn fraction:
// paths 1/2; rakes 1/3 free or 1/4 + 1/(2(6+2k)) embedded; triple rakes
// 1/4 + 1/(4(9-2s)) free or 1/4 + 1/(4(9-2s+2d)) embedded; everything else
// 1/E(T) free or 1/f embedded.
TurnAngle optimal_resolution(const Tree& t, LayoutMode mode);

} // namespace treearch
