#pragma once

#include <array>
#include <string>
#include <vector>

#include "treearch/tree.hpp"

namespace treearch {

// Class of a rooted subtree (the subtree hanging below a directed edge,
// including that edge).
enum class SubtreeClass { Path, Rake, Other };

enum class TreeKind { Path, Rake, TripleRake, General };

enum class Handedness { Left, Right };

// A turn: interior degree-3 vertex of an oriented spine path, its pendant
// (tooth) neighbor, and which way the spine bends there in the embedding.
struct RakeTurn {
    int vertex = -1;
    int tooth = -1;
    Handedness hand = Handedness::Left;
};

struct RakeStats {
    // Minimal path through all degree-3 vertices, oriented from its smaller-id
    // endpoint.  A single vertex when only one degree-3 vertex exists.
    std::vector<int> spine;
    std::vector<RakeTurn> turns; // in spine order
    int double_turns = 0;        // adjacent same-handed turn pairs, overlapping
};

struct TripleRakeStats {
    int hub = -1; // the unique branch vertex of the degree-3 hull
    // Hull paths leaving the hub (hub itself first), in hub rotation order.
    std::array<std::vector<int>, 3> branches;
    std::array<std::vector<RakeTurn>, 3> turns; // oriented hub-outward
    int short_paths = 0;  // branches without any turn vertex
    int double_turns = 0; // total over the three branches
};

struct TreeClassification {
    TreeKind kind = TreeKind::Path;
    RakeStats rake;        // populated when kind == Rake
    TripleRakeStats triple; // populated when kind == TripleRake
};

// Bottom-up class of the subtree below every vertex when the tree is rooted
// at `root`; slot [root] holds the merge of the root's children by the same
// rules.  O(n), embedding-independent.
std::vector<SubtreeClass> classify_subtrees(const Tree& t, int root);

// Whole-tree class with rake / triple-rake statistics attached.
TreeClassification classify_tree(const Tree& t);

// Statistics extractors; throw invalid_tree_error when the tree is not of the
// respective class.
RakeStats rake_stats(const Tree& t);
TripleRakeStats triple_rake_stats(const Tree& t);

// Bend direction at a degree-3 vertex of an oriented path: Left when the
// counterclockwise rotation cyclically reads (prev, tooth, next).
Handedness turn_hand(const Tree& t, int v, int prev, int next);

// Overlapping count of adjacent same-handed pairs (LLL contributes 2).
int count_double_turns(const std::vector<RakeTurn>& turns);

const char* kind_name(TreeKind k);

} // namespace treearch
