#pragma once

#include "treearch/classify.hpp"
#include "treearch/optimize.hpp"
#include "treearch/slope_map.hpp"
#include "treearch/tree.hpp"
#include "treearch/turn_angle.hpp"

namespace treearch {

// A complete slope assignment for one tree, at the optimal resolution for the
// requested mode.  `tree` is the embedding actually drawn: for
// LayoutMode::FixedEmbedding it is the input tree, for LayoutMode::Free it may
// carry re-ordered rotations chosen to improve the resolution.
struct Layout {
    Tree tree;
    int slope_root = 0;
    SlopeMap slopes;
    TurnAngle resolution;
    TreeClassification classification;
    LayoutMode mode = LayoutMode::FixedEmbedding;
};

// Assigns a direction to every edge of `t` so that every face between
// consecutive leaves is a convex arch and the smallest angle between edges at
// a vertex equals optimal_resolution(t, mode).  The result is self-checked
// before it is returned; a verification_error signals a construction bug, not
// bad input.  Throws invalid_tree_error only for trees that are not trees.
Layout assign_slopes(const Tree& t, LayoutMode mode);

// Draws the rake subtree hanging below the edge parent->top with every edge
// at slope `lo` or `hi`, writing directions into `map`.  The subtree's leaf
// directions sweep from lo (first leaf) to hi (last leaf); the edge
// parent->top itself is set to hi when align_last is true and lo otherwise.
// Requires lo != hi and gap(lo, hi) <= 1/4 for full resolution; exposed
// separately so the two-slope scheme can be tested on its own.
void draw_rake_two_slopes(SlopeMap& map, const Tree& t, int parent, int top,
                          TurnAngle lo, TurnAngle hi, bool align_last);

// Re-embeddings used by free-mode layouts: rotations are re-ordered so the
// turn sequence alternates hands (rakes: along the spine; triple rakes: along
// each branch).  Vertex ids and edges are unchanged.
Tree embed_alternating_rake(const Tree& t);
Tree embed_alternating_triple(const Tree& t);

}  // namespace treearch
