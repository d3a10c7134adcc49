#pragma once

#include <array>
#include <string>
#include <vector>

#include "treearch/classify.hpp"
#include "treearch/slope_map.hpp"
#include "treearch/tree.hpp"
#include "treearch/turn_angle.hpp"

namespace treearch {

enum class LengthStrategy { Uniform, InverseDepth, SqrtSubtree, Weighted };

const char* strategy_name(LengthStrategy s);

// Summary attached to a finished drawing: what kind of tree was drawn, the
// resolution its slopes realise, and how the edge lengths were chosen.
struct DrawingReport {
    TreeKind kind = TreeKind::Path;
    TurnAngle resolution;
    std::string strategy;
    int placement_root = 0;
};

// Concrete coordinates for a slope assignment.  Positions are indexed by
// vertex; for every edge u->v the segment from position[u] to position[v]
// points exactly in direction slopes.slope(u, v).
struct Drawing {
    std::vector<std::array<double, 2>> position;
    SlopeMap slopes;
    DrawingReport report;
};

// Edge length of every placement edge (indexed by the child vertex of the
// tree rooted at placement_root; the slot for placement_root itself is 0).
// Uniform: 1.  InverseDepth: 1/depth of the child, root children at depth 1.
// SqrtSubtree: square root of the vertex count of the child's subtree.
// Weighted: the tree's own edge weights, which must be present on every edge.
std::vector<double> strategy_lengths(const Tree& t, LengthStrategy s, int placement_root);

// Walks the tree from placement_root at the origin, laying every edge in its
// slope direction.  The placement root does not have to be the vertex the
// slopes were rooted at.
Drawing place(const SlopeMap& slopes, const Tree& t, LengthStrategy strategy,
              int placement_root);
Drawing place(const SlopeMap& slopes, const Tree& t, LengthStrategy strategy);

// Same walk with caller-provided lengths (all strictly positive), indexed as
// in strategy_lengths.
Drawing place(const SlopeMap& slopes, const Tree& t, const std::vector<double>& lengths,
              int placement_root, const std::string& strategy_label = "custom");

// Places every vertex on the circle whose radius is the vertex's depth: each
// edge keeps its slope and is stretched until it meets the child's circle,
// which a ray from strictly inside always crosses exactly once going forward.
// Custom radii (one per depth, starting at depth 1) must be positive and
// strictly increasing.
Drawing place_radial(const SlopeMap& slopes, const Tree& t, int placement_root,
                     const std::vector<double>& radii = {});

// Drawing at the linear blend (1-s)*from + s*to of the two strategies' edge
// lengths.  Every blend of positive lengths is positive, so the whole morph
// stays planar whenever the slopes have convex faces.
Drawing morph(const SlopeMap& slopes, const Tree& t, LengthStrategy from,
              LengthStrategy to, double s, int placement_root);

} // namespace treearch
