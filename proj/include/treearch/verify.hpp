#pragma once

#include <array>
#include <string>
#include <vector>

#include "treearch/optimize.hpp"
#include "treearch/slope_map.hpp"
#include "treearch/tree.hpp"
#include "treearch/turn_angle.hpp"

namespace treearch {

enum class ViolationKind { NonConvexArch, Crossing, ResolutionMismatch, ForkMismatch };

struct Violation {
    ViolationKind kind = ViolationKind::NonConvexArch;
    int a = -1; // leaf / vertex / edge index, depending on kind
    int b = -1;
    std::string detail;
};

// True iff some rotation of the angle circle maps the direction sequence into
// a closed half-turn window with the values nondecreasing along the chain.
// Equivalently: the minimal nondecreasing lift rises at most 1/2 turn.
// Throws std::invalid_argument on an empty sequence.
bool is_convex_arch(const std::vector<TurnAngle>& dirs);

// Checks that the path between every cyclically consecutive leaf pair (in the
// radial order around slopes.root()) is a convex arch.  Walks the face tour
// once: O(n).  Empty result certifies that the drawing has convex faces, and
// hence is planar for every choice of positive edge lengths.
std::vector<Violation> check_convex_faces(const Tree& t, const SlopeMap& slopes);

// Structural slope sanity: at every vertex the cyclic order of incident edge
// directions must equal the rotation system (distinct directions, one wind),
// and the leaf directions in radial order must sweep exactly one full turn.
std::vector<Violation> check_slope_consistency(const Tree& t, const SlopeMap& slopes);

// Minimum cyclic gap between directions of edges sharing a vertex of degree
// >= 2; 1/2 turn by convention when no such vertex exists.
TurnAngle measure_resolution(const Tree& t, const SlopeMap& slopes);

// Pairwise segment-intersection scan over all edge pairs not sharing an
// endpoint; touching counts as a crossing.  O(n^2), intended for desk-scale
// validation.  `tol` is an absolute distance tolerance; orientation signs
// within rounding noise of zero (collinear chains) defer to the distance test.
std::vector<Violation> check_planar(const Tree& t,
                                    const std::vector<std::array<double, 2>>& pos,
                                    double tol = 1e-12);

// Exhaustive minimum of fork_report(...).total_forks over every rotation
// system of t (root neighbor order fixed up to rotation).  Factorial; guarded
// by max_n.
int brute_force_min_forks(const Tree& t, int root, int max_n = 9);

} // namespace treearch
