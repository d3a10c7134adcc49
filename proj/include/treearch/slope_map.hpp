#pragma once

#include <vector>

#include "treearch/errors.hpp"
#include "treearch/tree.hpp"
#include "treearch/turn_angle.hpp"

namespace treearch {

// Exact direction of every parent->child edge of a rooted tree; the reversed
// edge is implied at +1/2 turn.  Array-backed and keyed by the child vertex,
// so lookups are O(1) and the map stays cheap at millions of vertices.
class SlopeMap {
public:
    SlopeMap() = default;

    SlopeMap(const Tree& t, int root);

    int root() const noexcept { return root_; }
    int parent(int v) const { return parent_[v]; }

    void set_down(int v, const TurnAngle& a);
    bool has_down(int v) const { return assigned_[v] != 0; }
    TurnAngle down(int v) const;

    // Direction of the directed edge u -> v, either orientation.
    TurnAngle slope(int u, int v) const;

    // True when every non-root vertex has been assigned.
    bool complete() const;

private:
    int root_ = -1;
    std::vector<int> parent_;
    std::vector<TurnAngle> down_;
    std::vector<char> assigned_;
};

} // namespace treearch
