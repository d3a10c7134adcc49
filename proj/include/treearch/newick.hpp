#pragma once

#include <string>

#include "treearch/tree.hpp"

namespace treearch {

// Parses a Newick-subset string: nested parentheses, comma-separated
// children, optional labels, optional ":<positive decimal>" edge weights and a
// terminating ";".  Child order in the text becomes the rotation system
// (parent first, then children in listed order) and the outermost node
// becomes the designated root.  Vertices are numbered in preorder.  A length
// attached to the outermost node is ignored (it has no parent edge).
Tree parse_newick(const std::string& text);

// Inverse of parse_newick for the tree's own root (vertex 0 when no root is
// set).  Labels are emitted verbatim; weights with shortest round-trip
// formatting.
std::string to_newick(const Tree& t);

} // namespace treearch
