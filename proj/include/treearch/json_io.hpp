#pragma once

#include <string>

#include "treearch/tree.hpp"

namespace treearch {

// Parses the JSON tree description:
//   {
//     "nodes":   [id, ...],                // integers, unique
//     "edges":   [[id, id], ...],
//     "order":   {"id": [id, ...], ...},   // optional neighbor rotation per vertex
//     "weights": [[id, id, w], ...],       // optional positive edge lengths
//     "labels":  {"id": "text", ...},      // optional display names
//     "root":    id                        // optional
//   }
// Vertices are renumbered 0..n-1 in nodes-list order; original ids are kept as
// labels when they differ from that numbering.  Neighbor order defaults to
// edge-list order when "order" is absent.  Malformed JSON or schema violations
// raise parse_error; cycles, disconnected inputs, duplicate ids, or an order
// inconsistent with the edges raise invalid_tree_error.
Tree parse_json(const std::string& text);

// Inverse of parse_json; emits nodes 0..n-1 with an explicit "order" field so
// the rotation system round-trips.
std::string to_json(const Tree& t);

} // namespace treearch
