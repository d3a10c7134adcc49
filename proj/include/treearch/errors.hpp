#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treearch {

// Thrown when textual input (Newick or JSON) cannot be parsed.  Carries the
// byte offset of the offending character when one is known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what)
        : std::runtime_error(what) {}

    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position),
          has_position_(true) {}

    bool has_position() const noexcept { return has_position_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_ = 0;
    bool has_position_ = false;
};

// Thrown when input parses but does not describe a valid tree: disconnected
// node sets, cycles, duplicate edges, rotation data that contradicts the edge
// list, and so on.
class invalid_tree_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a finished drawing fails one of the library's own sanity
// checks (non-convex face, wrong angular resolution, crossing edges).
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace treearch
