#include <string>
#include <vector>

#include "treearch/render.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return treearch::run_cli(args);
}
