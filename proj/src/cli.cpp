#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treearch/errors.hpp"
#include "treearch/json_io.hpp"
#include "treearch/lengths.hpp"
#include "treearch/newick.hpp"
#include "treearch/render.hpp"
#include "treearch/slopes.hpp"
#include "treearch/verify.hpp"

namespace treearch {

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw parse_error("cannot read input '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

// A vertex given on the command line: a label when one matches, otherwise a
// plain vertex number.
int resolve_vertex(const Tree& t, const std::string& given) {
    int v = t.find_label(given);
    if (v >= 0) return v;
    try {
        std::size_t used = 0;
        v = std::stoi(given, &used);
        if (used == given.size() && v >= 0 && v < t.n()) return v;
    } catch (const std::exception&) {
    }
    throw invalid_tree_error("no vertex named '" + given + "'");
}

int max_depth_from(const Tree& t, int root) {
    std::vector<int> depth(t.n(), -1);
    std::vector<int> stack{root};
    depth[root] = 0;
    int best = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        best = std::max(best, depth[v]);
        for (int w : t.neighbors(v))
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                stack.push_back(w);
            }
    }
    return best;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw parse_error("cannot write output '" + out_path + "'");
    out << text;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Tree drawings with convex faces at optimal angular resolution"};
    app.name("layout");

    std::string input;
    std::string lengths = "uniform";
    std::string format = "svg";
    std::string out_path;
    std::string placement_root_arg;
    bool fixed_embedding = false;
    bool circles = false;
    bool no_verify = false;
    double scale = 40.0;

    app.add_option("input", input,
                   "Tree file, Newick or JSON ('-' reads standard input)")
        ->required();
    app.add_flag("--fixed-embedding", fixed_embedding,
                 "Keep the input rotation system instead of re-embedding");
    app.add_option("--lengths", lengths, "Edge length strategy")
        ->check(CLI::IsMember(
            {"uniform", "radial", "inverse-depth", "sqrt-subtree", "weights"}))
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"svg", "json", "report"}))
        ->capture_default_str();
    app.add_flag("--circles", circles, "Draw the depth guide circles (radial lengths)");
    app.add_option("--scale", scale, "Pixels per drawing unit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--placement-root", placement_root_arg,
                   "Vertex to place at the origin (label or number)");
    app.add_option("-o,--output", out_path, "Write to a file instead of standard output");
    app.add_flag("--no-verify", no_verify,
                 "Skip the quadratic planarity check (large inputs)");

    std::vector<char*> argv;
    std::string prog = "layout";
    argv.push_back(prog.data());
    std::vector<std::string> copy(args);
    for (std::string& a : copy) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Bad command lines count as parse errors; --help stays success.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const std::string text = read_input(input);
        const Tree tree = looks_like_json(text) ? parse_json(text) : parse_newick(text);

        const LayoutMode mode =
            fixed_embedding ? LayoutMode::FixedEmbedding : LayoutMode::Free;
        const Layout lay = assign_slopes(tree, mode);

        const int placement_root = placement_root_arg.empty()
                                       ? lay.slope_root
                                       : resolve_vertex(lay.tree, placement_root_arg);

        Drawing drawing;
        if (lengths == "radial") {
            drawing = place_radial(lay.slopes, lay.tree, placement_root);
        } else {
            LengthStrategy strategy = LengthStrategy::Uniform;
            if (lengths == "inverse-depth") strategy = LengthStrategy::InverseDepth;
            if (lengths == "sqrt-subtree") strategy = LengthStrategy::SqrtSubtree;
            if (lengths == "weights") strategy = LengthStrategy::Weighted;
            drawing = place(lay.slopes, lay.tree, strategy, placement_root);
        }

        if (!no_verify) {
            const std::vector<Violation> crossings = check_planar(lay.tree, drawing.position);
            if (!crossings.empty())
                throw verification_error("drawing failed the planarity check: " +
                                         crossings.front().detail);
        }

        std::string out;
        if (format == "report") {
            out = report_line(lay) + "\n";
        } else if (format == "json") {
            out = to_json(lay, drawing);
        } else {
            RenderOptions opts;
            opts.scale = scale;
            if (circles && lengths == "radial") {
                opts.guide_circles = true;
                for (int d = 1; d <= max_depth_from(lay.tree, placement_root); ++d)
                    opts.circle_radii.push_back(static_cast<double>(d));
            }
            out = to_svg(drawing, opts);
        }
        write_output(out_path, out);
        return 0;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const invalid_tree_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace treearch
