#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gridtree/cnf.hpp"
#include "gridtree/error.hpp"
#include "gridtree/perfect.hpp"
#include "gridtree/reduction.hpp"
#include "gridtree/solver.hpp"
#include "gridtree/svg.hpp"
#include "gridtree/verify.hpp"

namespace gridtree::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path);
}

// Writes to `path`, or to `out` when the path is "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

struct Caps {
  std::size_t nodes;
  std::size_t cells;
};

// GRIDTREE_NODE_CAP is "<nodes>" or "<nodes>,<cells>".
std::optional<Caps> env_caps() {
  const char* raw = std::getenv("GRIDTREE_NODE_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  try {
    const auto comma = text.find(',');
    std::size_t used = 0;
    Caps caps{std::stoul(text.substr(0, comma), &used), 0};
    if (used != text.substr(0, comma).size()) throw std::invalid_argument(text);
    caps.cells = comma == std::string::npos ? caps.nodes * caps.nodes : std::stoul(text.substr(comma + 1));
    return caps;
  } catch (const std::logic_error&) {
    throw PreconditionError("GRIDTREE_NODE_CAP must be <nodes> or <nodes>,<cells>, got '" + text + "'");
  }
}

int cmd_perfect(int k, bool with_parent, const std::string& tree_path, const std::string& emb_path,
                const std::string& svg_path, std::ostream& out) {
  if (k < 1 || k % 2 == 0) throw PreconditionError("--k must be a positive odd integer");
  const TreeDrawing d = with_parent ? embed_perfect_with_parent(k) : embed_perfect(k);
  if (!tree_path.empty()) emit(tree_path, serialize_tree(d.tree) + "\n", out);
  if (!emb_path.empty()) emit(emb_path, write_embedding(d.embedding), out);
  if (!svg_path.empty()) emit(svg_path, render_svg(d.tree, d.embedding), out);
  const GridDims dims = dims_of(d.embedding);
  if (tree_path != "-" && emb_path != "-" && svg_path != "-") {
    out << "nodes " << d.tree.size() << " width " << dims.width << " height " << dims.height << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& tree_path, const std::string& emb_path, std::int64_t width,
               std::int64_t height, const std::string& checks, std::ostream& out) {
  const auto tree = parse_tree(read_file(tree_path));
  const auto emb = parse_embedding(read_file(emb_path));
  if (width < 1 || height < 1) throw PreconditionError("--width and --height must be positive");
  const CheckSet set = checks.empty() ? default_checks() : parse_check_list(checks);
  if (set.empty()) throw PreconditionError("--checks names no check");
  const auto report = verify(tree, emb, {width, height}, set);
  out << report.render();
  return report.ok() ? kOk : kNo;
}

int cmd_reduce(const std::string& cnf_path, const std::string& tree_path,
               const std::string& meta_path, int delta, std::ostream& out) {
  const auto f = parse_dimacs(read_file(cnf_path));
  const auto r = reduce(f, delta);
  if (!tree_path.empty()) write_file(tree_path, serialize_tree(r.tree) + "\n");
  if (!meta_path.empty()) write_file(meta_path, write_meta(r));
  out << "dims " << r.w << " " << r.h << "\n";
  out << "nodes " << r.tree.size() << "\n";
  if (f.n > 24) return kOk;
  const auto model = brute_force_sat(f);
  if (model) {
    out << "sat " << format_assignment(*model) << "\n";
    return kOk;
  }
  out << "unsat\n";
  return kNo;
}

int cmd_encode(const std::string& meta_path, const std::string& assignment,
               const std::string& emb_path, std::ostream& out, std::ostream& err) {
  const auto r = read_meta(read_file(meta_path));
  const auto a = parse_assignment(assignment);
  if (a.values.size() != static_cast<std::size_t>(r.n())) {
    throw PreconditionError("assignment has " + std::to_string(a.values.size()) +
                            " values, formula has " + std::to_string(r.n()) + " variables");
  }
  if (!satisfies(r.formula, a)) {
    err << "assignment does not satisfy the formula\n";
    return kNo;
  }
  const auto e = encode_embedding(r, a);
  emit(emb_path.empty() ? "-" : emb_path, write_embedding(e), out);
  return kOk;
}

int cmd_decode(const std::string& meta_path, const std::string& emb_path, std::ostream& out) {
  const auto r = read_meta(read_file(meta_path));
  const auto e = parse_embedding(read_file(emb_path));
  const auto a = decode_assignment(r, e);
  out << format_assignment(a) << "\n";
  return satisfies(r.formula, a) ? kOk : kNo;
}

struct SolveArgs {
  std::string tree;
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::string mode = "upward";
  bool rotation = false;
  bool allow_through = false;
  bool count = false;
  std::string order = "preorder";
  unsigned threads = 1;
  std::string embedding;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto tree = parse_tree(read_file(a.tree));
  if (a.width < 1 || a.height < 1) throw PreconditionError("--width and --height must be positive");
  SolveOptions opts;
  opts.mode = a.mode == "upward"   ? SolveMode::Upward
              : a.mode == "weakly" ? SolveMode::WeaklyUpward
                                   : SolveMode::General;
  opts.respect_rotation = a.rotation;
  opts.forbid_edge_through_vertex = !a.allow_through;
  opts.count_all = a.count;
  opts.node_order = a.order == "heuristic" ? NodeOrder::Heuristic : NodeOrder::Preorder;
  opts.threads = a.threads;
  if (const auto caps = env_caps()) {
    opts.node_cap = caps->nodes;
    opts.cell_cap = caps->cells;
  }
  const auto result = solve(tree, {a.width, a.height}, opts);
  out << (result.embeddable ? "embeddable" : "not_embeddable") << "\n";
  if (result.count) out << "count " << *result.count << "\n";
  out << format_stats(result.stats) << "\n";
  if (result.witness && !a.embedding.empty()) write_file(a.embedding, write_embedding(*result.witness));
  return result.embeddable ? kOk : kNo;
}

int cmd_render(const std::string& tree_path, const std::string& emb_path,
               const std::string& meta_path, const std::string& svg_path, bool lattice, int scale,
               std::ostream& out) {
  const auto e = parse_embedding(read_file(emb_path));
  SvgStyle style;
  style.lattice_dots = lattice;
  style.scale = scale;
  RootedOrderedTree tree;
  if (!meta_path.empty()) {
    tree = read_meta(read_file(meta_path)).tree;
    style.role_colors = true;
    if (!tree_path.empty() && !parse_tree(read_file(tree_path)).same_structure(tree)) {
      throw PreconditionError("--tree does not match the tree described by --meta");
    }
  } else if (!tree_path.empty()) {
    tree = parse_tree(read_file(tree_path));
  } else {
    throw PreconditionError("render needs --tree or --meta");
  }
  if (scale < 1) throw PreconditionError("--scale must be positive");
  emit(svg_path.empty() ? "-" : svg_path, render_svg(tree, e, style), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grid drawings of rooted binary trees", "gridtree"};
  app.require_subcommand(1);

  int k = 0;
  bool with_parent = false;
  std::string tree_path, emb_path, svg_path, meta_path, cnf_path, checks, assignment;
  std::int64_t width = 0, height = 0;
  int delta = 0;
  bool lattice = false;
  int scale = 20;
  SolveArgs solve_args;

  auto* perfect = app.add_subcommand("perfect", "Draw the perfect binary tree T_k on a square grid");
  perfect->add_option("--k", k, "Odd depth")->required();
  perfect->add_flag("--with-parent", with_parent, "Add a parent above the root, filling the grid");
  perfect->add_option("--tree", tree_path, "Tree output file ('-' for stdout)");
  perfect->add_option("--embedding", emb_path, "Embedding output file ('-' for stdout)");
  perfect->add_option("--svg", svg_path, "SVG output file ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check an embedding");
  verify_cmd->add_option("--tree", tree_path)->required();
  verify_cmd->add_option("--embedding", emb_path)->required();
  verify_cmd->add_option("--width", width)->required();
  verify_cmd->add_option("--height", height)->required();
  verify_cmd->add_option("--checks", checks, "Comma-separated check names");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the tree for a 3-CNF formula");
  reduce_cmd->add_option("--cnf", cnf_path)->required();
  reduce_cmd->add_option("--tree", tree_path);
  reduce_cmd->add_option("--meta", meta_path);
  reduce_cmd->add_option("--delta", delta, "Literal attachment offset");

  auto* encode_cmd = app.add_subcommand("encode", "Embed a reduced tree from an assignment");
  encode_cmd->add_option("--meta", meta_path)->required();
  encode_cmd->add_option("--assignment", assignment, "Comma-separated 0/1 values")->required();
  encode_cmd->add_option("--embedding", emb_path);

  auto* decode_cmd = app.add_subcommand("decode", "Read an assignment off an embedding");
  decode_cmd->add_option("--meta", meta_path)->required();
  decode_cmd->add_option("--embedding", emb_path)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Exhaustive search for a grid drawing");
  solve_cmd->add_option("--tree", solve_args.tree)->required();
  solve_cmd->add_option("--width", solve_args.width)->required();
  solve_cmd->add_option("--height", solve_args.height)->required();
  solve_cmd->add_option("--mode", solve_args.mode)
      ->check(CLI::IsMember({"upward", "weakly", "general"}));
  solve_cmd->add_flag("--rotation", solve_args.rotation, "Respect the (parent, left, right) order");
  solve_cmd->add_flag("--allow-edge-through-vertex", solve_args.allow_through);
  solve_cmd->add_flag("--count", solve_args.count, "Count all drawings");
  solve_cmd->add_option("--order", solve_args.order)
      ->check(CLI::IsMember({"preorder", "heuristic"}));
  solve_cmd->add_option("--threads", solve_args.threads)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--embedding", solve_args.embedding, "Witness output file");

  auto* render_cmd = app.add_subcommand("render", "Write an SVG drawing");
  render_cmd->add_option("--tree", tree_path);
  render_cmd->add_option("--meta", meta_path, "Reduction meta file; enables role colors");
  render_cmd->add_option("--embedding", emb_path)->required();
  render_cmd->add_option("--svg", svg_path);
  render_cmd->add_flag("--lattice", lattice, "Mark unused lattice points");
  render_cmd->add_option("--scale", scale);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*perfect) return cmd_perfect(k, with_parent, tree_path, emb_path, svg_path, out);
    if (*verify_cmd) return cmd_verify(tree_path, emb_path, width, height, checks, out);
    if (*reduce_cmd) return cmd_reduce(cnf_path, tree_path, meta_path, delta, out);
    if (*encode_cmd) return cmd_encode(meta_path, assignment, emb_path, out, err);
    if (*decode_cmd) return cmd_decode(meta_path, emb_path, out);
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*render_cmd) return cmd_render(tree_path, emb_path, meta_path, svg_path, lattice, scale, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gridtree::cli
