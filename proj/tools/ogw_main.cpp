// Command-line frontend: enumerations, boundary reports, sign tables, degree
// and ledger reports, and library-level verification sweeps.
//
// Exit codes: 0 success, 1 validation error (bad arguments or malformed
// input), 2 internal assertion failure (a property the theory guarantees
// failed to hold).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ogw/boundary.hpp"
#include "ogw/cohomology.hpp"
#include "ogw/invariants.hpp"
#include "ogw/json_io.hpp"
#include "ogw/orientation.hpp"

using namespace ogw;

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      require(pos == item.size(), "trailing characters in " + what + ": '" + item + "'");
      out.push_back(v);
    } catch (const validation_error&) {
      throw;
    } catch (const std::exception&) {
      throw validation_error("could not parse integer in " + what + ": '" + item + "'");
    }
  }
  require(!out.empty(), what + " must not be empty");
  return out;
}

struct BaseArgs {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t beta = 0;
  std::string k_labels;  // JSON array, overrides --k
  std::string l_labels;  // JSON array, overrides --l
};

PreModuliSpec resolve_base(const BaseArgs& args) {
  PreModuliSpec base;
  if (!args.k_labels.empty()) {
    for (const json& item : parse_json(args.k_labels, "--k-labels"))
      base.k.push_back(label_from_json(item));
    std::sort(base.k.begin(), base.k.end());
  } else {
    require(args.k >= 0, "--k must be non-negative");
    for (std::int64_t i = 1; i <= args.k; ++i)
      base.k.push_back(Label::plain(static_cast<std::int32_t>(i)));
  }
  if (!args.l_labels.empty()) {
    for (const json& item : parse_json(args.l_labels, "--l-labels"))
      base.l.push_back(label_from_json(item));
    std::sort(base.l.begin(), base.l.end());
  } else {
    require(args.l >= 0, "--l must be non-negative");
    for (std::int64_t i = 1; i <= args.l; ++i)
      base.l.push_back(Label::plain(static_cast<std::int32_t>(i)));
  }
  require(args.beta >= 0, "--beta must be non-negative");
  base.beta = args.beta;
  validate(base);
  return base;
}

std::vector<std::int32_t> resolve_rho(std::int64_t r, const std::string& rho_list) {
  std::vector<std::int32_t> rho;
  if (!rho_list.empty()) {
    for (int j : parse_int_list(rho_list, "--rho")) {
      require(j >= 1, "--rho indices must be positive");
      rho.push_back(j);
    }
  } else {
    require(r >= 0, "--r must be non-negative");
    for (std::int64_t j = 1; j <= r; ++j) rho.push_back(static_cast<std::int32_t>(j));
  }
  return rho;
}

LabeledTree resolve_tree(const std::string& tree_text, const std::string& tree_file) {
  require(!tree_text.empty() || !tree_file.empty(),
          "provide a tree via --tree or --tree-file");
  std::string text = tree_text;
  if (text.empty()) {
    std::ifstream in(tree_file);
    require(in.good(), "cannot open tree file '" + tree_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return tree_from_json(parse_json(text, "tree input"));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// signs

struct SignRow {
  int tree_id;
  int r;
  int o;
  bool sorted;
  int m;
  Sign theta_v, zeta_v, closed_theta, closed_zeta;
  bool agree;
};

std::vector<SignRow> sign_rows(const std::vector<LabeledTree>& trees,
                               const std::vector<int>& ms) {
  std::vector<SignRow> rows;
  for (std::size_t id = 0; id < trees.size(); ++id) {
    const LabeledTree& t = trees[id];
    const int r = static_cast<int>(t.edges.size());
    const int o = odd_vertex_count(t);
    const bool sorted = is_sorted_odd_even(t);
    for (int m : ms) {
      const AmbientDim dim(m);
      SignRow row{static_cast<int>(id), r,
                  o,                    sorted,
                  m,                    theta(t, dim),
                  zeta(t, dim),         sorted_odd_even_theta(o, dim),
                  sorted_odd_even_zeta(r, o, dim), false};
      row.agree = row.theta_v == row.closed_theta && row.zeta_v == row.closed_zeta;
      rows.push_back(row);
    }
  }
  return rows;
}

void emit_sign_rows(const std::vector<SignRow>& rows, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const SignRow& row : rows) {
      arr.push_back(json{{"tree_id", row.tree_id},
                         {"r", row.r},
                         {"o", row.o},
                         {"is_sorted_odd_even", row.sorted},
                         {"m", row.m},
                         {"theta", row.theta_v.value()},
                         {"zeta", row.zeta_v.value()},
                         {"closed_form_theta", row.closed_theta.value()},
                         {"closed_form_zeta", row.closed_zeta.value()},
                         {"agree", row.agree}});
    }
    emit(arr);
    return;
  }
  const bool table = format == "table";
  const char sep = table ? '\t' : ',';
  std::cout << "tree-id" << sep << "r" << sep << "o" << sep << "is_sorted_odd_even" << sep
            << "m" << sep << "theta" << sep << "zeta" << sep << "closed_form_theta" << sep
            << "closed_form_zeta" << sep << "agree\n";
  for (const SignRow& row : rows) {
    std::cout << row.tree_id << sep << row.r << sep << row.o << sep
              << (row.sorted ? "true" : "false") << sep << row.m << sep
              << row.theta_v.value() << sep << row.zeta_v.value() << sep
              << row.closed_theta.value() << sep << row.closed_zeta.value() << sep
              << (row.agree ? "true" : "false") << "\n";
  }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyBounds {
  int max_k = 3;
  int max_l = 2;
  int max_beta = 3;
  int max_r = 3;
  std::vector<int> ms = {1, 2};
};

std::vector<PreModuliSpec> bounded_bases(const VerifyBounds& b) {
  std::vector<PreModuliSpec> bases;
  for (int k = 0; k <= b.max_k; ++k) {
    for (int l = 0; l <= b.max_l; ++l) {
      for (int beta = 0; beta <= b.max_beta; ++beta) {
        PreModuliSpec base;
        for (int i = 1; i <= k; ++i) base.k.push_back(Label::plain(i));
        for (int i = 1; i <= l; ++i) base.l.push_back(Label::plain(i));
        base.beta = beta;
        if (is_basic(base)) bases.push_back(std::move(base));
      }
    }
  }
  return bases;
}

std::vector<std::int32_t> initial_rho(int r) {
  std::vector<std::int32_t> rho;
  for (int j = 1; j <= r; ++j) rho.push_back(j);
  return rho;
}

int verify_sorted_odd_even(const VerifyBounds& b) {
  std::size_t checked = 0;
  for (const PreModuliSpec& base : bounded_bases(b)) {
    for (int r = 0; r <= b.max_r; ++r) {
      for (const LabeledTree& t : enumerate_trees(base, initial_rho(r))) {
        if (!is_sorted_odd_even(t)) continue;
        const int o = odd_vertex_count(t);
        for (int m : b.ms) {
          const AmbientDim dim(m);
          internal_check(theta(t, dim) == sorted_odd_even_theta(o, dim),
                         "theta disagrees with the sorted odd-even closed form");
          internal_check(zeta(t, dim) == sorted_odd_even_zeta(r, o, dim),
                         "zeta disagrees with the sorted odd-even closed form");
          ++checked;
        }
      }
    }
  }
  std::cout << "sorted-odd-even: all " << checked << " (tree, m) pairs agree\n";
  return 0;
}

int verify_smoothing(const VerifyBounds& b) {
  std::size_t steps = 0, contractions = 0;
  for (const PreModuliSpec& base : bounded_bases(b)) {
    for (int r = 0; r <= b.max_r; ++r) {
      const auto trees = enumerate_trees(base, initial_rho(r));
      for (const LabeledTree& t : trees) {
        if (is_sorted_odd_even(t)) {
          for (const LabeledTree& step : smoothing_sequence(t)) {
            internal_check(is_sorted_step(step),
                           "smoothing step lost the sorted structure");
            ++steps;
          }
        }
        for (std::int32_t e : t.edges) {
          std::vector<std::int32_t> reduced = t.edges;
          std::erase(reduced, e);
          const auto smaller = enumerate_trees(base, reduced);
          const LabeledTree c = contract_edge(t, e);
          internal_check(std::count(smaller.begin(), smaller.end(), c) == 1,
                         "contraction left the reduced enumeration");
          ++contractions;
        }
      }
    }
  }
  std::cout << "smoothing: " << steps << " steps keep the sorted structure, "
            << contractions << " contractions land in the reduced enumerations\n";
  return 0;
}

int verify_depth(const VerifyBounds& b) {
  std::size_t checked = 0;
  for (const PreModuliSpec& base : bounded_bases(b)) {
    const std::int64_t depth = max_resolution_depth(base);
    internal_check(enumerate_trees(base, initial_rho(static_cast<int>(depth) + 1)).empty(),
                   "nonempty enumeration beyond the depth bound");
    ++checked;
  }
  PreModuliSpec probe;
  probe.k = {Label::plain(1), Label::plain(2)};
  probe.beta = 1;
  internal_check(enumerate_trees(probe, {1}).size() == 1,
                 "expected one tree at r = 1 for ((1,2), {}, 1)");
  std::cout << "depth: " << checked << " bases empty beyond the bound\n";
  return 0;
}

int verify_involution(const VerifyBounds& b) {
  std::size_t wobbly = 0;
  for (const PreModuliSpec& base : bounded_bases(b)) {
    for (int r = 0; r <= b.max_r; ++r) {
      for (const LabeledTree& t : enumerate_trees(base, initial_rho(r))) {
        for (const BoundaryComponent& c :
             boundary_components(t, static_cast<std::int32_t>(r) + 1)) {
          if (c.tag != BoundaryTag::wobbly) continue;
          ++wobbly;
          const BoundaryComponent swapped = wobbly_involution(c);
          internal_check(swapped != c, "wobbly involution has a fixed point");
          internal_check(wobbly_involution(swapped) == c,
                         "wobbly involution is not an involution");
        }
      }
    }
  }
  std::cout << "involution: " << wobbly
            << " wobbly components are swapped freely and involutively\n";
  return 0;
}

int verify_degree(const VerifyBounds& b) {
  std::size_t checked = 0;
  for (int m : b.ms) {
    const AmbientDim dim(m);
    const ConstraintTuple none =
        ConstraintTuple::from_l_vec(std::vector<std::int64_t>(2 * m + 1, 0), dim);
    for (std::int64_t k = 0; k <= b.max_k * 2; ++k) {
      for (std::int64_t beta = 0; beta <= b.max_beta + 1; ++beta) {
        internal_check(invariant_degree_direct(k, none, beta, dim) ==
                           invariant_degree_closed(k, none, beta, dim),
                       "degree routes disagree at l = 0");
        ++checked;
      }
    }
  }
  std::cout << "degree: " << checked << " (k, beta, m) points agree at l = 0\n";
  return 0;
}

int verify_sym_action(const VerifyBounds& b) {
  std::size_t checked = 0, sorted_found = 0;
  for (const PreModuliSpec& base : bounded_bases(b)) {
    for (int r = 1; r <= std::min(b.max_r, 3); ++r) {
      const auto trees = enumerate_trees(base, initial_rho(r));
      if (trees.empty()) continue;

      std::vector<std::map<std::int32_t, std::int32_t>> perms;
      std::vector<std::int32_t> image = initial_rho(r);
      do {
        std::map<std::int32_t, std::int32_t> p;
        for (int i = 0; i < r; ++i) p[i + 1] = image[i];
        perms.push_back(std::move(p));
      } while (std::next_permutation(image.begin(), image.end()));

      std::set<std::string> enumerated;
      for (const LabeledTree& t : trees) enumerated.insert(to_json(t).dump());
      for (const auto& tau : perms) {
        std::set<std::string> mapped;
        for (const LabeledTree& t : trees) mapped.insert(to_json(sym_act(tau, t)).dump());
        internal_check(mapped == enumerated,
                       "sym_act does not permute the enumerated set");
        ++checked;
      }

      for (const LabeledTree& t : trees) {
        if (!is_odd_even(t)) continue;
        internal_check(is_sorted_odd_even(sym_act(sorting_permutation(t), t)),
                       "sorting permutation does not sort");
        ++sorted_found;
      }
    }
  }
  std::cout << "sym-action: " << checked << " permutations stabilize the enumerations; "
            << sorted_found << " odd-even trees sorted\n";
  return 0;
}

int run_verify(const std::string& suite, const VerifyBounds& b) {
  if (suite == "sorted-odd-even") return verify_sorted_odd_even(b);
  if (suite == "smoothing") return verify_smoothing(b);
  if (suite == "depth") return verify_depth(b);
  if (suite == "involution") return verify_involution(b);
  if (suite == "degree") return verify_degree(b);
  if (suite == "sym-action") return verify_sym_action(b);
  if (suite == "all") {
    verify_sorted_odd_even(b);
    verify_smoothing(b);
    verify_depth(b);
    verify_involution(b);
    verify_degree(b);
    verify_sym_action(b);
    return 0;
  }
  throw validation_error("unknown verify suite '" + suite +
                         "' (expected sorted-odd-even, smoothing, depth, involution, "
                         "degree, sym-action or all)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resolution combinatorics for equivariant open Gromov-Witten "
               "theory of projective spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand name

  std::string format = "json";
  app.add_option("--format", format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // trees
  auto* trees_cmd = app.add_subcommand("trees", "Enumerate labeled resolution trees");
  BaseArgs trees_base;
  std::int64_t trees_r = 0;
  std::string trees_rho;
  trees_cmd->add_option("--k", trees_base.k, "Number of boundary labels 1..k");
  trees_cmd->add_option("--l", trees_base.l, "Number of interior labels 1..l");
  trees_cmd->add_option("--beta", trees_base.beta, "Disc degree");
  trees_cmd->add_option("--r", trees_r, "Edge set {1..r}");
  trees_cmd->add_option("--rho", trees_rho, "Explicit edge set, e.g. 1,3,5");
  trees_cmd->add_option("--k-labels", trees_base.k_labels, "Explicit k labels (JSON array)");
  trees_cmd->add_option("--l-labels", trees_base.l_labels, "Explicit l labels (JSON array)");

  // boundary
  auto* boundary_cmd = app.add_subcommand("boundary", "Boundary components of a tree");
  std::string boundary_tree, boundary_tree_file;
  std::int64_t boundary_r = 0;
  boundary_cmd->add_option("--tree", boundary_tree, "Tree JSON");
  boundary_cmd->add_option("--tree-file", boundary_tree_file, "Path to tree JSON");
  boundary_cmd->add_option("--r", boundary_r,
                           "New node index (default: max node index + 1)");

  // signs
  auto* signs_cmd = app.add_subcommand("signs", "Orientation sign table");
  BaseArgs signs_base;
  std::int64_t signs_r = 0;
  std::string signs_rho, signs_tree, signs_tree_file, signs_m = "1";
  signs_cmd->add_option("--tree", signs_tree, "Tree JSON");
  signs_cmd->add_option("--tree-file", signs_tree_file, "Path to tree JSON");
  signs_cmd->add_option("--k", signs_base.k, "Number of boundary labels 1..k");
  signs_cmd->add_option("--l", signs_base.l, "Number of interior labels 1..l");
  signs_cmd->add_option("--beta", signs_base.beta, "Disc degree");
  signs_cmd->add_option("--r", signs_r, "Edge set {1..r}");
  signs_cmd->add_option("--rho", signs_rho, "Explicit edge set");
  signs_cmd->add_option("--k-labels", signs_base.k_labels, "Explicit k labels (JSON array)");
  signs_cmd->add_option("--l-labels", signs_base.l_labels, "Explicit l labels (JSON array)");
  signs_cmd->add_option("--m", signs_m, "Ambient dimensions, e.g. 1,2,3");

  // degree
  auto* degree_cmd = app.add_subcommand("degree", "Invariant degree and vanishing report");
  std::int64_t degree_k = 0, degree_beta = 0, degree_m = 1;
  std::string degree_lvec;
  degree_cmd->add_option("--m", degree_m, "Ambient dimension m >= 1");
  degree_cmd->add_option("--k", degree_k, "Boundary constraint count");
  degree_cmd->add_option("--beta", degree_beta, "Disc degree");
  degree_cmd->add_option("--l-vec", degree_lvec, "Interior constraint counts l_0..l_2m");

  // ledger
  auto* ledger_cmd = app.add_subcommand("ledger", "Resolution ledger report");
  std::int64_t ledger_k = 0, ledger_beta = 0, ledger_m = 1;
  std::string ledger_lvec;
  ledger_cmd->add_option("--m", ledger_m, "Ambient dimension m >= 1");
  ledger_cmd->add_option("--k", ledger_k, "Boundary constraint count");
  ledger_cmd->add_option("--beta", ledger_beta, "Disc degree");
  ledger_cmd->add_option("--l-vec", ledger_lvec, "Interior constraint counts l_0..l_2m");

  // poly
  auto* poly_cmd =
      app.add_subcommand("poly", "Equivariant polynomial arithmetic in text form");
  std::int64_t poly_m = 1;
  std::string poly_expr;
  bool poly_nf = false, poly_restrict = false, poly_relation = false;
  poly_cmd->add_option("--m", poly_m, "Ambient dimension m >= 1");
  poly_cmd->add_option("expr", poly_expr,
                       "Polynomial in the variables H, a0..a2m, l1..lm");
  poly_cmd->add_flag("--normal-form", poly_nf, "Reduce modulo prod (H - a_i)");
  poly_cmd->add_flag("--restrict", poly_restrict,
                     "Apply the weight restriction a0 -> 0, a_i -> l_i, "
                     "a_{2m+1-i} -> -l_i");
  poly_cmd->add_flag("--relation", poly_relation,
                     "Start from the defining relation instead of an expression");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a property verification sweep");
  std::string suite;
  VerifyBounds bounds;
  std::string verify_m = "1,2";
  verify_cmd->add_option("suite", suite,
                         "sorted-odd-even | smoothing | depth | involution | degree | "
                         "sym-action | all")
      ->required();
  verify_cmd->add_option("--max-k", bounds.max_k, "Largest boundary label count");
  verify_cmd->add_option("--max-l", bounds.max_l, "Largest interior label count");
  verify_cmd->add_option("--max-beta", bounds.max_beta, "Largest disc degree");
  verify_cmd->add_option("--max-r", bounds.max_r, "Largest edge count");
  verify_cmd->add_option("--m", verify_m, "Ambient dimensions, e.g. 1,2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const bool structured = !signs_cmd->parsed();
    require(!(structured && format != "json"),
            "csv/table output is offered only for sign tables; use --format json");

    if (trees_cmd->parsed()) {
      const PreModuliSpec base = resolve_base(trees_base);
      const std::vector<std::int32_t> rho = resolve_rho(trees_r, trees_rho);
      json arr = json::array();
      for (const LabeledTree& t : enumerate_trees(base, rho)) arr.push_back(to_json(t));
      emit(arr);
    } else if (boundary_cmd->parsed()) {
      const LabeledTree t = resolve_tree(boundary_tree, boundary_tree_file);
      std::int32_t r = static_cast<std::int32_t>(boundary_r);
      if (r == 0) {
        std::int32_t top = 0;
        for (const ModuliSpec& s : t.vertices) top = std::max(top, max_node_index(s));
        r = top + 1;
      }
      json arr = json::array();
      for (const BoundaryComponent& c : boundary_components(t, r)) arr.push_back(to_json(c));
      emit(arr);
    } else if (signs_cmd->parsed()) {
      std::vector<int> ms = parse_int_list(signs_m, "--m");
      for (int m : ms) require(m >= 1, "--m entries must be >= 1");
      std::vector<LabeledTree> trees;
      if (!signs_tree.empty() || !signs_tree_file.empty()) {
        trees.push_back(resolve_tree(signs_tree, signs_tree_file));
      } else {
        trees = enumerate_trees(resolve_base(signs_base), resolve_rho(signs_r, signs_rho));
      }
      emit_sign_rows(sign_rows(trees, ms), format);
    } else if (degree_cmd->parsed() || ledger_cmd->parsed()) {
      const bool want_ledger = ledger_cmd->parsed();
      const std::int64_t k = want_ledger ? ledger_k : degree_k;
      const std::int64_t beta = want_ledger ? ledger_beta : degree_beta;
      const std::int64_t m_arg = want_ledger ? ledger_m : degree_m;
      const std::string lvec_text = want_ledger ? ledger_lvec : degree_lvec;
      require(m_arg >= 1, "--m must be >= 1");
      const AmbientDim m(static_cast<int>(m_arg));
      std::vector<std::int64_t> l_vec(static_cast<std::size_t>(2 * m.m + 1), 0);
      if (!lvec_text.empty()) {
        const std::vector<int> parsed = parse_int_list(lvec_text, "--l-vec");
        require(parsed.size() == l_vec.size(),
                "--l-vec must have exactly 2m+1 = " + std::to_string(l_vec.size()) +
                    " entries");
        for (std::size_t i = 0; i < parsed.size(); ++i) l_vec[i] = parsed[i];
      }
      const ConstraintTuple constraints = ConstraintTuple::from_l_vec(l_vec, m);
      json report = to_json(describe_invariant(k, constraints, beta, m));
      if (want_ledger) report["ledger"] = to_json(resolution_ledger(k, constraints, beta, m));
      emit(report);
    } else if (poly_cmd->parsed()) {
      require(poly_m >= 1 && poly_m <= 1000000, "--m must lie in 1..10^6");
      const AmbientDim m(static_cast<int>(poly_m));
      require(poly_relation || !poly_expr.empty(),
              "provide a polynomial expression or --relation");
      EquivariantPolynomial p =
          poly_relation ? relation_poly(m) : parse_poly(poly_expr, m);
      if (poly_nf) p = normal_form(p);
      if (poly_restrict) p = restrict_weights(p);
      std::cout << to_text(p) << "\n";
    } else if (verify_cmd->parsed()) {
      bounds.ms = parse_int_list(verify_m, "--m");
      for (int m : bounds.ms) require(m >= 1, "--m entries must be >= 1");
      return run_verify(suite, bounds);
    }
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
