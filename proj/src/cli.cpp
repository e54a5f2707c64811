#include "dgog/cli.hpp"

#include "dgog/boundary.hpp"
#include "dgog/error.hpp"
#include "dgog/gog.hpp"
#include "dgog/hull.hpp"
#include "dgog/kirchberg.hpp"
#include "dgog/ktheory.hpp"
#include "dgog/tree.hpp"
#include "dgog/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace dgog::cli {

namespace {

using nlohmann::json;

json word_json(GraphOfGroups const& g, NormalWord const& w) {
  json letters = json::array();
  for (auto const& l : w.letters())
    letters.push_back({{"rep", integer_to_json(l.rep)},
                       {"edge", g.edge(l.edge.edge).id},
                       {"reversed", !l.edge.is_forward()}});
  return {{"word", format_word(g, w)},
          {"range", g.vertex_id(w.range())},
          {"source", g.vertex_id(w.source())},
          {"letters", letters},
          {"tail", integer_to_json(w.tail())},
          {"directed", w.is_directed()}};
}

json invariants_json(AbelianInvariants const& a) {
  json torsion = json::array();
  for (auto const& t : a.torsion) torsion.push_back(integer_to_json(t));
  return {{"free", a.free_rank}, {"torsion", torsion}};
}

json matrix_json(IntMatrix const& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(integer_to_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json factors_json(std::vector<Integer> const& f) {
  json out = json::array();
  for (auto const& x : f) out.push_back(integer_to_json(x));
  return out;
}

json cycle_json(GraphOfGroups const& g, std::optional<Cycle> const& c) {
  if (!c) return nullptr;
  json out = json::array();
  for (EdgeIndex e : c->edges) out.push_back(g.edge(e).id);
  return out;
}

json kirchberg_json(GraphOfGroups const& g, KirchbergReport const& r) {
  auto edge_or_null = [&](std::optional<EdgeIndex> e) -> json {
    if (!e) return nullptr;
    return g.edge(*e).id;
  };
  auto int_or_null = [](std::optional<Integer> const& x) -> json {
    if (!x) return nullptr;
    return integer_to_json(*x);
  };
  return {{"strongly_connected", to_string(r.strongly_connected)},
          {"cofinal", to_string(r.cofinal)},
          {"loop",
           {{"verdict", to_string(r.loop.verdict)},
            {"cycle", cycle_json(g, r.loop.witness)},
            {"entrance", edge_or_null(r.loop.entrance)},
            {"heavy_edge", edge_or_null(r.loop.heavy_edge)}}},
          {"denominator",
           {{"verdict", to_string(r.denominator.verdict)},
            {"cycle", cycle_json(g, r.denominator.witness)},
            {"prime", int_or_null(r.denominator.prime)},
            {"bounded_sup", int_or_null(r.denominator.bounded_sup)},
            {"k_bound", r.denominator.k_bound}}},
          {"overall", to_string(r.overall)}};
}

json action_json(GraphOfGroups const& g, ActionResult const& r) {
  if (auto const* lasso = std::get_if<LassoPath>(&r)) {
    return {{"status", "LASSO"},
            {"path", format_lasso(g, *lasso)},
            {"prefix", format_path_letters(g, lasso->prefix())},
            {"cycle", format_path_letters(g, lasso->cycle())}};
  }
  return {{"status", "NOT_PERIODIC_WITHIN_BOUND"},
          {"letters", format_path_letters(g, std::get<PrefixResult>(r).letters.letters)}};
}

json hull_json(GraphOfGroups const& g, HullElement const& s) {
  if (s.is_zero()) return {{"element", "ZERO"}, {"zero", true}};
  return {{"element", format_hull(g, s)},
          {"zero", false},
          {"lambda", format_word(g, s.lambda().word())},
          {"mu", format_word(g, s.mu().word())},
          {"idempotent", is_idempotent(s)}};
}

std::string kirchberg_text(GraphOfGroups const& g, KirchbergReport const& r) {
  std::ostringstream out;
  out << "strongly connected: " << to_string(r.strongly_connected) << '\n';
  out << "(1) cofinal: " << to_string(r.cofinal) << '\n';
  out << "(2) loop condition: " << to_string(r.loop.verdict);
  if (r.loop.entrance) out << " (entrance " << g.edge(*r.loop.entrance).id << ")";
  if (r.loop.heavy_edge) out << " (n >= 2 on " << g.edge(*r.loop.heavy_edge).id << ")";
  out << "\n(3) denominators: " << to_string(r.denominator.verdict);
  if (r.denominator.prime) out << " (prime " << to_string(*r.denominator.prime) << ")";
  if (r.denominator.bounded_sup)
    out << " (sup <q_k> = " << to_string(*r.denominator.bounded_sup) << " for k <= " << r.denominator.k_bound << ")";
  out << "\noverall: " << to_string(r.overall) << '\n';
  return out.str();
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed graphs of groups: words, boundary actions, Bass-Serre trees and K-theory", "dgog"};
  app.require_subcommand(1);

  std::string graph_path, word_a, word_b, lasso_text, format, base, t_text, s_text, out_path;
  std::size_t depth = 2, max_steps = default_max_steps;
  std::function<std::string()> action;

  auto load_graph = [&]() {
    if (graph_path == "-") return load(in);
    return load_file(graph_path);
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "graph file, or - for stdin")->required();
  };
  auto add_format = [&](CLI::App* sub, std::string fallback, std::vector<std::string> allowed) {
    format = fallback;
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
    sub->preparse_callback([&format, fallback](std::size_t) { format = fallback; });
  };
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto* validate = app.add_subcommand("validate", "check a graph file");
  add_graph(validate);
  add_format(validate, "text", {"text", "json"});
  validate->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      std::vector<std::string> srcs;
      for (VertexIndex v : g.sources()) srcs.push_back(g.vertex_id(v));
      if (format == "json")
        return json{{"valid", true},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"sources", srcs},
                    {"graph", serialize(g)}}
                   .dump(2) +
               "\n";
      std::string text = "valid: " + std::to_string(g.vertex_count()) + " vertices, " +
                         std::to_string(g.edge_count()) + " edges\n";
      for (auto const& s : srcs) text += "source: " + s + "\n";
      return text;
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a word");
  add_graph(normalize_cmd);
  normalize_cmd->add_option("word", word_a, "word literal, e.g. \"3 e 0\"")->required();
  add_format(normalize_cmd, "text", {"text", "json"});
  normalize_cmd->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      NormalWord w = parse_normal_word(g, word_a);
      return format == "json" ? word_json(g, w).dump(2) + "\n" : format_word(g, w) + "\n";
    };
  });

  auto* mul = app.add_subcommand("mul", "product of two words");
  add_graph(mul);
  mul->add_option("left", word_a, "word literal")->required();
  mul->add_option("right", word_b, "word literal")->required();
  add_format(mul, "text", {"text", "json"});
  mul->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      NormalWord w = multiply(g, parse_normal_word(g, word_a), parse_normal_word(g, word_b));
      return format == "json" ? word_json(g, w).dump(2) + "\n" : format_word(g, w) + "\n";
    };
  });

  auto* tree = app.add_subcommand("tree", "ball in the Bass-Serre tree");
  add_graph(tree);
  tree->add_option("--base", base, "base vertex id")->required();
  tree->add_option("--depth", depth, "radius of the ball");
  add_format(tree, "dot", {"dot", "json", "text"});
  tree->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      auto root = g.find_vertex(base);
      if (!root) throw Error(ErrorKind::Parse, "unknown base vertex \"" + base + "\"");
      TreeBall ball = expand(g, *root, depth);
      if (format == "json") return to_json(g, ball).dump(2) + "\n";
      if (format == "text") return to_text(g, ball);
      return to_dot(g, ball);
    };
  });

  auto* ktheory = app.add_subcommand("ktheory", "K-groups of the groupoid algebra");
  add_graph(ktheory);
  add_format(ktheory, "json", {"json", "text"});
  ktheory->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      KTheoryResult k = k_theory(g);
      if (format == "text") return "K0 = " + to_string(k.K0) + "\nK1 = " + to_string(k.K1) + "\n";
      std::vector<std::string> order;
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) order.push_back(g.vertex_id(v));
      return json{{"K0", invariants_json(k.K0)},
                  {"K1", invariants_json(k.K1)},
                  {"vertices", order},
                  {"N", matrix_json(k.weights.N)},
                  {"M", matrix_json(k.weights.M)},
                  {"factors_1_minus_N", factors_json(k.factors_1_minus_N)},
                  {"factors_1_minus_M", factors_json(k.factors_1_minus_M)}}
                 .dump(2) +
             "\n";
    };
  });

  auto* kirchberg = app.add_subcommand("check-kirchberg", "pure infiniteness and simplicity checks");
  add_graph(kirchberg);
  add_format(kirchberg, "json", {"json", "text"});
  kirchberg->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      KirchbergReport r = check_kirchberg(g);
      return format == "text" ? kirchberg_text(g, r) : kirchberg_json(g, r).dump(2) + "\n";
    };
  });

  auto* realize_cmd = app.add_subcommand("realize", "graph with prescribed K-theory coker T, coker S");
  realize_cmd->add_option("--t", t_text, "matrix T as a JSON list of rows")->required();
  realize_cmd->add_option("--s", s_text, "matrix S as a JSON list of rows")->required();
  realize_cmd->callback([&] {
    action = [&]() -> std::string {
      Realization r = realize(parse_matrix(t_text), parse_matrix(s_text));
      return serialize(r.graph).dump(2) + "\n";
    };
  });

  auto* act_cmd = app.add_subcommand("act", "action of a word on an eventually periodic path");
  add_graph(act_cmd);
  act_cmd->add_option("word", word_a, "word literal")->required();
  act_cmd->add_option("path", lasso_text, "path literal prefix|cycle, e.g. \"1:e|0:e\"")->required();
  act_cmd->add_option("--max-steps", max_steps, "letters to stream before giving up on periodicity");
  add_format(act_cmd, "text", {"text", "json"});
  act_cmd->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      ActionResult r = act(g, parse_normal_word(g, word_a), parse_lasso(g, lasso_text), max_steps);
      return format == "json" ? action_json(g, r).dump(2) + "\n" : format_action(g, r) + "\n";
    };
  });

  auto* hull_mul = app.add_subcommand("hull-mul", "product in the inverse hull");
  add_graph(hull_mul);
  hull_mul->add_option("left", word_a, "ZERO or \"lambda / mu\"")->required();
  hull_mul->add_option("right", word_b, "ZERO or \"lambda / mu\"")->required();
  add_format(hull_mul, "text", {"text", "json"});
  hull_mul->callback([&] {
    action = [&]() -> std::string {
      GraphOfGroups g = load_graph();
      HullElement s = compose(g, parse_hull(g, word_a), parse_hull(g, word_b));
      return format == "json" ? hull_json(g, s).dump(2) + "\n" : format_hull(g, s) + "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text = action();
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path);
      if (!file) throw Error(ErrorKind::Parse, "cannot write \"" + out_path + "\"");
      file << text;
    }
    return 0;
  } catch (Error const& e) {
    err << "error:" << to_string(e.kind()) << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dgog::cli
