#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <string>
#include <vector>

#include "immune/gen.hpp"
#include "immune/io.hpp"
#include "immune/matching.hpp"
#include "immune/oracle.hpp"
#include "immune/spread.hpp"
#include "immune/tree_vacc.hpp"

namespace {

using immune::errc;
using immune::ExtInt;
using nlohmann::json;

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
      return 2;
    case errc::budget_infeasible:
      return 4;
    case errc::instance_too_large:
      return 5;
    default:
      return 3;  // validation
  }
}

json encode(ExtInt v) {
  if (v.is_neg_inf()) return json("-inf");
  return json(v.value());
}

json encode_edges(const std::vector<immune::Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

void emit_json(const std::string& command, json inputs, json result) {
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  std::cout << doc.dump() << '\n';
}

// Reduced lhs:rhs pair; null when rhs is zero.
json ratio_of(std::int64_t lhs, std::int64_t rhs) {
  if (rhs == 0) return json(nullptr);
  const std::int64_t g = std::gcd(lhs, rhs);
  return g == 0 ? json::array({0, 1}) : json::array({lhs / g, rhs / g});
}

void print_report(const immune::CheckReport& rep, bool with_case) {
  std::cout << "lhs " << rep.lhs << '\n';
  std::cout << "rhs " << rep.rhs << '\n';
  std::cout << "witness";
  if (rep.witness.edges.empty()) std::cout << " none";
  for (auto [u, v] : rep.witness.edges) std::cout << ' ' << u << '-' << v;
  std::cout << '\n';
  if (with_case) std::cout << "case " << rep.case_id << '\n';
  std::cout << "holds " << (rep.holds ? "true" : "false") << '\n';
}

json report_result(const immune::CheckReport& rep) {
  json result;
  result["lhs"] = rep.lhs;
  result["rhs"] = rep.rhs;
  result["ratio"] = ratio_of(rep.lhs, rep.rhs);
  result["witness_edges"] = encode_edges(rep.witness.edges);
  result["case"] = rep.case_id;
  result["holds"] = rep.holds;
  return result;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold spread, dynamic monopolies, and budgeted immunization on trees"};
  app.require_subcommand(1);

  std::function<int()> action;

  // ---- hull -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("hull", "Closure of a seed set under threshold activation");
    auto graph_path = std::make_shared<std::string>();
    auto tau_path = std::make_shared<std::string>();
    auto seeds = std::make_shared<std::vector<int>>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("graph", *graph_path, "graph file (n m header + edge lines)")->required();
    cmd->add_option("thresholds", *tau_path, "threshold file (vertex value lines or 'const c')")
        ->required();
    cmd->add_option("seeds", *seeds, "seed vertices");
    cmd->add_flag("--json", *as_json, "emit machine-readable output");
    cmd->callback([=, &action] {
      action = [=] {
        const immune::Graph g = immune::read_graph_file(*graph_path);
        const immune::VertexFn tau = immune::read_vertex_fn_file(*tau_path, g.n);
        immune::VertexSet seed(g.n);
        for (int v : *seeds) {
          if (v < 0 || v >= g.n)
            immune::fail(errc::vertex_out_of_range,
                         "seed vertex " + std::to_string(v) + " out of range");
          seed.insert(v);
        }
        const immune::VertexSet hull = immune::compute_hull(g, tau, seed);
        const bool monopoly = hull.size() == g.n;
        if (*as_json) {
          json inputs{{"graph", *graph_path}, {"thresholds", *tau_path}, {"seeds", *seeds}};
          emit_json("hull", inputs, json{{"hull", hull.members()}, {"is_monopoly", monopoly}});
        } else {
          const auto members = hull.members();
          for (std::size_t i = 0; i < members.size(); ++i)
            std::cout << members[i] << (i + 1 < members.size() ? ' ' : '\n');
          if (members.empty()) std::cout << '\n';
        }
        return 0;
      };
    });
  }

  // ---- vacc -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("vacc", "Optimal budgeted threshold increments on a tree");
    auto tree_path = std::make_shared<std::string>();
    auto tau_path = std::make_shared<std::string>();
    auto imax_path = std::make_shared<std::string>();
    auto budget = std::make_shared<int>(0);
    auto root = std::make_shared<int>(0);
    auto inc_path = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("tree", *tree_path, "tree graph file")->required();
    cmd->add_option("thresholds", *tau_path, "threshold file")->required();
    cmd->add_option("iota-max", *imax_path, "per-vertex increment bounds file")->required();
    cmd->add_option("budget", *budget, "total increment")->required();
    cmd->add_option("--root", *root, "root vertex (default 0)");
    cmd->add_option("--emit-increment", *inc_path, "write a witnessing increment to PATH");
    cmd->add_flag("--json", *as_json, "emit machine-readable output");
    cmd->callback([=, &action] {
      action = [=] {
        const immune::Graph g = immune::read_graph_file(*tree_path);
        const immune::VertexFn tau = immune::read_vertex_fn_file(*tau_path, g.n);
        const immune::VertexFn imax = immune::read_vertex_fn_file(*imax_path, g.n);
        const immune::RootedTree t = immune::root_tree(g, *root);
        const immune::DpTable table = immune::run_dp(t, tau, imax, *budget);
        const int value = immune::extract_vacc(table);
        if (!inc_path->empty()) {
          const immune::VertexFn iota = immune::reconstruct_increment(table);
          immune::VertexFn bumped(g.n);
          for (int u = 0; u < g.n; ++u) bumped[u] = tau[u] + iota[u];
          if (immune::dyn_tree(t, bumped) != value) {
            std::cerr << "internal error: increment self-check failed\n";
            return 1;
          }
          std::ofstream out(*inc_path);
          if (!out) {
            std::cerr << "cannot write '" << *inc_path << "'\n";
            return 1;
          }
          immune::write_vertex_fn(out, iota);
        }
        if (*as_json) {
          json inputs{{"tree", *tree_path},
                      {"thresholds", *tau_path},
                      {"iota_max", *imax_path},
                      {"budget", *budget},
                      {"root", *root}};
          emit_json("vacc", inputs, json{{"vacc", value}});
        } else {
          std::cout << value << '\n';
        }
        return 0;
      };
    });
  }

  // ---- dyn --------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("dyn", "Minimum dynamic monopoly size");
    auto graph_path = std::make_shared<std::string>();
    auto tau_path = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("exact");
    auto limit = std::make_shared<int>(immune::kDynSizeLimit);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("graph", *graph_path, "graph file")->required();
    cmd->add_option("thresholds", *tau_path, "threshold file")->required();
    cmd->add_option("--mode", *mode, "tree | exact (default exact)")
        ->check(CLI::IsMember({"tree", "exact"}));
    cmd->add_option("--size-limit", *limit, "instance cap for exact mode");
    cmd->add_flag("--json", *as_json, "emit machine-readable output");
    cmd->callback([=, &action] {
      action = [=] {
        const immune::Graph g = immune::read_graph_file(*graph_path);
        const immune::VertexFn tau = immune::read_vertex_fn_file(*tau_path, g.n);
        int value = 0;
        if (*mode == "tree")
          value = immune::dyn_tree(immune::root_tree(g, 0), tau);
        else
          value = immune::dyn_bruteforce(g, tau, *limit);
        if (*as_json) {
          json inputs{{"graph", *graph_path}, {"thresholds", *tau_path}, {"mode", *mode}};
          emit_json("dyn", inputs, json{{"dyn", value}});
        } else {
          std::cout << value << '\n';
        }
        return 0;
      };
    });
  }

  // ---- check ------------------------------------------------------------
  {
    auto* check = app.add_subcommand("check", "Empirical checks of the supported bounds");
    check->require_subcommand(1);

    {
      auto* cmd = check->add_subcommand("formula", "Degree-prefix formula vs brute force");
      auto graph_path = std::make_shared<std::string>();
      auto total = std::make_shared<long long>(0);
      auto limit = std::make_shared<int>(immune::kVaccSizeLimit);
      auto as_json = std::make_shared<bool>(false);
      cmd->add_option("graph", *graph_path)->required();
      cmd->add_option("total", *total, "total threshold mass")->required();
      cmd->add_option("--size-limit", *limit);
      cmd->add_flag("--json", *as_json);
      cmd->callback([=, &action] {
        action = [=] {
          const immune::Graph g = immune::read_graph_file(*graph_path);
          const int value = immune::vacc_formula_avg(g, *total);
          immune::VertexFn cap = immune::degree_fn(g);
          for (auto& c : cap) ++c;
          const ExtInt brute =
              immune::vacc_bruteforce(g, immune::constant_fn(g.n, 0), cap, *total, *limit);
          const bool holds = ExtInt(value) == brute;
          if (*as_json) {
            json inputs{{"graph", *graph_path}, {"total", *total}};
            emit_json("check-formula", inputs,
                      json{{"formula", value}, {"bruteforce", encode(brute)}, {"holds", holds}});
          } else {
            std::cout << "formula " << value << '\n'
                      << "bruteforce " << brute.str() << '\n'
                      << "holds " << (holds ? "true" : "false") << '\n';
          }
          return holds ? 0 : 1;
        };
      });
    }

    struct ReportSpec {
      const char* name;
      const char* help;
      bool with_case;
      immune::CheckReport (*run)(const immune::Graph&, int, int);
    };
    static const ReportSpec kReports[] = {
        {"khza", "Matching characterization of vacc on trees", false,
         [](const immune::Graph& g, int b, int lim) { return immune::khza_check(g, b, lim); }},
        {"conjecture1", "Factor-2 matching bound", false,
         [](const immune::Graph& g, int b, int lim) { return immune::conjecture1_check(g, b, lim); }},
        {"theorem2", "Regular-graph certificate for the factor-2 bound", true,
         [](const immune::Graph& g, int b, int lim) { return immune::theorem2_check(g, b, lim); }},
    };
    for (const auto& spec : kReports) {
      auto* cmd = check->add_subcommand(spec.name, spec.help);
      auto graph_path = std::make_shared<std::string>();
      auto budget = std::make_shared<int>(0);
      auto limit = std::make_shared<int>(immune::kVaccSizeLimit);
      auto as_json = std::make_shared<bool>(false);
      cmd->add_option("graph", *graph_path)->required();
      cmd->add_option("budget", *budget)->required();
      cmd->add_option("--size-limit", *limit);
      cmd->add_flag("--json", *as_json);
      const ReportSpec* sp = &spec;
      cmd->callback([=, &action] {
        action = [=] {
          const immune::Graph g = immune::read_graph_file(*graph_path);
          const immune::CheckReport rep = sp->run(g, *budget, *limit);
          if (*as_json) {
            json inputs{{"graph", *graph_path}, {"budget", *budget}};
            emit_json(std::string("check-") + sp->name, inputs, report_result(rep));
          } else {
            print_report(rep, sp->with_case);
          }
          return rep.holds ? 0 : 1;
        };
      });
    }
  }

  // ---- gen --------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("gen", "Generate a graph file on stdout");
    auto kind = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("kind", *kind, "path | star | cycle | random-tree")
        ->required()
        ->check(CLI::IsMember({"path", "star", "cycle", "random-tree"}));
    cmd->add_option("n", *n, "vertex count")->required();
    cmd->add_option("seed", *seed, "RNG seed (random-tree only)");
    cmd->callback([=, &action] {
      action = [=] {
        immune::Graph g;
        if (*kind == "path")
          g = immune::make_path(*n);
        else if (*kind == "star")
          g = immune::make_star(*n);
        else if (*kind == "cycle")
          g = immune::make_cycle(*n);
        else
          g = immune::random_tree(*n, *seed);
        std::cout << g.n << ' ' << g.m << '\n';
        for (auto [u, v] : g.edges()) std::cout << u << ' ' << v << '\n';
        return 0;
      };
    });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return action ? action() : 0;
  } catch (const immune::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
