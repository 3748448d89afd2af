#include "srr/cli.hpp"

#include "srr/errors.hpp"
#include "srr/matching.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace srr::cli {

nlohmann::ordered_json rationals_to_json(const RationalVector& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

namespace {

nlohmann::ordered_json servers_to_json(const RecoverySet& s) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t l : s.servers) out.push_back(l + 1);
  return out;
}

}  // namespace

nlohmann::ordered_json allocation_to_json(const RecoverySetCatalog& c, const Allocation& a) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.files(); ++i) {
    auto file = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < c.count(i); ++j) {
      nlohmann::ordered_json entry;
      entry["servers"] = servers_to_json(c.sets(i)[j]);
      entry["share"] = to_string(a.at(c, i, j));
      file.push_back(std::move(entry));
    }
    out.push_back(std::move(file));
  }
  return out;
}

nlohmann::ordered_json region_to_json(const RegionHRep& r) {
  nlohmann::ordered_json out;
  out["dimension"] = r.dimension;
  out["nonnegative"] = true;
  auto hs = nlohmann::ordered_json::array();
  for (const auto& h : r.half_spaces) {
    nlohmann::ordered_json row;
    row["coefficients"] = rationals_to_json(h.coefficients);
    row["relation"] = "<=";
    row["rhs"] = to_string(h.rhs);
    hs.push_back(std::move(row));
  }
  out["half_spaces"] = std::move(hs);
  auto pts = nlohmann::ordered_json::array();
  for (const auto& p : r.extreme_points) pts.push_back(rationals_to_json(p));
  out["extreme_points"] = std::move(pts);
  return out;
}

nlohmann::ordered_json verdict_to_json(const BatchVerdict& v) {
  nlohmann::ordered_json out;
  out["t"] = v.t;
  out["all_served"] = v.all_served;
  out["vectors_checked"] = v.vectors_checked;
  if (v.first_failure) out["first_failure"] = rationals_to_json(*v.first_failure);
  return out;
}

nlohmann::ordered_json batch_to_json(const BatchReport& r) {
  nlohmann::ordered_json out;
  out["t_max"] = r.t_max;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  out["verdicts"] = std::move(verdicts);
  out["basis"] =
      "integral region with recovery sets of size <= 2; t_max is exact because servable "
      "demands with 0/1 splits are exactly families of disjoint recovery sets";
  return out;
}

nlohmann::ordered_json pir_to_json(const RecoverySetCatalog& c, const PirReport& r) {
  nlohmann::ordered_json out;
  out["t_pir"] = r.t_pir;
  out["per_file"] = r.per_file;
  auto families = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.families.size(); ++i) {
    auto fam = nlohmann::ordered_json::array();
    for (std::size_t j : r.families[i]) fam.push_back(servers_to_json(c.sets(i)[j]));
    families.push_back(std::move(fam));
  }
  out["families"] = std::move(families);
  return out;
}

nlohmann::ordered_json analyze(const GeneratorMatrix& g, const RationalVector& mu, bool with_batch_pir) {
  const RecoverySetCatalog catalog = enumerate_recovery_sets(g);
  const ServiceGraph graph = build_graph(catalog);
  const auto parts = is_bipartite(graph);

  nlohmann::ordered_json out;
  nlohmann::ordered_json code;
  code["n"] = g.servers();
  code["k"] = g.files();
  code["q"] = g.modulus().value();
  auto t = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < catalog.files(); ++i) t.push_back(catalog.count(i));
  code["recovery_sets"] = std::move(t);
  out["code"] = std::move(code);

  nlohmann::ordered_json gj;
  gj["vertices"] = graph.vertex_count();
  gj["dummy_vertices"] = graph.vertex_count() - graph.real_vertex_count();
  gj["edges"] = graph.edge_count();
  gj["bipartite"] = parts.has_value();
  if (parts) gj["partition"] = {parts->side_a.size(), parts->side_b.size()};
  out["graph"] = std::move(gj);

  nlohmann::ordered_json bounds;
  bounds["m"] = to_string(Rational(max_matching(graph).size()));
  bounds["m_f"] = to_string(fractional_matching_number(graph).first);
  try {
    bounds["v"] = to_string(Rational(min_vertex_cover(graph).size()));
  } catch (const GuardError&) {
    bounds["v"] = nullptr;
  }
  out["bounds"] = std::move(bounds);

  const CapacityResult cap = capacity(catalog, mu);
  out["capacity"] = to_string(cap.capacity);
  out["lambda_star"] = rationals_to_json(cap.max_demand);

  if (with_batch_pir) {
    out["batch"] = batch_to_json(batch_t_max(catalog));
    out["pir"] = pir_to_json(catalog, pir_t(catalog));
  }
  return out;
}

namespace {

GeneratorMatrix load_code(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open code file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_generator_matrix(text);
}

RationalVector mu_or_unit(const std::string& text, std::size_t n) {
  if (text.empty()) return unit_capacities(n);
  auto mu = parse_rational_list(text);
  if (mu.size() != n) {
    throw std::invalid_argument("--mu has " + std::to_string(mu.size()) + " entries, code has " +
                                std::to_string(n) + " servers");
  }
  return mu;
}

void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Service rate region analysis for linear storage codes"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose,-v", verbose, "Human-readable summary on stderr");

  std::string code_path, mu_text, lambda_text, out_path = "-";
  std::size_t t_opt = 0;
  int simplex_k = 0;
  bool dot = false, with_batch_pir = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Code, graph, bounds and capacity report");
  auto* capacity_cmd = app.add_subcommand("capacity", "Service capacity and a maximum demand vector");
  auto* member_cmd = app.add_subcommand("member", "Membership of a demand vector in the region");
  auto* region_cmd = app.add_subcommand("region", "Half-space description and vertices (k <= 3)");
  auto* bounds_cmd = app.add_subcommand("bounds", "Matching, fractional matching and vertex cover numbers");
  auto* batch_cmd = app.add_subcommand("batch", "Batch code parameter");
  auto* pir_cmd = app.add_subcommand("pir", "PIR code parameter");
  auto* alg1_cmd = app.add_subcommand("alg1", "Matching for a demand with sum 4 on the [7,3] simplex code");
  auto* simplex_cmd = app.add_subcommand("simplex", "Emit the binary simplex code");
  auto* graph_cmd = app.add_subcommand("graph", "Graph representation as JSON or DOT");

  for (auto* cmd : {analyze_cmd, capacity_cmd, member_cmd, region_cmd, bounds_cmd, batch_cmd, pir_cmd, graph_cmd}) {
    cmd->add_option("--code", code_path, "Code JSON file, or - for stdin")->required();
  }
  for (auto* cmd : {analyze_cmd, capacity_cmd, member_cmd, region_cmd, graph_cmd}) {
    cmd->add_option("--mu", mu_text, "Comma-separated service rates (default all ones)");
  }
  member_cmd->add_option("--lambda", lambda_text, "Comma-separated demand vector")->required();
  alg1_cmd->add_option("--lambda", lambda_text, "Three integers summing to 4")->required();
  batch_cmd->add_option("--t", t_opt, "Check a single batch size instead of searching")->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--batch-pir", with_batch_pir, "Include batch and PIR parameters");
  simplex_cmd->add_option("--k", simplex_k, "Dimension, 2..10")->required();
  simplex_cmd->add_option("--out", out_path, "Output path, or - for stdout");
  graph_cmd->add_flag("--dot", dot, "Graphviz output instead of JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*simplex_cmd) {
      const auto g = simplex_code(simplex_k);
      if (out_path == "-") {
        emit(out, to_json(g));
      } else {
        std::ofstream file(out_path);
        if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
        emit(file, to_json(g));
      }
      if (verbose) err << "simplex code: n=" << g.servers() << " k=" << g.files() << '\n';
      return kExitOk;
    }
    if (*alg1_cmd) {
      const auto result = algorithm1(parse_rational_list(lambda_text));
      nlohmann::ordered_json j;
      j["lambda"] = rationals_to_json(parse_rational_list(lambda_text));
      auto edges = nlohmann::ordered_json::array();
      for (std::size_t e : result.matching.edges) {
        const auto& ed = result.graph.edge(e);
        nlohmann::ordered_json row;
        row["file"] = ed.file + 1;
        row["set"] = ed.set + 1;
        row["servers"] = servers_to_json(result.catalog.sets(ed.file)[ed.set]);
        edges.push_back(std::move(row));
      }
      j["edges"] = std::move(edges);
      emit(out, j);
      return kExitOk;
    }

    const GeneratorMatrix code = load_code(code_path, in);
    const RecoverySetCatalog catalog = enumerate_recovery_sets(code);
    const std::size_t n = code.servers();

    if (*analyze_cmd) {
      const auto report = analyze(code, mu_or_unit(mu_text, n), with_batch_pir);
      emit(out, report);
      if (verbose) {
        err << "n=" << n << " k=" << code.files() << " capacity=" << report["capacity"].get<std::string>()
            << " m=" << report["bounds"]["m"].get<std::string>()
            << " m_f=" << report["bounds"]["m_f"].get<std::string>() << '\n';
      }
      return kExitOk;
    }
    if (*capacity_cmd) {
      const auto cap = capacity(catalog, mu_or_unit(mu_text, n));
      nlohmann::ordered_json j;
      j["capacity"] = to_string(cap.capacity);
      j["lambda_star"] = rationals_to_json(cap.max_demand);
      j["witness"] = allocation_to_json(catalog, cap.witness);
      emit(out, j);
      if (verbose) err << "capacity " << to_string(cap.capacity) << '\n';
      return kExitOk;
    }
    if (*member_cmd) {
      const auto lambda = parse_rational_list(lambda_text);
      const auto witness = membership(catalog, mu_or_unit(mu_text, n), lambda);
      nlohmann::ordered_json j;
      j["member"] = witness.has_value();
      if (witness) j["witness"] = allocation_to_json(catalog, *witness);
      emit(out, j);
      if (verbose) err << (witness ? "member" : "not a member") << '\n';
      return witness ? kExitOk : kExitInfeasible;
    }
    if (*region_cmd) {
      emit(out, region_to_json(project_region(catalog, mu_or_unit(mu_text, n))));
      return kExitOk;
    }
    if (*bounds_cmd) {
      const ServiceGraph graph = build_graph(catalog);
      nlohmann::ordered_json j;
      j["m"] = to_string(Rational(max_matching(graph).size()));
      j["m_f"] = to_string(fractional_matching_number(graph).first);
      j["v"] = to_string(Rational(min_vertex_cover(graph).size()));
      j["bipartite"] = is_bipartite(graph).has_value();
      emit(out, j);
      return kExitOk;
    }
    if (*batch_cmd) {
      if (t_opt > 0) {
        const auto v = is_batch_t(catalog, t_opt);
        emit(out, verdict_to_json(v));
        return v.all_served ? kExitOk : kExitInfeasible;
      }
      const auto report = batch_t_max(catalog);
      emit(out, batch_to_json(report));
      if (verbose) err << "batch t_max=" << report.t_max << '\n';
      return kExitOk;
    }
    if (*pir_cmd) {
      const auto report = pir_t(catalog);
      emit(out, pir_to_json(catalog, report));
      if (verbose) err << "pir t=" << report.t_pir << '\n';
      return kExitOk;
    }
    if (*graph_cmd) {
      const ServiceGraph graph = build_graph(catalog, mu_or_unit(mu_text, n));
      if (dot) {
        out << export_dot(graph);
      } else {
        emit(out, graph_to_json(graph));
      }
      return kExitOk;
    }
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace srr::cli
