// Command-line front end.
//
// Subcommands: compute, construct, witness, verify, oracle, table.
// Exit codes: 0 success, 1 usage, 2 verification or agreement failure,
// 3 search budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mjstar/mjstar.hpp>

namespace {

using namespace mjstar;

// Inclusive integer range, written `a` or `a..b`.
struct Range {
  int lo, hi;
};

Range parse_range(const std::string& text, const char* what) {
  const auto parse_int = [&](const std::string& part) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty())
      throw PreconditionError(std::string(what) + ": expected an integer or a..b, got `" + text +
                              "`");
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const Range r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi)
    throw PreconditionError(std::string(what) + ": empty range `" + text + "`");
  return r;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_compute(int j, int n, int m, const std::string& format) {
  const RamseyAnswer a = size_ramsey(j, n, m);
  if (format == "json") {
    print_json(to_json(a));
  } else {
    std::cout << "m_" << j << "(S_" << n << ", S_" << m << ") = " << a.value << "\n"
              << "branch: " << branch_name(a.branch) << "\n"
              << "bounds: [" << a.lower << ", " << a.upper << "]\n";
  }
  return 0;
}

json edges_json(const MpGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(edge_token(u, v));
  return edges;
}

int run_construct(int j, int s, int d, const std::string& format) {
  if (d == 0) {
    // The empty spanning subgraph needs no rule machinery.
    const MpGraph g = regular_subgraph(j, s, d);
    ConstructionReport report;
    report.requested_d = 0;
    report.histogram[0] = g.vertex_count();
    report.valid = true;
    if (format == "edgelist") {
      std::cout << to_edge_list(g);
    } else if (format == "dot") {
      std::cout << to_dot(g);
    } else if (format == "json") {
      print_json({{"j", j},
                  {"s", s},
                  {"d", d},
                  {"decomposition", nullptr},
                  {"report", to_json(report)},
                  {"edges", edges_json(g)}});
    } else {
      std::cout << "construction j=" << j << " s=" << s << " d=0: empty spanning subgraph\n"
                << "valid: yes (0 edges)\n";
    }
    return 0;
  }

  const Construction built = build_construction(j, s, d);
  if (format == "edgelist") {
    std::cout << to_edge_list(built.graph);
  } else if (format == "dot") {
    std::cout << to_dot(built.graph);
  } else if (format == "json") {
    print_json({{"j", j},
                {"s", s},
                {"d", d},
                {"decomposition", to_json(built.decomposition)},
                {"report", to_json(built.report)},
                {"edges", edges_json(built.graph)}});
  } else {
    const Decomposition& dec = built.decomposition;
    std::cout << "construction j=" << j << " s=" << s << " d=" << d << ": "
              << case_tag_name(dec.tag) << " k1=" << dec.k1 << " k2=" << dec.k2;
    if (dec.rem) std::cout << " rem=" << dec.rem;
    if (dec.w_quot) std::cout << " w=" << dec.w_quot;
    std::cout << "\nvalid: yes (" << built.graph.edge_count() << " edges, all degrees " << d
              << ")\nrule trace:";
    for (const auto& [part, count] : built.report.rule_trace)
      std::cout << " " << part << "=" << count;
    std::cout << "\n";
  }
  return 0;
}

int run_witness(int j, int s, int n, int m, const std::string& format) {
  const TwoColoring col = witness_coloring(Shape{j, s}, n, m);
  if (format == "dot") {
    std::cout << to_dot(col);
  } else if (format == "json") {
    print_json({{"j", j},
                {"s", s},
                {"n", n},
                {"m", m},
                {"good", true},
                {"coloring", coloring_lines(col)}});
  } else {
    std::cout << to_coloring_text(col);
  }
  return 0;
}

int run_verify(const std::string& path, int n, int m, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  const TwoColoring col = parse_coloring(in);

  // Locate the first vertex over either star budget, if any.
  const Shape& sh = col.shape();
  std::optional<Vertex> offender;
  Color offender_color = Color::Red;
  int offender_degree = 0;
  for (int a = 0; a < sh.vertex_count() && !offender; ++a) {
    const Vertex v = unflat(sh, a);
    if (const int dr = col.degree(v, Color::Red); dr > n - 2) {
      offender = v;
      offender_color = Color::Red;
      offender_degree = dr;
    } else if (const int db = col.degree(v, Color::Blue); db > m - 2) {
      offender = v;
      offender_color = Color::Blue;
      offender_degree = db;
    }
  }

  if (format == "json") {
    json out = {{"n", n}, {"m", m}, {"good", !offender}};
    if (offender) {
      out["offender"] = {{"part", offender->part},
                        {"slot", offender->slot},
                        {"color", offender_color == Color::Red ? "red" : "blue"},
                        {"degree", offender_degree}};
    } else {
      out["offender"] = nullptr;
    }
    print_json(out);
  } else if (!offender) {
    std::cout << "good colouring: no red S_" << n << ", no blue S_" << m << "\n";
  } else {
    const bool red = offender_color == Color::Red;
    std::cout << "bad colouring: " << (red ? "red" : "blue") << " S_" << (red ? n : m)
              << " at vertex (" << offender->part << "," << offender->slot << ") — "
              << (red ? "red" : "blue") << " degree " << offender_degree << " > "
              << (red ? n - 2 : m - 2) << "\n";
  }
  return offender ? 2 : 0;
}

int run_oracle(int j, int s, int n, int m, const SearchOptions& opts, const std::string& format) {
  const OracleResult res = arrows_oracle(j, s, n, m, opts);
  if (format == "json") {
    json out = to_json(res);
    out["j"] = j;
    out["s"] = s;
    out["n"] = n;
    out["m"] = m;
    print_json(out);
  } else if (format == "dot") {
    if (res.certificate)
      std::cout << to_dot(*res.certificate);
    else
      std::cout << "// arrows: K_{" << j << "x" << s << "} -> (S_" << n << ", S_" << m
                << "); no certificate\n";
  } else {
    std::cout << "arrows: " << (res.arrows ? "true" : "false") << "\n"
              << "method: " << oracle_method_name(res.method) << "\n"
              << "nodes: " << res.nodes_explored << "\n";
    if (res.certificate) {
      std::cout << "certificate:\n" << to_coloring_text(*res.certificate);
    }
  }
  return 0;
}

int run_table(const Range& jr, const Range& nr, const Range& mr, bool with_oracle,
              const SearchOptions& opts, const std::string& format) {
  bool all_agree = true;
  json rows = json::array();
  if (format != "json") {
    std::cout << "j\tn\tm\tvalue\tbranch\tlower\tupper";
    if (with_oracle) std::cout << "\toracle\tagree";
    std::cout << "\n";
  }
  for (int j = jr.lo; j <= jr.hi; ++j) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int m = mr.lo; m <= mr.hi; ++m) {
        const RamseyAnswer a = size_ramsey(j, n, m);
        std::optional<int> oracle_s;
        bool agree = true;
        if (with_oracle) {
          oracle_s = min_arrowing_s(j, n, m, a.upper + 1, opts);
          agree = oracle_s && *oracle_s == a.value;
          all_agree = all_agree && agree;
        }
        if (format == "json") {
          json row = to_json(a);
          if (with_oracle) {
            row["oracle"] = oracle_s ? json(*oracle_s) : json(nullptr);
            row["agree"] = agree;
          }
          rows.push_back(row);
        } else {
          std::cout << j << "\t" << n << "\t" << m << "\t" << a.value << "\t"
                    << branch_name(a.branch) << "\t" << a.lower << "\t" << a.upper;
          if (with_oracle) {
            std::cout << "\t" << (oracle_s ? std::to_string(*oracle_s) : "none") << "\t"
                      << (agree ? "yes" : "NO");
          }
          std::cout << "\n";
        }
      }
    }
  }
  if (format == "json") print_json(rows);
  return all_agree ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"size Ramsey multipartite numbers for stars on K_{j x s}"};
  app.require_subcommand(1);

  int j = 3, s = 1, n = 3, m = 3, d = 0;
  std::string format = "text";
  std::string file;
  std::string j_range = "3", n_range = "3", m_range = "3";
  bool with_oracle = false;
  SearchOptions opts;

  auto* compute = app.add_subcommand("compute", "closed-form m_j(S_n, S_m)");
  compute->add_option("-j,--parts", j, "number of parts")->required();
  compute->add_option("-n", n, "red star order")->required();
  compute->add_option("-m", m, "blue star order")->required();
  compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* construct = app.add_subcommand("construct", "d-regular spanning subgraph of K_{j x s}");
  construct->add_option("-j,--parts", j)->required();
  construct->add_option("-s,--slots", s)->required();
  construct->add_option("-d,--degree", d)->required();
  construct->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "dot", "edgelist"}));

  auto* witness = app.add_subcommand("witness", "good colouring below the threshold");
  witness->add_option("-j,--parts", j)->required();
  witness->add_option("-s,--slots", s)->required();
  witness->add_option("-n", n)->required();
  witness->add_option("-m", m)->required();
  witness->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  auto* verify = app.add_subcommand("verify", "check a colouring file for both stars");
  verify->add_option("file", file, "colouring file")->required();
  verify->add_option("-n", n)->required();
  verify->add_option("-m", m)->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* oracle = app.add_subcommand("oracle", "exhaustively decide arrowing");
  oracle->add_option("-j,--parts", j)->required();
  oracle->add_option("-s,--slots", s)->required();
  oracle->add_option("-n", n)->required();
  oracle->add_option("-m", m)->required();
  oracle->add_option("--budget", opts.budget, "search node budget");
  oracle->add_option("--jobs", opts.jobs, "parallel workers");
  oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  auto* table = app.add_subcommand("table", "grid of values, optionally oracle-checked");
  table->add_option("-j,--parts", j_range, "j or j range a..b");
  table->add_option("-n", n_range, "n or n range a..b");
  table->add_option("-m", m_range, "m or m range a..b");
  table->add_flag("--with-oracle", with_oracle, "cross-check each cell with the oracle");
  table->add_option("--budget", opts.budget);
  table->add_option("--jobs", opts.jobs);
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*compute) return run_compute(j, n, m, format);
    if (*construct) return run_construct(j, s, d, format);
    if (*witness) return run_witness(j, s, n, m, format);
    if (*verify) return run_verify(file, n, m, format);
    if (*oracle) return run_oracle(j, s, n, m, opts, format);
    if (*table)
      return run_table(parse_range(j_range, "-j"), parse_range(n_range, "-n"),
                       parse_range(m_range, "-m"), with_oracle, opts, format);
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConstructionInvalid& e) {
    std::cerr << "error: " << e.what() << "\n" << to_json(e.report).dump(2) << "\n";
    return 2;
  } catch (const ParityInfeasible& e) {
    std::cerr << "error: parity infeasible: " << e.what() << "\n";
    return 2;
  } catch (const NoDecomposition& e) {
    std::cerr << "error: no decomposition: " << e.what() << "\n";
    return 2;
  } catch (const DegreeTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ThresholdExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAWitness& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
