#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "t2sum/algebra.hpp"
#include "t2sum/builder.hpp"
#include "t2sum/census.hpp"
#include "t2sum/certificate_json.hpp"
#include "t2sum/error.hpp"
#include "t2sum/formats.hpp"
#include "t2sum/membership.hpp"
#include "t2sum/recognition.hpp"
#include "t2sum/t2.hpp"
#include "t2sum/transpose.hpp"

namespace t2sum::cli {

namespace {

using nlohmann::json;

constexpr const char *kLabelingNote =
    "Labeled commands read vertex v as grid cell (v div q, v mod q).";

struct Context {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
  std::string input_format = "auto";
  bool stdin_used = false;

  std::string read_text(const std::string &source) {
    if (source == "-") {
      if (stdin_used)
        throw InputError("stdin can be read only once");
      stdin_used = true;
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
      std::ifstream file(source);
      if (!file)
        throw InputError("cannot read '" + source + "'");
      std::ostringstream buffer;
      buffer << file.rdbuf();
      return buffer.str();
    }
    return source;
  }

  Graph read_graph(const std::string &source) {
    if (const auto colon = source.find(':'); colon != std::string::npos &&
                                             source != "-" &&
                                             source.find('\n') == std::string::npos) {
      const auto kind = parse_standard_kind(source.substr(0, colon));
      const std::string count = source.substr(colon + 1);
      if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("expected <kind>:<n>, got '" + source + "'");
      return standard_graph(kind, std::stoul(count));
    }
    return parse_graph(read_text(source), parse_graph_format(input_format));
  }
};

std::string emit_graph(const Graph &g, const std::string &format) {
  if (format == "graph6")
    return graph6_encode(g) + "\n";
  if (format == "edgelist")
    return edge_list_encode(g);
  if (format == "matrix")
    return matrix_encode(g.adjacency());
  throw InputError("unknown output format '" + format + "'");
}

json summands_json(const std::vector<TensorSummand> &summands) {
  json list = json::array();
  for (const auto &[g, h] : summands) {
    json entry;
    entry["g"] = {{"n", g.order()}, {"edges", g.edges()}};
    entry["h"] = {{"n", h.order()}, {"edges", h.edges()}};
    list.push_back(std::move(entry));
  }
  return list;
}

json histogram_json(const std::map<std::size_t, std::size_t> &histogram) {
  json out = json::object();
  for (auto [key, count] : histogram)
    out[std::to_string(key)] = count;
  return out;
}

int emit_certificate(Context &ctx, const Certificate &cert, const Graph &k, bool verify,
                     json extra = json::object()) {
  json doc = certificate_to_json(cert, k);
  for (auto &[key, value] : extra.items())
    doc[key] = value;
  if (verify) {
    const VerifyResult check = verify_certificate(doc);
    if (!check.ok) {
      ctx.err << "certificate failed self-verification: " << check.message << "\n";
      return kUsageError;
    }
  }
  ctx.out << doc.dump(2) << "\n";
  return cert.is_member() ? kAffirmative : kNegative;
}

struct ShapeArgs {
  std::size_t p = 0;
  std::size_t q = 0;
};

void add_shape(CLI::App *cmd, ShapeArgs &shape) {
  cmd->add_option("--p", shape.p, "Number of grid rows (first factor order)")->required();
  cmd->add_option("--q", shape.q, "Number of grid columns (second factor order)")->required();
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Context ctx{in, out, err};
  CLI::App app{"Tensor 2-sums of graphs: products, membership, recognition, T2 and "
               "partial transposes.\n" +
               std::string(kLabelingNote)};
  app.name("t2sum");
  app.require_subcommand(1, 1);
  app.add_option("--format", ctx.input_format, "Graph input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist", "matrix"}));

  std::function<int()> action;
  std::string out_format = "graph6";
  const auto add_out = [&out_format](CLI::App *cmd) {
    cmd->add_option("--out", out_format, "Graph output format")
        ->check(CLI::IsMember({"graph6", "edgelist", "matrix"}));
  };

  std::string a_src, b_src, k_src;
  ShapeArgs shape;
  bool verify = false;
  bool allow_large = false;

  auto *product = app.add_subcommand("product", "Tensor product A x B");
  product->add_option("A", a_src)->required();
  product->add_option("B", b_src)->required();
  add_out(product);
  product->callback([&] {
    action = [&] {
      out << emit_graph(tensor_product(ctx.read_graph(a_src), ctx.read_graph(b_src)), out_format);
      return int{kAffirmative};
    };
  });

  auto *xor_cmd = app.add_subcommand("xor", "2-sum (XOR of adjacency) of A and B");
  xor_cmd->add_option("A", a_src)->required();
  xor_cmd->add_option("B", b_src)->required();
  add_out(xor_cmd);
  xor_cmd->callback([&] {
    action = [&] {
      out << emit_graph(two_sum(ctx.read_graph(a_src), ctx.read_graph(b_src)), out_format);
      return int{kAffirmative};
    };
  });

  std::vector<std::size_t> elementary_args;
  auto *elementary = app.add_subcommand("elementary", "Tensor-elementary graph E(i,i2;j,j2)");
  elementary->add_option("indices", elementary_args, "p q i i2 j j2")->expected(6)->required();
  add_out(elementary);
  elementary->callback([&] {
    action = [&] {
      const auto &e = elementary_args;
      out << emit_graph(tensor_elementary(e[0], e[1], e[2], e[3], e[4], e[5]), out_format);
      return int{kAffirmative};
    };
  });

  auto *member = app.add_subcommand(
      "member", std::string("Labeled membership in K(p,q). ") + kLabelingNote);
  add_shape(member, shape);
  member->add_option("K", k_src)->required();
  member->add_flag("--verify", verify, "Re-check the emitted certificate");
  member->callback([&] {
    action = [&] {
      const Graph k = ctx.read_graph(k_src);
      return emit_certificate(ctx, is_spanning_cross_like(k, GridShape(shape.p, shape.q)), k,
                              verify);
    };
  });

  bool no_prefilter = false;
  auto *recognize_cmd =
      app.add_subcommand("recognize", "Unlabeled membership: search all grid labelings");
  add_shape(recognize_cmd, shape);
  recognize_cmd->add_option("K", k_src)->required();
  recognize_cmd->add_flag("--verify", verify, "Re-check the emitted certificate");
  recognize_cmd->add_flag("--allow-large", allow_large, "Search beyond p*q = 16");
  recognize_cmd->add_flag("--no-prefilter", no_prefilter,
                          "Skip the necessary-condition prefilter");
  recognize_cmd->callback([&] {
    action = [&] {
      const Graph k = ctx.read_graph(k_src);
      RecognizeOptions options;
      options.allow_large = allow_large;
      options.use_prefilter = !no_prefilter;
      return emit_certificate(ctx, recognize(k, GridShape(shape.p, shape.q), options), k,
                              verify);
    };
  });

  bool unlabeled = false;
  auto *decompose = app.add_subcommand(
      "decompose",
      std::string("Elementary decomposition of a member. ") + kLabelingNote);
  add_shape(decompose, shape);
  decompose->add_option("K", k_src)->required();
  decompose->add_flag("--unlabeled", unlabeled, "Find a labeling first (recognize)");
  decompose->add_flag("--allow-large", allow_large, "Search beyond p*q = 16");
  decompose->callback([&] {
    action = [&] {
      const Graph k = ctx.read_graph(k_src);
      const GridShape grid(shape.p, shape.q);
      RecognizeOptions options;
      options.allow_large = allow_large;
      const Certificate cert =
          unlabeled ? recognize(k, grid, options) : is_spanning_cross_like(k, grid);
      if (!cert.is_member()) {
        err << "not a member: " << to_string(cert.witness->reason) << "\n";
        return int{kNegative};
      }
      json doc = certificate_to_json(cert, k);
      out << json{{"count", cert.summands->size()},
                  {"summands", doc["summands"]},
                  {"labeling", doc["labeling"]},
                  {"flags", doc["flags"]}}
                 .dump(2)
          << "\n";
      return int{kAffirmative};
    };
  });

  bool oracle = false;
  bool over_labelings = false;
  std::size_t max_l = 6;
  auto *t2_cmd = app.add_subcommand(
      "t2", std::string("Minimal number of tensor-product summands. ") + kLabelingNote);
  add_shape(t2_cmd, shape);
  t2_cmd->add_option("K", k_src)->required();
  t2_cmd->add_flag("--oracle", oracle, "Also run the brute-force oracle");
  t2_cmd->add_option("--max-l", max_l, "Oracle depth limit");
  t2_cmd->add_flag("--over-labelings", over_labelings,
                   "Also minimize over all member labelings");
  t2_cmd->add_flag("--allow-large", allow_large, "Search beyond p*q = 16");
  t2_cmd->callback([&] {
    action = [&] {
      const Graph k = ctx.read_graph(k_src);
      const GridShape grid(shape.p, shape.q);
      const Certificate cert = is_spanning_cross_like(k, grid);
      json doc;
      if (cert.is_member()) {
        const PairMatrix m = pair_matrix(k, grid);
        doc["t2"] = t2_of_pair_matrix(m);
        doc["pair_matrix_rank"] = gf2_rank(m.bits);
        doc["elementary_count"] = cert.summands->size();
        doc["representation"] = summands_json(t2_decomposition(m));
        if (oracle) {
          const auto value = t2_bruteforce_oracle(k, grid, max_l);
          doc["oracle"] = value ? json(*value) : json(nullptr);
          doc["oracle_agrees"] = value && *value == t2_of_pair_matrix(m);
        }
      } else {
        doc["t2"] = nullptr;
        doc["labeled_witness"] = to_string(cert.witness->reason);
      }
      if (over_labelings) {
        RecognizeOptions options;
        options.allow_large = allow_large;
        const auto best = t2_min_over_labelings(k, grid, options);
        if (best) {
          json cells = json::array();
          for (const auto &[row, col] : best->labeling.assignment())
            cells.push_back({row, col});
          doc["min_over_labelings"] = {{"t2", best->t2}, {"assignment", cells}};
        } else {
          doc["min_over_labelings"] = nullptr;
        }
      }
      out << doc.dump(2) << "\n";
      const bool found = !doc["t2"].is_null() ||
                         (doc.contains("min_over_labelings") && !doc["min_over_labelings"].is_null());
      return found ? int{kAffirmative} : int{kNegative};
    };
  });

  bool dump = false;
  std::size_t block_p = 0;
  auto *ppt = app.add_subcommand(
      "ppt-check", "Is the adjacency matrix fixed by the partial transpose at block grid p?");
  ppt->add_option("--p", block_p, "Block grid size (must divide the order)")->required();
  ppt->add_option("K", k_src)->required();
  ppt->add_flag("--dump", dump, "Print the matrix and its partial transpose");
  ppt->callback([&] {
    action = [&] {
      const Graph k = ctx.read_graph(k_src);
      const bool holds = ppt_test(k, block_p);
      if (dump) {
        const BlockMatrix m(k.adjacency(), block_p);
        out << "matrix:\n" << matrix_encode(m.entries());
        out << "partial transpose:\n" << matrix_encode(partial_transpose(m).entries());
      }
      out << "ppt: " << (holds ? "holds" : "fails") << " (p=" << block_p << ")\n";
      return holds ? int{kAffirmative} : int{kNegative};
    };
  });

  std::string g_src;
  auto *build = app.add_subcommand(
      "build-ppt", "Embed G on n vertices as a member of K(n,n): G + m K2 + (n^2-n-2m) K1");
  build->add_option("G", g_src)->required();
  add_out(build);
  build->callback([&] {
    action = [&] {
      const Graph g = ctx.read_graph(g_src);
      const auto [h, labeling] = build_ppt_graph(g);
      const std::size_t n = g.order(), m = g.edge_count();
      Certificate cert = check_labeled(h, labeling);
      const bool components_ok = verify_components(h, g);
      json extra;
      extra["components"] = {{"n", n},
                             {"m", m},
                             {"k2_copies", m},
                             {"k1_copies", n * n - n - 2 * m},
                             {"verified", components_ok},
                             {"n_copies_of_k2_would_match", m == n}};
      out << emit_graph(h, out_format);
      const int code = emit_certificate(ctx, cert, h, true, extra);
      return components_ok ? code : int{kNegative};
    };
  });

  bool stats = false;
  auto *census = app.add_subcommand(
      "census", "All labeled spanning cross-like graphs at (p,q), ordered by pair-matrix bits");
  add_shape(census, shape);
  census->add_flag("--stats", stats, "Print counts and distributions instead of graphs");
  census->add_flag("--allow-large", allow_large, "Enumerate beyond 2^20 graphs");
  add_out(census);
  census->callback([&] {
    action = [&] {
      const GridShape grid(shape.p, shape.q);
      if (!stats) {
        for_each_census_member(
            grid,
            [&](const PairMatrix &, const Graph &k) {
              out << emit_graph(k, out_format);
              return true;
            },
            allow_large);
        return int{kAffirmative};
      }
      const CensusStats s = census_stats(grid, allow_large);
      json doc;
      doc["p"] = grid.p();
      doc["q"] = grid.q();
      doc["count"] = s.count;
      doc["edge_histogram"] = histogram_json(s.edge_histogram);
      doc["t2_histogram"] = histogram_json(s.t2_histogram);
      doc["edge_bound"] = s.bound;
      doc["over_bound"] = s.over_bound;
      doc["bound_attained"] = s.bound_attained;
      doc["attainers_are_complete_product"] = s.attainers_are_complete_product;
      doc["odd_edge_members"] = s.odd_edge_members;
      doc["complete_product_elementary_count"] = s.complete_product_elementary_count;
      doc["pq"] = grid.cells();
      out << doc.dump(2) << "\n";
      return int{kAffirmative};
    };
  });

  std::string cert_src;
  auto *verify_cmd = app.add_subcommand("verify", "Re-check a certificate JSON document");
  verify_cmd->add_option("CERT", cert_src)->required();
  verify_cmd->callback([&] {
    action = [&] {
      json doc;
      try {
        doc = json::parse(ctx.read_text(cert_src));
      } catch (const json::exception &e) {
        throw InputError(std::string("certificate is not JSON: ") + e.what());
      }
      const VerifyResult check = verify_certificate(doc);
      out << (check.ok ? "valid: " : "invalid: ") << check.message << "\n";
      return check.ok ? int{kAffirmative} : int{kNegative};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    for (const auto *sub : app.get_subcommands())
      err << sub->help();
    return kUsageError;
  }

  try {
    return action();
  } catch (const InputError &e) {
    err << "input error: " << e.what() << "\n";
  } catch (const ScaleError &e) {
    err << "scale error: " << e.what() << "\n";
  } catch (const SearchCancelled &e) {
    err << e.what() << "\n";
  }
  return kUsageError;
}

} // namespace t2sum::cli
