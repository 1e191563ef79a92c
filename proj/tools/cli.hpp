#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twojoin/twojoin.hpp"

// Command-line front end. Exit codes: 0 found / success, 1 certified
// absence, 2 input or precondition error.
namespace twojoin::cli {

inline constexpr int kFound = 0;
inline constexpr int kAbsent = 1;
inline constexpr int kError = 2;

struct InputOptions {
  std::string path;
  std::string format = "auto";
  unsigned threads = 1;
};

inline std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph load_graph(const InputOptions& in) {
  const std::string text = read_all(in.path);
  GraphFormat f = GraphFormat::edge_list;
  if (in.format == "dimacs") {
    f = GraphFormat::dimacs;
  } else if (in.format == "auto") {
    f = sniff_format(text);
  }
  return parse_graph(text, f);
}

inline void print_set(std::ostream& out, const char* key, const VertexSet& s) {
  out << key << ':';
  for (Vertex v : s) out << ' ' << v;
  out << '\n';
}

inline void print_found(std::ostream& out, const TwoJoinSplit& s) {
  out << "found: true\n";
  write_split(out, s);
}

// Differential check against the brute-force oracle.
inline bool cross_check(std::ostream& out, std::ostream& err, const Graph& g, bool found,
                        bool nonpath, std::optional<std::size_t> min_side = std::nullopt) {
  if (g.n() > oracle::kMaxTwoJoinVertices) {
    out << "cross_check: skipped\n";
    return true;
  }
  const auto all = oracle::enumerate_2joins(g, nonpath);
  bool agree = found == !all.empty();
  if (agree && min_side) agree = all.front().min_side_size() == *min_side;
  out << "cross_check: " << (agree ? "agree" : "disagree") << '\n';
  if (!agree) err << "error: detector and oracle disagree (oracle found " << all.size() << ")\n";
  return agree;
}

inline void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("graph", in.path, "Graph file ('-' for stdin)")->required();
  cmd->add_option("--format", in.format, "auto, edge-list or dimacs")
      ->check(CLI::IsMember({"auto", "edge-list", "dimacs"}));
  cmd->add_option("--threads", in.threads, "Worker threads for candidate evaluation")
      ->check(CLI::Range(1u, 256u));
}

inline int report_detection(std::ostream& out, std::ostream& err, const Graph& g,
                            const Detection& d, bool certificate, bool check, bool nonpath) {
  if (d.split) {
    print_found(out, *d.split);
  } else {
    out << "found: false\n";
    out << "certificate_tuples: " << d.certificate.size() << '\n';
    if (certificate) {
      for (const auto& z : d.certificate) out << "tuple: " << z.a1 << ' ' << z.a2 << ' ' << z.b1 << ' ' << z.b2 << '\n';
    }
  }
  if (check && !cross_check(out, err, g, d.split.has_value(), nonpath)) return kError;
  return d.split ? kFound : kAbsent;
}

inline Graph make_family(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw PreconditionError("gen " + family + ": expected " + std::to_string(k) + " parameter(s)");
    }
  };
  auto num = [&](std::size_t i) -> std::size_t {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(params[i], &pos);
      if (pos != params[i].size()) throw std::invalid_argument("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw PreconditionError("gen " + family + ": bad integer '" + params[i] + "'");
    }
  };
  if (family == "cycle") return need(1), gen::cycle(num(0));
  if (family == "path") return need(1), gen::path(num(0));
  if (family == "complete") return need(1), gen::complete(num(0));
  if (family == "double-cycle") return need(1), gen::double_cycle(num(0)).graph;
  if (family == "double-hexagon") return need(0), gen::double_hexagon().graph;
  if (family == "double-k4") return need(0), gen::double_k4().graph;
  if (family == "figure1") return need(0), gen::figure1_graph();
  if (family == "random") {
    need(3);
    double p = 0;
    try {
      p = std::stod(params[1]);
    } catch (const std::exception&) {
      throw PreconditionError("gen random: bad probability '" + params[1] + "'");
    }
    return gen::random_connected(num(0), p, num(2));
  }
  throw PreconditionError("unknown family '" + family + "'");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect 2-joins, non-path 2-joins and minimally-sided 2-joins"};
  app.require_subcommand(1);

  InputOptions in;
  bool certificate = false, check = false;

  auto* detect = app.add_subcommand("detect", "Find a 2-join or certify absence");
  add_input(detect, in);
  detect->add_flag("--certificate", certificate, "Print the exhausted universal set on absence");
  detect->add_flag("--cross-check", check, "Compare existence with the brute-force oracle");

  auto* nonpath = app.add_subcommand("detect-nonpath", "Find a non-path 2-join or certify absence");
  add_input(nonpath, in);
  nonpath->add_flag("--certificate", certificate, "Print the exhausted universal set on absence");
  nonpath->add_flag("--cross-check", check, "Compare existence with the brute-force oracle");

  bool ms_nonpath = false, ms_general = false;
  auto* minside = app.add_subcommand("minside", "Find a minimally-sided 2-join");
  add_input(minside, in);
  minside->add_flag("--nonpath", ms_nonpath, "Only non-path 2-joins (requires no star cutset)");
  minside->add_flag("--general", ms_general, "With --nonpath: allow star cutsets (slower)");
  minside->add_flag("--cross-check", check, "Compare the minimal side size with the oracle");

  auto* star = app.add_subcommand("star-cutset", "Find a star cutset");
  add_input(star, in);

  bool or_nonpath = false, or_min_side = false;
  auto* orc = app.add_subcommand("oracle", "Enumerate 2-joins by brute force (n <= 16)");
  add_input(orc, in);
  orc->add_flag("--nonpath", or_nonpath, "Only non-path 2-joins");
  orc->add_flag("--min-side", or_min_side, "Print only the smallest side size");

  std::size_t marker_length = kDefaultMarkerLength;
  std::vector<int> sides;
  std::string split_path;
  auto* dec = app.add_subcommand("decompose", "Build blocks of decomposition for a split");
  add_input(dec, in);
  dec->add_option("split", split_path, "Split file")->required();
  dec->add_option("--marker-length", marker_length, "Marker path length in edges")->check(CLI::PositiveNumber);
  dec->add_option("--side", sides, "Block(s) to print: 1 keeps X1, 2 keeps X2")->check(CLI::IsMember({1, 2}));

  std::string family;
  std::vector<std::string> params;
  std::string out_format = "edge-list";
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->add_option("family", family,
                      "cycle k | path k | complete k | random n p seed | double-cycle n | "
                      "double-hexagon | double-k4 | figure1")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("--format", out_format, "edge-list or dimacs")->check(CLI::IsMember({"edge-list", "dimacs"}));

  std::string bench_family;
  std::vector<std::size_t> sizes;
  unsigned bench_threads = 1;
  auto* bench = app.add_subcommand("bench", "Time detect and detect-nonpath on a family");
  bench->add_option("family", bench_family, "double-cycle | cycle | path")
      ->required()
      ->check(CLI::IsMember({"double-cycle", "cycle", "path"}));
  bench->add_option("sizes", sizes, "Vertex counts")->required();
  bench->add_option("--threads", bench_threads, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    const DetectOptions opts{in.threads};
    if (*detect) {
      const Graph g = load_graph(in);
      return report_detection(out, err, g, detect_2join_report(g, opts), certificate, check, false);
    }
    if (*nonpath) {
      const Graph g = load_graph(in);
      return report_detection(out, err, g, detect_nonpath_2join_report(g, opts), certificate, check, true);
    }
    if (*minside) {
      if (ms_general && !ms_nonpath) throw PreconditionError("--general requires --nonpath");
      const Graph g = load_graph(in);
      MinimalSearch r;
      if (!ms_nonpath) {
        r = minimally_sided_2join_report(g, opts);
      } else if (ms_general) {
        r = minimally_sided_nonpath_general_report(g, opts);
      } else {
        r = minimally_sided_nonpath_2join_report(g, opts);
      }
      if (r.split) {
        print_found(out, *r.split);
        out << "min_side: " << r.split->min_side_size() << '\n';
      } else {
        out << "found: false\n";
        out << "certificate_tuples: " << r.stats.universal_size << '\n';
      }
      if (check) {
        std::optional<std::size_t> size;
        if (r.split) size = r.split->min_side_size();
        if (!cross_check(out, err, g, r.split.has_value(), ms_nonpath, size)) return kError;
      }
      return r.split ? kFound : kAbsent;
    }
    if (*star) {
      const Graph g = load_graph(in);
      if (auto sc = has_star_cutset(g)) {
        out << "found: true\n";
        out << "center: " << sc->center << '\n';
        print_set(out, "cutset", sc->cutset);
        return kFound;
      }
      out << "found: false\n";
      return kAbsent;
    }
    if (*orc) {
      const Graph g = load_graph(in);
      const auto all = oracle::enumerate_2joins(g, or_nonpath);
      out << "found: " << (all.empty() ? "false" : "true") << '\n';
      if (or_min_side) {
        if (all.empty()) {
          out << "min_side: none\n";
        } else {
          out << "min_side: " << all.front().min_side_size() << '\n';
        }
      } else {
        out << "count: " << all.size() << '\n';
        for (std::size_t i = 0; i < all.size(); ++i) {
          out << "split: " << i << '\n';
          write_split(out, all[i]);
        }
      }
      return all.empty() ? kAbsent : kFound;
    }
    if (*dec) {
      const Graph g = load_graph(in);
      std::ifstream split_in(split_path);
      if (!split_in) throw ParseError(0, "cannot open '" + split_path + "'");
      const TwoJoinSplit s = parse_split(split_in);
      const auto [g1, g2] = decompose_blocks(g, s, marker_length);
      if (sides.empty()) sides.push_back(1);
      for (int side : sides) {
        const Block& b = side == 1 ? g1 : g2;
        out << "# block " << side << '\n';
        out << "# original:";
        for (Vertex v : b.original) out << ' ' << v;
        out << "\n# marker:";
        for (Vertex v : b.marker) out << ' ' << v;
        out << '\n';
        write_graph(out, b.graph, GraphFormat::edge_list);
      }
      return kFound;
    }
    if (*gen_cmd) {
      const Graph g = make_family(family, params);
      write_graph(out, g, out_format == "dimacs" ? GraphFormat::dimacs : GraphFormat::edge_list);
      return kFound;
    }
    if (*bench) {
      const DetectOptions bopts{bench_threads};
      for (std::size_t n : sizes) {
        const Graph g = make_family(bench_family, {std::to_string(n)});
        using Clock = std::chrono::steady_clock;
        const auto t0 = Clock::now();
        const Detection d = detect_2join_report(g, bopts);
        const auto t1 = Clock::now();
        const Detection e = detect_nonpath_2join_report(g, bopts);
        const auto t2 = Clock::now();
        out << "size: " << g.n() << " edges: " << g.m()
            << " detect_seconds: " << std::chrono::duration<double>(t1 - t0).count()
            << " detect_found: " << (d ? 1 : 0) << " detect_universal: " << d.stats.universal_size
            << " detect_tuples: " << d.stats.tuples_examined << " detect_forcing: " << d.stats.forcing_runs
            << " nonpath_seconds: " << std::chrono::duration<double>(t2 - t1).count()
            << " nonpath_found: " << (e ? 1 : 0) << " nonpath_tuples: " << e.stats.tuples_examined
            << " nonpath_forcing: " << e.stats.forcing_runs << '\n';
      }
      return kFound;
    }
  } catch (const StarCutsetError& e) {
    err << "error: " << e.what() << '\n';
    err << "witness_center: " << e.witness().center << '\n';
    err << "witness_cutset:";
    for (Vertex v : e.witness().cutset) err << ' ' << v;
    err << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace twojoin::cli
