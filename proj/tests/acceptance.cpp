// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "test_support.hpp"

namespace tj = twojoin;
using tj::FourTuple;
using tj::Graph;
using tj::TwoJoinSplit;
using tj::Vertex;
using tj::VertexSet;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0 && checked > 0; }
};

struct Entry {
  std::string name;
  Graph g;
  std::vector<TwoJoinSplit> all;  // oracle, every 2-join
  std::size_t nonpath = 0;
  std::optional<std::size_t> min_any, min_nonpath;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool report(int id, const char* title, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << detail << std::endl;
  return pass;
}

std::string summary(const Tally& t, const char* unit) {
  std::ostringstream os;
  os << t.checked << ' ' << unit << ", " << t.failures << " violations";
  if (t.failures) os << "; first: " << t.first;
  return os.str();
}

std::vector<Entry> build_corpus() {
  std::vector<tj::testing::CorpusGraph> raw = tj::testing::random_corpus(10000, 6, 12, 0);
  for (auto& c : tj::testing::structured_corpus(12)) raw.push_back(std::move(c));
  for (auto& c : tj::testing::planted_corpus(4000, 12, 5)) raw.push_back(std::move(c));
  raw.push_back({"figure1", tj::gen::figure1_graph()});
  std::vector<Entry> out;
  out.reserve(raw.size());
  for (auto& [name, g] : raw) {
    if (!tj::is_connected(g)) continue;
    Entry e{name, std::move(g), {}, 0, std::nullopt, std::nullopt};
    e.all = tj::oracle::enumerate_2joins(e.g, false);
    for (const auto& s : e.all) {
      if (!tj::is_nonpath(e.g, s)) continue;
      if (e.nonpath++ == 0) e.min_nonpath = s.min_side_size();
    }
    if (!e.all.empty()) e.min_any = e.all.front().min_side_size();
    out.push_back(std::move(e));
  }
  return out;
}

// 1 and 2.
bool existence(const std::vector<Entry>& corpus) {
  Tally any, nonpath;
  for (const auto& e : corpus) {
    const auto d = tj::detect_2join(e.g);
    ++any.checked;
    if (d.has_value() != !e.all.empty()) {
      any.fail(e.name + ": detector " + (d ? "found" : "absent") + ", oracle " + std::to_string(e.all.size()));
    } else if (d && !tj::classify_partition(e.g, d->x1)) {
      any.fail(e.name + ": returned split fails classify_partition");
    }
    const auto np = tj::detect_nonpath_2join(e.g);
    ++nonpath.checked;
    if (np.has_value() != (e.nonpath > 0)) {
      nonpath.fail(e.name + ": detector " + (np ? "found" : "absent") + ", oracle " + std::to_string(e.nonpath));
    } else if (np && (!tj::classify_partition(e.g, np->x1) || tj::is_path_side(e.g, *np, 1) ||
                      tj::is_path_side(e.g, *np, 2))) {
      nonpath.fail(e.name + ": returned split is invalid or has a path side");
    }
  }
  const bool a = report(1, "oracle equivalence, existence", any.ok(), summary(any, "graphs"));
  const bool b = report(2, "non-path equivalence", nonpath.ok(), summary(nonpath, "graphs"));
  return a && b;
}

// 3.
bool forcing_minimality(const std::vector<Entry>& corpus) {
  Tally runs;
  std::size_t invariant_checks = 0, graphs = 0;
  std::mt19937_64 rng(3);
  for (const auto& e : corpus) {
    const Graph& g = e.g;
    if (g.n() > 10 || g.n() < 6) continue;
    ++graphs;
    std::vector<FourTuple> proper;
    for (Vertex a1 = 0; a1 < g.n(); ++a1) {
      for (Vertex a2 : g.neighbors(a1)) {
        for (Vertex b1 = 0; b1 < g.n(); ++b1) {
          for (Vertex b2 : g.neighbors(b1)) {
            if (tj::is_proper(g, {a1, a2, b1, b2})) proper.push_back({a1, a2, b1, b2});
          }
        }
      }
    }
    std::vector<FourTuple> sample;
    std::sample(proper.begin(), proper.end(), std::back_inserter(sample), 200, rng);
    for (const FourTuple& z : sample) {
      const auto comp = tj::testing::compatible_splits(e.all, z);
      for (Vertex u = 0; u < g.n(); ++u) {
        if (tj::detail::in_tuple(z, u)) continue;
        for (int side = 1; side <= 2; ++side) {
          const VertexSet seed = side == 1 ? tj::make_set({z.a1, z.b1, u}) : tj::make_set({z.a2, z.b2, u});
          std::string violation;
          tj::ForcingOptions opts;
          opts.on_explore = [&](const tj::ForcingState& st) {
            ++invariant_checks;
            if (violation.empty()) violation = tj::testing::forcing_violation(g, st);
          };
          const tj::ForcingResult r = tj::force_side_traced(g, z, seed, opts);
          ++runs.checked;
          std::ostringstream where;
          where << e.name << " z=" << z << " u=" << u << " side " << side;
          if (!violation.empty()) {
            runs.fail(where.str() + ": " + violation);
            continue;
          }
          bool any_holder = false;
          bool minimal = true;
          for (const auto& s : comp) {
            const VertexSet& x = side == 1 ? s.x1 : s.x2;
            if (!tj::testing::subset(seed, x)) continue;
            any_holder = true;
            if (r.split && !tj::testing::subset(side == 1 ? r.split->x1 : r.split->x2, x)) minimal = false;
          }
          if (any_holder != r.split.has_value()) {
            runs.fail(where.str() + ": existence differs from oracle");
          } else if (!minimal) {
            runs.fail(where.str() + ": side not contained in an oracle side");
          } else if (r.split && !tj::is_valid_split(g, *r.split)) {
            runs.fail(where.str() + ": invalid split");
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << graphs << " graphs, " << invariant_checks << " invariant checks, " << summary(runs, "forcing runs");
  return report(3, "forcing minimality", runs.ok() && invariant_checks > 0, d.str());
}

// 4.
bool universal(const std::vector<Entry>& corpus) {
  Tally cover, size;
  for (const auto& e : corpus) {
    const auto u = tj::universal_set(e.g);
    ++size.checked;
    if (u.size() > 6 * e.g.n() * e.g.n()) size.fail(e.name + ": |U| = " + std::to_string(u.size()));
    if (e.g.n() > 10) continue;
    for (const auto& s : e.all) {
      ++cover.checked;
      const bool hit = std::any_of(u.begin(), u.end(), [&](const FourTuple& z) { return tj::is_compatible(z, s); });
      if (!hit) cover.fail(e.name + ": uncovered 2-join");
    }
  }
  double worst = 0;
  for (std::size_t n : {100u, 500u, 1000u, 2000u}) {
    std::vector<std::pair<std::string, Graph>> big;
    big.emplace_back("cycle", tj::gen::cycle(n));
    big.emplace_back("path", tj::gen::path(n));
    big.emplace_back("double_cycle", tj::gen::double_cycle(n).graph);
    const double p = 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
    big.emplace_back("random", tj::gen::random_connected(n, p, n));
    for (const auto& [name, g] : big) {
      const auto u = tj::universal_set(g);
      ++size.checked;
      const double ratio = static_cast<double>(u.size()) / static_cast<double>(n * n);
      worst = std::max(worst, ratio);
      if (u.size() > 6 * n * n) size.fail(name + "(" + std::to_string(n) + "): |U| = " + std::to_string(u.size()));
    }
  }
  std::ostringstream d;
  d << "coverage " << summary(cover, "oracle 2-joins") << "; size " << summary(size, "graphs")
    << ", largest |U|/n^2 on sparse n<=2000 = " << worst;
  return report(4, "universal coverage and size", cover.ok() && size.ok(), d.str());
}

// 5.
bool minimal_sides(const std::vector<Entry>& corpus) {
  Tally star_free, any, general, sides_ab;
  for (const auto& e : corpus) {
    const auto a = tj::minimally_sided_2join(e.g);
    ++any.checked;
    if (a.has_value() != e.min_any.has_value() || (a && a->min_side_size() != *e.min_any)) {
      any.fail(e.name + ": minimally_sided_2join differs");
    }
    const auto b = tj::minimally_sided_nonpath_general(e.g);
    ++general.checked;
    if (b.has_value() != e.min_nonpath.has_value() || (b && (b->min_side_size() != *e.min_nonpath ||
                                                            !tj::is_nonpath(e.g, *b)))) {
      general.fail(e.name + ": minimally_sided_nonpath_general differs");
    }
    if (e.g.n() > tj::oracle::kMaxStarCutsetVertices || tj::oracle::oracle_star_cutset(e.g)) continue;
    std::optional<TwoJoinSplit> c;
    try {
      c = tj::minimally_sided_nonpath_2join(e.g);
    } catch (const tj::StarCutsetError&) {
      star_free.fail(e.name + ": star cutset reported on an oracle-certified star-free graph");
      continue;
    }
    if (!e.min_nonpath) {
      if (c) star_free.fail(e.name + ": found a non-path 2-join the oracle does not have");
      continue;
    }
    ++star_free.checked;
    if (!c || c->min_side_size() != *e.min_nonpath) {
      star_free.fail(e.name + ": minimal side size differs");
      continue;
    }
    ++sides_ab.checked;
    const int side = c->minimal_side();
    if (c->a(side).size() < 2 || c->b(side).size() < 2) sides_ab.fail(e.name + ": |A| or |B| below 2");
  }
  std::ostringstream d;
  d << "star-free " << summary(star_free, "graphs with a non-path 2-join") << "; any " << summary(any, "graphs")
    << "; general " << summary(general, "graphs") << "; |A|,|B|>=2 " << summary(sides_ab, "sides");
  return report(5, "minimally-sided correctness", star_free.ok() && any.ok() && general.ok() && sides_ab.ok(), d.str());
}

// 6.
bool figure1() {
  const auto t0 = Clock::now();
  const Graph g = tj::gen::figure1_graph();
  std::set<tj::Edge> bold;
  for (auto [u, v] : tj::gen::figure1_bold_edges()) bold.insert({std::min(u, v), std::max(u, v)});
  const auto all = tj::oracle::enumerate_2joins(g, false);
  bool bold_found = false;
  Tally blocks;
  std::size_t nonpath = 0;
  for (const auto& s : all) {
    nonpath += tj::is_nonpath(g, s);
    std::set<tj::Edge> cross;
    for (auto [u, v] : g.edges()) {
      if (tj::contains(s.x1, u) != tj::contains(s.x1, v)) cross.insert({u, v});
    }
    bold_found = bold_found || cross == bold;
    const auto [b1, b2] = tj::decompose_blocks(g, s, 3);
    for (const tj::Block* b : {&b1, &b2}) {
      ++blocks.checked;
      const bool has = tj::detect_2join(b->graph).has_value();
      if (!has) blocks.fail("a block of size " + std::to_string(b->graph.n()) + " has no 2-join");
      if (b->graph.n() <= tj::oracle::kMaxTwoJoinVertices &&
          tj::oracle::enumerate_2joins(b->graph, false).empty() == has) {
        blocks.fail("detector and oracle disagree on a block");
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "bold split " << (bold_found ? "found" : "missing") << " among " << all.size() << " 2-joins (" << nonpath
    << " non-path); blocks " << summary(blocks, "blocks") << "; " << secs << " s";
  return report(6, "Figure 1 regression", bold_found && blocks.ok() && secs < 60.0, d.str());
}

// 7.
double timed(const std::function<void()>& fn) {
  std::size_t reps = 0;
  const auto t0 = Clock::now();
  do {
    fn();
    ++reps;
  } while (seconds_since(t0) < 0.5);
  return seconds_since(t0) / static_cast<double>(reps);
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool scaling() {
  std::vector<double> lx, ld, lnp;
  std::ostringstream d;
  bool found = true;
  for (std::size_t n : {200u, 400u, 800u}) {
    const Graph g = tj::gen::double_cycle(n).graph;
    bool a = false, b = false;
    const double td = timed([&] { a = tj::detect_2join(g).has_value(); });
    const double tn = timed([&] { b = tj::detect_nonpath_2join(g).has_value(); });
    found = found && a && b;
    lx.push_back(std::log(static_cast<double>(n)));
    ld.push_back(std::log(td));
    lnp.push_back(std::log(tn));
    d << "n=" << n << " m=" << g.m() << " detect " << td << " s, nonpath " << tn << " s; ";
  }
  const double ed = slope(lx, ld), en = slope(lx, lnp);
  d << "exponents detect " << ed << ", nonpath " << en << " (limit 4.5)";
  return report(7, "scaling smoke test", found && ed <= 4.5 && en <= 4.5, d.str());
}

// 8.
bool star_cutsets(const std::vector<Entry>& corpus) {
  Tally t;
  for (const auto& e : corpus) {
    if (e.g.n() > 9) continue;
    ++t.checked;
    const auto got = tj::has_star_cutset(e.g);
    const auto want = tj::oracle::oracle_star_cutset(e.g);
    if (got.has_value() != want.has_value()) {
      t.fail(e.name + ": existence differs");
    } else if (got && !tj::is_star_cutset(e.g, *got)) {
      t.fail(e.name + ": witness is not a star cutset");
    }
  }
  return report(8, "star-cutset checker", t.ok(), summary(t, "graphs with n <= 9"));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<Entry> corpus = build_corpus();
  std::cout << "corpus: " << corpus.size() << " connected graphs, oracle built in " << seconds_since(t0) << " s"
            << std::endl;
  bool ok = true;
  ok = existence(corpus) && ok;
  ok = forcing_minimality(corpus) && ok;
  ok = universal(corpus) && ok;
  ok = minimal_sides(corpus) && ok;
  ok = figure1() && ok;
  ok = scaling() && ok;
  ok = star_cutsets(corpus) && ok;
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << " in " << seconds_since(t0) << " s"
            << std::endl;
  return ok ? 0 : 1;
}
