#include <chrono>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/constructions.hpp"
#include "starcol/detect.hpp"
#include "starcol/graph.hpp"
#include "starcol/oracle.hpp"
#include "starcol/rng.hpp"
#include "starcol/tournament.hpp"

using namespace starcol;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

// per-vertex star totals; single edges centre both endpoints
std::vector<int> star_totals(const StarColouring& c) {
  std::vector<int> tot(c.n, 0);
  for (const auto& cls : c.classes) {
    if (cls.size() == 1) {
      ++tot[cls[0].first];
      ++tot[cls[0].second];
      continue;
    }
    uint32_t common = ~0u;
    for (const Edge& e : cls) common &= (1u << e.first) | (1u << e.second);
    ++tot[__builtin_ctz(common)];
  }
  return tot;
}

Tournament tournament_from_mask(int n, uint32_t mask) {
  Tournament t(n);
  int e = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++e) {
      if ((mask >> e) & 1)
        t.set_arc(u, v);
      else
        t.set_arc(v, u);
    }
  return t;
}

bool hamilton_path_ok(const Tournament& t, const std::vector<int>& p) {
  if ((int)p.size() != t.n) return false;
  std::vector<bool> seen(t.n, false);
  for (int v : p) {
    if (v < 0 || v >= t.n || seen[v]) return false;
    seen[v] = true;
  }
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!t.arc(p[i], p[i + 1])) return false;
  return true;
}

bool cycle_ok(const Tournament& t, const std::vector<int>& c, int len) {
  if ((int)c.size() != len) return false;
  std::set<int> s(c.begin(), c.end());
  if ((int)s.size() != len) return false;
  for (int i = 0; i < len; ++i)
    if (!t.arc(c[i], c[(i + 1) % len])) return false;
  return true;
}

Outcome criterion1() {
  auto t0 = Clock::now();
  OracleOptions o;
  o.max_n = 7;
  struct Row {
    SimpleGraph pat;
    int n;
    int expect;
  };
  std::vector<Row> rows;
  for (int n = 3; n <= 6; ++n) rows.push_back({cycle_graph(3), n, n - 1});
  for (int n = 4; n <= 6; ++n) rows.push_back({cycle_graph(4), n, n});
  rows.push_back({cycle_graph(5), 5, 7});
  for (int n = 4; n <= 6; ++n) rows.push_back({complete_graph(4), n, 2 * n - 3});
  for (int n = 4; n <= 7; ++n) rows.push_back({complete_minus(4), n, 3 * (n - 1) / 2});
  int bad = 0;
  double slowest = 0;
  for (const Row& r : rows) {
    auto r0 = Clock::now();
    int got = star_anti_ramsey(r.n, r.pat, o).value;
    double dt = secs(r0);
    slowest = std::max(slowest, dt);
    double budget = r.n <= 5 ? 10.0 : (r.n == 6 ? 600.0 : 3600.0);
    if (got != r.expect || dt > budget) ++bad;
  }
  std::ostringstream d;
  d << rows.size() << " closed-form values, " << bad << " mismatches, slowest instance "
    << fmt_secs(slowest) << ", total " << fmt_secs(secs(t0));
  return {bad == 0, d.str()};
}

Outcome criterion2() {
  auto t0 = Clock::now();
  OracleOptions o;
  o.max_n = 7;
  int total = 0, bad = 0;
  for (int n = 3; n <= 6; ++n)
    for (const StarColouring& w : extremal_colourings(n, cycle_graph(3), o)) {
      ++total;
      if (!check_structure_ck(w, 3)) ++bad;
    }
  for (int n = 4; n <= 6; ++n)
    for (const StarColouring& w : extremal_colourings(n, cycle_graph(4), o)) {
      ++total;
      if (!check_structure_ck(w, 4)) ++bad;
    }
  for (int n = 4; n <= 6; ++n)
    for (const StarColouring& w : extremal_colourings(n, complete_minus(4), o)) {
      ++total;
      if (!check_structure_k4minus(w)) ++bad;
    }
  std::ostringstream d;
  d << total << " extremal colourings checked, " << bad << " rejected, "
    << fmt_secs(secs(t0));
  return {total > 0 && bad == 0, d.str()};
}

Outcome criterion3() {
  auto t0 = Clock::now();
  SimpleGraph c3 = cycle_graph(3), c5 = cycle_graph(5);
  SimpleGraph k4 = complete_graph(4), k5 = complete_graph(5), k6 = complete_graph(6);
  SimpleGraph k4m = complete_minus(4), k5m = complete_minus(5), q3 = cube_graph();
  int inst = 0, bad = 0;
  auto check = [&](const StarColouring& c, int want, const SimpleGraph* target) {
    ++inst;
    bool ok = validate_colouring(c).ok && c.colour_count() == want;
    if (ok && target) ok = !find_rainbow(c, *target);
    if (!ok) ++bad;
  };
  for (int n = 2; n <= 10; ++n) {
    check(lexical_colouring(n), n - 1, n >= 3 ? &c3 : nullptr);
    check(rainbow_complete(n), n * (n - 1) / 2, nullptr);
    check(orientable_colouring(transitive_tournament(n)), n - 1, n >= 3 ? &c3 : nullptr);
  }
  for (int n = 4; n <= 10; ++n) {
    int a = (n + 1) / 2, b = n / 2;
    BlowupSpec spec;
    spec.parts = {BlowupPart::lex(a), BlowupPart::lex(b)};
    check(rainbow_blowup(spec), a * b + (a - 1) + (b - 1), &k5);
    SimpleGraph l(n);
    l.add_edge(0, 1);
    l.add_edge(1, 2);
    check(modified_colouring(lexical_colouring(n), ModificationSpec::from_graph(l)),
          n + 1, nullptr);
  }
  for (int k = 3; k <= 5; ++k) {
    SimpleGraph ck = cycle_graph(k);
    for (int n = k; n <= 10; ++n)
      check(cycle_extremal(n, k), n + (k - 2) * (k - 3) / 2 - 1, &ck);
  }
  for (int n = 4; n <= 10; ++n) {
    check(k4_extremal_two_part(n, 2), 2 * n - 3, &k4);
    check(k4_extremal_three_part(n, {n - 2, 1, 1}), 2 * n - 3, &k4);
    check(min_degree_construction(n, k4), 2 * n - 3, &k4);
  }
  for (int n = 2; n <= 10; ++n)
    check(k4minus_extremal(n, std::nullopt), 3 * (n - 1) / 2, n >= 4 ? &k4m : nullptr);
  for (int n = 3; n <= 10; ++n)
    check(apex_extension(lexical_colouring(n - 1)), 2 * n - 3, n >= 4 ? &k4 : nullptr);
  for (int n = 5; n <= 10; ++n) check(min_degree_construction(n, c5), n + 2, &c5);
  for (int n = 8; n <= 10; ++n)
    check(min_degree_construction(n, q3), 21 + 2 * (n - 7), &q3);
  for (int n = 5; n <= 10; ++n)
    check(clique_blowup_lower(n, 5), turan_graph(2, n).edge_count() + n - 2, &k5);
  for (int n = 6; n <= 10; ++n)
    check(clique_blowup_lower(n, 6),
          turan_graph(2, n).edge_count() + n + (n + 1) / 2 - 4, &k6);
  for (int n = 5; n <= 10; ++n) {
    GirthModifiedResult r = girth_modified_lower(n, k5m);
    int survivors = 0;
    for (int v = 0; v + 1 < n; ++v)
      for (int j = v + 1; j < n; ++j)
        if (!r.modifier.has_edge(v, j)) {
          ++survivors;
          break;
        }
    check(r.colouring, r.modifier.edge_count() + survivors, &k5m);
  }
  double dt = secs(t0);
  std::ostringstream d;
  d << "12 construction ops, " << inst << " instances to n=10, " << bad << " failures, "
    << fmt_secs(dt);
  return {bad == 0 && dt < 60.0, d.str()};
}

Outcome criterion4() {
  auto t0 = Clock::now();
  int bad = 0;
  uint64_t paths = 0;
  for (int n = 1; n <= 5; ++n) {
    int e = n * (n - 1) / 2;
    for (uint32_t mask = 0; mask < (1u << e); ++mask) {
      Tournament t = tournament_from_mask(n, mask);
      if (!hamilton_path_ok(t, redei_hamilton_path(t))) ++bad;
      ++paths;
    }
  }
  Rng rng(20260816);
  for (int i = 0; i < 1000; ++i) {
    int n = 3 + i % 8;
    Tournament t = random_tournament(n, rng);
    if (!hamilton_path_ok(t, redei_hamilton_path(t))) ++bad;
    ++paths;
  }
  uint64_t strong = 0;
  for (int n = 3; n <= 6; ++n) {
    int e = n * (n - 1) / 2;
    for (uint32_t mask = 0; mask < (1u << e); ++mask) {
      Tournament t = tournament_from_mask(n, mask);
      if (strong_components(t).size() != 1) continue;
      ++strong;
      auto cyc = moon_cycles(t);
      for (int len = 3; len <= n; ++len) {
        auto it = cyc.find(len);
        if (it == cyc.end() || !cycle_ok(t, it->second, len)) ++bad;
      }
    }
  }
  double dt = secs(t0);
  std::ostringstream d;
  d << paths << " Redei paths, " << strong << " strong tournaments through Moon, " << bad
    << " failures, " << fmt_secs(dt);
  return {bad == 0 && dt < 60.0, d.str()};
}

Outcome criterion5() {
  auto t0 = Clock::now();
  int bad = 0;
  uint64_t eligible = 0;
  for (int n = 5; n <= 6; ++n)
    enumerate_star_colourings(n, false, [&](const StarColouring& c) {
      std::vector<int> tot = star_totals(c);
      for (int v = 0; v < n; ++v)
        if (tot[v] < 2) return;
      ++eligible;
      auto cert = rainbow_hamilton_cycle(c);
      if (!cert || (int)cert->vertex_map.size() != n || !validate_certificate(c, *cert))
        ++bad;
    });
  Rng rng(5);
  int spectra = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 3 + (int)(rng.below(6));
    StarColouring c = random_star_colouring(n, rng);
    auto sp = rainbow_cycle_spectrum(c);
    for (const auto& [len, cert] : sp)
      if (!validate_certificate(c, cert)) ++bad;
    if (!sp.empty()) {
      int top = sp.rbegin()->first;
      for (int len = 3; len <= top; ++len)
        if (!sp.count(len)) ++bad;
    }
    ++spectra;
  }
  // C_5-free construction cannot show lengths past 4
  for (const auto& [len, cert] : rainbow_cycle_spectrum(cycle_extremal(7, 5)))
    if (len > 4) ++bad;
  double dt = secs(t0);
  std::ostringstream d;
  d << eligible << " busy colourings of K5/K6 given Hamilton cycles, " << spectra
    << " random spectra interval-shaped, " << bad << " failures, " << fmt_secs(dt);
  return {bad == 0 && eligible > 0 && dt < 600.0, d.str()};
}

Outcome criterion6() {
  auto t0 = Clock::now();
  SimpleGraph k4 = complete_graph(4);
  int bad = 0;
  uint64_t eligible = 0;
  enumerate_star_colourings(5, false, [&](const StarColouring& c) {
    std::vector<int> tot = star_totals(c);
    bool busy = false;
    for (int v = 0; v < 5; ++v)
      if (tot[v] >= 3) busy = true;
    if (!busy || find_rainbow(c, k4)) return;
    ++eligible;
    CoverSearchResult r = find_covering_tuple(c);
    if (!r.tuple) {
      ++bad;
      return;
    }
    TupleReport rep = check_tuple(c, *r.tuple);
    if (!rep.good() || !rep.covers) ++bad;
  });
  double dt = secs(t0);
  std::ostringstream d;
  d << eligible << " eligible K5 colourings swept, " << bad << " without a covering tuple, "
    << fmt_secs(dt);
  return {bad == 0 && eligible > 0 && dt < 1800.0, d.str()};
}

Outcome criterion7() {
  auto t0 = Clock::now();
  int bad = 0;
  std::vector<std::pair<SimpleGraph, SimpleGraph>> tree_pairs = {
      {path_graph(2), path_graph(2)}, {path_graph(2), path_graph(3)},
      {path_graph(2), star_graph(3)}, {path_graph(3), path_graph(3)},
      {path_graph(3), star_graph(3)}, {star_graph(3), star_graph(3)}};
  for (const auto& [a, b] : tree_pairs)
    if (!check_redblue(a, b).claim_holds) ++bad;
  uint64_t attempts = 0, hits = 0;
  auto try_join = [&](const StarColouring& c, const SimpleGraph& a, const SimpleGraph& b) {
    ++attempts;
    auto jr = find_rainbow_join(c, a, b, 11);
    if (!jr) return;
    ++hits;
    if (!validate_certificate(c, *jr)) ++bad;
    if (!find_rainbow(c, join_graphs(a, b))) ++bad;
  };
  std::vector<std::pair<SimpleGraph, SimpleGraph>> join_pairs = {
      {path_graph(1), path_graph(1)},
      {path_graph(1), path_graph(2)},
      {path_graph(1), star_graph(3)},
      {path_graph(2), path_graph(2)}};
  for (int n = 6; n <= 10; ++n) {
    StarColouring c = rainbow_complete(n);
    for (const auto& [a, b] : join_pairs) try_join(c, a, b);
  }
  Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    int n = 6 + (int)(rng.below(3));
    StarColouring c = random_star_colouring(n, rng);
    try_join(c, path_graph(1), path_graph(1));
    try_join(c, path_graph(1), path_graph(2));
  }
  double dt = secs(t0);
  std::ostringstream d;
  d << tree_pairs.size() << " red-blue pairs hold, join search " << hits << "/" << attempts
    << " hits all revalidated, " << bad << " failures, " << fmt_secs(dt);
  return {bad == 0 && hits > 0 && dt < 600.0, d.str()};
}

Outcome criterion8() {
  auto t0 = Clock::now();
  int bad = 0;
  for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}})
    for (int n = 2; n <= 6; ++n) {
      int ex = ex_small(n, {complete_bipartite(s, t)}).value;
      int z = zarankiewicz_small(n, n, s, t).value;
      if (!(2 * ex <= z && z <= 4 * ex)) ++bad;
    }
  OracleOptions o;
  o.max_n = 7;
  int lhs = star_anti_ramsey(5, complete_graph(4), o).value;
  auto rhs = star_anti_ramsey_family(4, vertex_deleted_family(complete_graph(4)), o);
  if (!rhs || lhs < 4 + rhs->value) ++bad;
  double dt = secs(t0);
  std::ostringstream d;
  d << "10 sandwich instances, deletion bound " << lhs << " >= 4+"
    << (rhs ? rhs->value : -1) << ", " << bad << " failures, " << fmt_secs(dt);
  return {bad == 0 && dt < 600.0, d.str()};
}

Outcome criterion9() {
  auto t0 = Clock::now();
  OracleOptions o;
  auto p1 = nsar(path_graph(1), 7, o);
  auto p2 = nsar(path_graph(2), 7, o);
  auto p3 = nsar(path_graph(3), 7, o);
  auto k13 = nsar(star_graph(3), 7, o);
  bool ok = p1 == 2 && p2 == 3 && p3 == 4 && k13.has_value() && *k13 >= 4 && *k13 <= 36;
  std::ostringstream d;
  d << "nsar(P1)=" << (p1 ? *p1 : -1) << " nsar(P2)=" << (p2 ? *p2 : -1) << " nsar(P3)="
    << (p3 ? *p3 : -1) << " nsar(K13)=" << (k13 ? *k13 : -1) << ", " << fmt_secs(secs(t0));
  return {ok, d.str()};
}

Outcome criterion10() {
  if (g_cli.empty()) return {false, "no --cli path supplied"};
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  int bad = 0;
  auto run = [&](const std::string& args, const std::string& out) -> std::optional<std::string> {
    std::string cmd = g_cli + " " + args + " > " + out + " 2>&1";
    if (std::system(cmd.c_str()) != 0) return std::nullopt;
    return slurp(out);
  };
  int repeats = 0;
  auto twice = [&](const std::string& args) -> std::optional<std::string> {
    auto a = run(args, "acc10_a.tmp");
    auto b = run(args, "acc10_b.tmp");
    ++repeats;
    if (!a || !b || *a != *b) {
      ++bad;
      return std::nullopt;
    }
    return a;
  };
  twice("construct cycle --n 8 --k 4");
  twice("construct k4minus --n 9");
  twice("construct orientable --n 7 --random --seed 42");
  twice("enumerate --n 4 --canonical");
  twice("tournament --random --n 9 --seed 3");
  twice("check-theorem k3 --n 3..5");
  if (run("construct cycle --n 7 --k 4 --out acc10_in.json", "acc10_nul.tmp"))
    twice("detect --in acc10_in.json --pattern C4");
  else
    ++bad;
  auto t1 = twice("oracle arstar --n 5 --pattern K4- --threads 1");
  auto t4 = twice("oracle arstar --n 5 --pattern K4- --threads 4");
  // manifests embed the command line, so the cross-thread compare drops
  // exactly the fields that name the invocation
  auto strip = [](const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line))
      if (line.find("\"command\"") == std::string::npos &&
          line.find("\"threads\"") == std::string::npos)
        out += line + "\n";
    return out;
  };
  bool cross = t1 && t4 && strip(*t1) == strip(*t4);
  if (!cross) ++bad;
  for (const char* f : {"acc10_a.tmp", "acc10_b.tmp", "acc10_in.json", "acc10_nul.tmp"})
    std::remove(f);
  std::ostringstream d;
  d << repeats << " invocations byte-identical on repeat, 1-thread vs 4-thread oracle "
    << (cross ? "agrees" : "differs") << ", " << bad << " failures";
  return {bad == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  struct Entry {
    int id;
    Outcome (*fn)();
  };
  std::vector<Entry> entries = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                                {4, criterion4}, {5, criterion5}, {6, criterion6},
                                {7, criterion7}, {8, criterion8}, {9, criterion9},
                                {10, criterion10}};
  int fails = 0;
  for (const Entry& e : entries) {
    Outcome out;
    try {
      out = e.fn();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    if (!out.pass) ++fails;
    std::cout << "criterion " << e.id << ": " << (out.pass ? "PASS" : "FAIL") << " ("
              << out.detail << ")" << std::endl;
  }
  return fails;
}
