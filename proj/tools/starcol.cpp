#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "starcol/colouring.hpp"
#include "starcol/constructions.hpp"
#include "starcol/detect.hpp"
#include "starcol/graph.hpp"
#include "starcol/json_io.hpp"
#include "starcol/oracle.hpp"
#include "starcol/rng.hpp"
#include "starcol/tournament.hpp"

using nlohmann::json;
using namespace starcol;

namespace {

struct Global {
  uint64_t seed = 0;
  int threads = 1;
  int max_n = 6;
  std::string format = "json";
  bool timings = false;
  std::string out;
  std::string command;
};

Global G;
std::chrono::steady_clock::time_point start_time;

void emit(const std::string& text) {
  if (G.out.empty() || G.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(G.out);
  if (!f) throw InputError("cannot write " + G.out);
  f << text;
}

json manifest() {
  json m;
  m["command"] = G.command;
  m["seed"] = G.seed;
  m["threads"] = G.threads;
  m["max_n"] = G.max_n;
  m["version"] = "0.1.0";
  return m;
}

void emit_result(json j) {
  j["manifest"] = manifest();
  if (G.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_time)
                  .count();
    j["wall_ms"] = ms;
  }
  emit(dump_json(j));
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("bad json: ") + e.what());
  }
  // accept our own construct/tournament output as input
  for (const char* key : {"colouring", "tournament"})
    if (j.is_object() && j.contains(key)) return j[key];
  return j;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::vector<Edge> parse_edge_list(const std::string& s) {
  std::vector<Edge> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw InputError("edge syntax: u-v");
    out.push_back(mk_edge(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<SimpleGraph> parse_family(const std::string& s) {
  if (s.rfind("C<=", 0) == 0) return cycle_family(std::stoi(s.substr(3)));
  if (s.rfind("del:", 0) == 0) return vertex_deleted_family(parse_pattern(s.substr(4)));
  std::vector<SimpleGraph> fam;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) fam.push_back(parse_pattern(item));
  if (fam.empty()) throw InputError("empty family");
  return fam;
}

json stats_json(const SearchStats& s) {
  json j;
  j["nodes"] = s.nodes;
  j["leaves"] = s.leaves;
  j["pruned_bound"] = s.pruned_bound;
  j["pruned_rainbow"] = s.pruned_rainbow;
  return j;
}

json certificate_json(const std::optional<RainbowCertificate>& cert) {
  json j;
  j["found"] = cert.has_value();
  if (cert) j["certificate"] = to_json(*cert);
  return j;
}

// ---- check-theorem tables ----------------------------------------------

struct Row {
  std::string instance;
  std::string formula;
  std::string value;
  std::string witness;
  std::string status;
};

std::string render_rows(const std::vector<Row>& rows) {
  if (G.format == "csv") {
    std::string out = "instance,formula,value,witness,status\n";
    for (const Row& r : rows)
      out += r.instance + "," + r.formula + "," + r.value + "," + r.witness + "," + r.status + "\n";
    return out;
  }
  if (G.format == "md") {
    std::string out = "| instance | formula | value | witness | status |\n";
    out += "| --- | --- | --- | --- | --- |\n";
    for (const Row& r : rows)
      out += "| " + r.instance + " | " + r.formula + " | " + r.value + " | " + r.witness +
             " | " + r.status + " |\n";
    return out;
  }
  json arr = json::array();
  for (const Row& r : rows) {
    json o;
    o["instance"] = r.instance;
    o["formula"] = r.formula;
    o["value"] = r.value;
    o["witness"] = r.witness;
    o["status"] = r.status;
    arr.push_back(o);
  }
  json doc;
  doc["rows"] = arr;
  doc["manifest"] = manifest();
  if (G.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_time)
                  .count();
    doc["wall_ms"] = ms;
  }
  return dump_json(doc);
}

OracleOptions oracle_opts() {
  OracleOptions o;
  o.max_n = G.max_n;
  o.threads = G.threads;
  return o;
}

// closed-form check against the oracle; construction supplies the witness key
Row formula_row(const std::string& instance, int n, const SimpleGraph& pattern, int formula,
                std::function<StarColouring()> witness) {
  Row r;
  r.instance = instance;
  r.formula = std::to_string(formula);
  if (n > G.max_n) {
    r.value = "";
    r.status = "SKIP (n exceeds max_n cap)";
    return r;
  }
  OracleResult res = star_anti_ramsey(n, pattern, oracle_opts());
  r.value = std::to_string(res.value);
  try {
    r.witness = canonical_key(witness()).key;
  } catch (const InputError&) {
  }
  r.status = res.value == formula ? "PASS" : "FAIL";
  return r;
}

int choose2(int m) { return m * (m - 1) / 2; }

std::vector<Row> theorem_rows(const std::string& name, std::pair<int, int> nr,
                              std::pair<int, int> kr) {
  std::vector<Row> rows;
  if (name == "k3") {
    for (int n = std::max(3, nr.first); n <= nr.second; ++n)
      rows.push_back(formula_row("ar*(" + std::to_string(n) + ",K3)", n, complete_graph(3),
                                 n - 1, [n] { return lexical_colouring(n); }));
  } else if (name == "cycle") {
    for (int k = std::max(3, kr.first); k <= kr.second; ++k)
      for (int n = std::max(k, nr.first); n <= nr.second; ++n)
        rows.push_back(formula_row(
            "ar*(" + std::to_string(n) + ",C" + std::to_string(k) + ")", n, cycle_graph(k),
            n + choose2(k - 2) - 1, [n, k] { return cycle_extremal(n, k, std::nullopt); }));
  } else if (name == "k4") {
    for (int n = std::max(4, nr.first); n <= nr.second; ++n)
      rows.push_back(formula_row("ar*(" + std::to_string(n) + ",K4)", n, complete_graph(4),
                                 2 * n - 3, [n] { return k4_extremal_two_part(n, n / 2); }));
  } else if (name == "k4minus") {
    for (int n = std::max(4, nr.first); n <= nr.second; ++n)
      rows.push_back(formula_row("ar*(" + std::to_string(n) + ",K4-)", n, complete_minus(4),
                                 3 * (n - 1) / 2, [n] { return k4minus_extremal(n, std::nullopt); }));
  } else if (name == "nsar-paths") {
    for (int t = 1; t <= 3; ++t) {
      Row r;
      r.instance = "nsar(P" + std::to_string(t) + ")";
      r.formula = std::to_string(t + 1);
      auto got = nsar(path_graph(t), 7, oracle_opts());
      r.value = got ? std::to_string(*got) : ">7";
      r.status = (got && *got == t + 1) ? "PASS" : "FAIL";
      rows.push_back(r);
    }
  } else if (name == "zex-sandwich") {
    for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
      for (int n = std::max(2, nr.first); n <= std::min(6, nr.second); ++n) {
        Row r;
        r.instance = "z(" + std::to_string(n) + "," + std::to_string(n) + ";" +
                     std::to_string(s) + "," + std::to_string(t) + ")";
        ExResult ex = ex_small(n, {complete_bipartite(s, t)}, 10);
        ExResult z = zarankiewicz_small(n, n, s, t);
        r.formula = "2ex=" + std::to_string(2 * ex.value) + "..4ex=" + std::to_string(4 * ex.value);
        r.value = std::to_string(z.value);
        r.status =
            (2 * ex.value <= z.value && z.value <= 4 * ex.value) ? "PASS" : "FAIL";
        rows.push_back(r);
      }
    }
  } else if (name == "redblue") {
    std::vector<std::pair<std::string, SimpleGraph>> trees = {
        {"P2", path_graph(2)}, {"P3", path_graph(3)}, {"star3", star_graph(3)}};
    for (size_t i = 0; i < trees.size(); ++i)
      for (size_t j = i; j < trees.size(); ++j) {
        if (trees[i].second.n > trees[j].second.n) continue;
        Row r;
        r.instance = trees[i].first + "+" + trees[j].first;
        r.formula = "holds";
        RedBlueResult res = check_redblue(trees[i].second, trees[j].second);
        r.value = res.claim_holds ? "holds" : "fails";
        r.witness = std::to_string(res.checked) + " forests";
        r.status = res.claim_holds ? "PASS" : "FAIL";
        rows.push_back(r);
      }
  } else {
    throw InputError("unknown theorem '" + name + "'");
  }
  return rows;
}

std::pair<int, int> default_range(const std::string& name) {
  if (name == "k3") return {3, 6};
  if (name == "cycle") return {3, 6};
  if (name == "k4") return {4, 6};
  if (name == "k4minus") return {4, 7};
  return {2, 6};
}

}  // namespace

int main(int argc, char** argv) {
  start_time = std::chrono::steady_clock::now();
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  G.command = cmd;

  CLI::App app{"star colourings of complete graphs: constructions, detection, exact search"};
  app.require_subcommand(1);
  app.add_option("--seed", G.seed, "base seed for all randomised procedures");
  app.add_option("--threads", G.threads, "worker threads for the oracle");
  app.add_option("--max-n", G.max_n, "oracle size cap");
  app.add_option("--format", G.format, "table format: json|csv|md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_flag("--timings", G.timings, "include wall time fields in output");
  app.add_option("--out", G.out, "output file (default stdout)");

  // construct
  auto* c_cmd = app.add_subcommand("construct", "build a star colouring");
  std::string c_kind, c_pattern, c_parts, c_sedges, c_stars, c_in;
  int c_n = 0, c_k = 3, c_part1 = 2, c_a = -1, c_m = 3, c_excap = 10;
  bool c_random = false;
  c_cmd->add_option("kind", c_kind,
                    "lexical|rainbow|orientable|blowup|modified|cycle|k4two|k4three|"
                    "k4minus|apex|mindeg|cliqueblowup|girthmod")
      ->required();
  c_cmd->add_option("--n", c_n, "number of vertices");
  c_cmd->add_option("--k", c_k, "cycle length");
  c_cmd->add_option("--part1", c_part1, "size of the first part");
  c_cmd->add_option("--parts", c_parts, "comma separated part sizes");
  c_cmd->add_option("--a", c_a, "k4minus even-case parameter");
  c_cmd->add_option("--s-edges", c_sedges, "k4minus S edges, e.g. 2-3,2-4");
  c_cmd->add_option("--stars", c_stars, "modification stars, classes split by ';'");
  c_cmd->add_option("--m", c_m, "clique order");
  c_cmd->add_option("--pattern", c_pattern, "pattern name");
  c_cmd->add_option("--in", c_in, "base colouring or tournament json, '-' for stdin");
  c_cmd->add_option("--ex-cap", c_excap, "extremal search cap");
  c_cmd->add_flag("--random", c_random, "randomise the underlying tournament");

  // validate
  auto* v_cmd = app.add_subcommand("validate", "validate a star colouring");
  std::string v_in = "-";
  v_cmd->add_option("--in", v_in, "colouring json, '-' for stdin");

  // detect
  auto* d_cmd = app.add_subcommand("detect", "rainbow subgraph detection");
  std::string d_in = "-", d_pattern, d_t1, d_t2;
  int d_extend = -1;
  bool d_spectrum = false, d_hamilton = false;
  d_cmd->add_option("--in", d_in, "colouring json, '-' for stdin");
  d_cmd->add_option("--pattern", d_pattern, "pattern to search for");
  d_cmd->add_flag("--spectrum", d_spectrum, "rainbow cycle spectrum");
  d_cmd->add_flag("--hamilton", d_hamilton, "rainbow hamilton cycle");
  d_cmd->add_option("--extend", d_extend, "extend a rainbow cycle through this vertex");
  d_cmd->add_option("--t1", d_t1, "first tree for the join search");
  d_cmd->add_option("--t2", d_t2, "second tree for the join search");

  // tournament
  auto* t_cmd = app.add_subcommand("tournament", "tournament analysis");
  std::string t_in;
  int t_n = 5, t_ckfree = 0;
  bool t_random = false, t_nontrivial = false;
  t_cmd->add_option("--in", t_in, "tournament json, '-' for stdin");
  t_cmd->add_option("--n", t_n, "order for generated tournaments");
  t_cmd->add_flag("--random", t_random, "random tournament from the seed");
  t_cmd->add_option("--ck-free", t_ckfree, "search for a C_k-free tournament");
  t_cmd->add_flag("--nontrivial", t_nontrivial, "require a non-transitive witness");

  // oracle
  auto* o_cmd = app.add_subcommand("oracle", "exact desk-scale search");
  o_cmd->require_subcommand(1);
  auto* oa = o_cmd->add_subcommand("arstar", "maximum colours avoiding a rainbow pattern");
  std::string oa_pattern, oa_family;
  int oa_n = 4;
  oa->add_option("--n", oa_n, "number of vertices")->required();
  oa->add_option("--pattern", oa_pattern, "single forbidden pattern");
  oa->add_option("--family", oa_family, "family: C<=k, del:<pattern>, or comma list");
  auto* on = o_cmd->add_subcommand("nsar", "least n forcing a rainbow copy");
  std::string on_pattern;
  int on_cap = 7;
  on->add_option("--pattern", on_pattern, "forest pattern")->required();
  on->add_option("--cap", on_cap, "largest n to try");
  auto* oe = o_cmd->add_subcommand("extremal", "all extremal colourings");
  std::string oe_pattern;
  int oe_n = 4;
  bool oe_all = false;
  oe->add_option("--n", oe_n)->required();
  oe->add_option("--pattern", oe_pattern)->required();
  oe->add_flag("--emit-all", oe_all, "emit full colourings, not just keys");
  auto* ox = o_cmd->add_subcommand("ex", "extremal edge count");
  std::string ox_family;
  int ox_n = 5, ox_cap = 10;
  ox->add_option("--n", ox_n)->required();
  ox->add_option("--family", ox_family)->required();
  ox->add_option("--cap", ox_cap);
  auto* oz = o_cmd->add_subcommand("zex", "bipartite extremal edge count");
  int oz_m = 3, oz_n = 3, oz_s = 2, oz_t = 2;
  oz->add_option("--m", oz_m)->required();
  oz->add_option("--n", oz_n)->required();
  oz->add_option("--s", oz_s);
  oz->add_option("--t", oz_t);

  // check-theorem
  auto* ct_cmd = app.add_subcommand("check-theorem", "closed forms against the oracle");
  std::string ct_name, ct_n, ct_k;
  ct_cmd->add_option("name", ct_name, "cycle|k4|k4minus|k3|nsar-paths|zex-sandwich|redblue")
      ->required();
  ct_cmd->add_option("--n", ct_n, "n range, e.g. 4..6");
  ct_cmd->add_option("--k", ct_k, "k range for cycle");

  // enumerate
  auto* e_cmd = app.add_subcommand("enumerate", "walk all star colourings of K_n");
  int e_n = 3, e_limit = 0;
  bool e_canonical = false, e_count = false;
  e_cmd->add_option("--n", e_n)->required();
  e_cmd->add_flag("--canonical", e_canonical, "one representative per isomorphism class");
  e_cmd->add_flag("--count-only", e_count, "just report the count");
  e_cmd->add_option("--limit", e_limit, "emit at most this many colourings");

  // report
  auto* r_cmd = app.add_subcommand("report", "combined value table");
  (void)r_cmd;

  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    s->fallthrough();
    for (CLI::App* nested : s->get_subcommands([](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (*c_cmd) {
      auto need_n = [&] {
        if (c_n <= 0) throw InputError("construct: --n required");
      };
      StarColouring col;
      json extra;
      if (c_kind == "lexical") {
        need_n();
        col = lexical_colouring(c_n);
      } else if (c_kind == "rainbow") {
        need_n();
        col = rainbow_complete(c_n);
      } else if (c_kind == "orientable") {
        Tournament t(0);
        if (!c_in.empty()) {
          t = tournament_from_json(read_input(c_in));
        } else {
          need_n();
          if (c_random) {
            Rng rng(G.seed);
            t = random_tournament(c_n, rng);
          } else {
            t = transitive_tournament(c_n);
          }
        }
        col = orientable_colouring(t);
      } else if (c_kind == "blowup") {
        BlowupSpec spec;
        for (int s : parse_int_list(c_parts)) spec.parts.push_back(BlowupPart::lex(s));
        col = rainbow_blowup(spec);
      } else if (c_kind == "modified") {
        StarColouring base = colouring_from_json(read_input(c_in.empty() ? "-" : c_in));
        ModificationSpec spec;
        std::stringstream ss(c_stars);
        std::string cls;
        while (std::getline(ss, cls, ';')) spec.stars.push_back(parse_edge_list(cls));
        col = modified_colouring(base, spec);
      } else if (c_kind == "cycle") {
        need_n();
        std::optional<Tournament> t;
        if (c_random) {
          Rng rng(G.seed);
          t = random_ck_free_tournament(c_n - c_k + 1, c_k, rng);
        }
        col = cycle_extremal(c_n, c_k, t);
      } else if (c_kind == "k4two") {
        need_n();
        col = k4_extremal_two_part(c_n, c_part1);
      } else if (c_kind == "k4three") {
        need_n();
        auto parts = parse_int_list(c_parts);
        if (parts.size() != 3) throw InputError("k4three: --parts a,b,c");
        col = k4_extremal_three_part(c_n, {parts[0], parts[1], parts[2]});
      } else if (c_kind == "k4minus") {
        need_n();
        std::optional<K4MinusParams> p;
        if (c_a >= 0 || !c_sedges.empty()) {
          K4MinusParams kp;
          kp.a = c_a >= 0 ? c_a : 1;
          if (!c_sedges.empty()) kp.s_edges = parse_edge_list(c_sedges);
          p = kp;
        }
        col = k4minus_extremal(c_n, p);
      } else if (c_kind == "apex") {
        StarColouring base = colouring_from_json(read_input(c_in.empty() ? "-" : c_in));
        col = apex_extension(base);
      } else if (c_kind == "mindeg") {
        need_n();
        col = min_degree_construction(c_n, parse_pattern(c_pattern));
      } else if (c_kind == "cliqueblowup") {
        need_n();
        col = clique_blowup_lower(c_n, c_m);
      } else if (c_kind == "girthmod") {
        need_n();
        GirthModifiedResult r = girth_modified_lower(c_n, parse_pattern(c_pattern), c_excap);
        col = r.colouring;
        extra["modifier"] = to_json(r.modifier);
      } else {
        throw InputError("unknown construction '" + c_kind + "'");
      }
      json j;
      j["colouring"] = to_json(col);
      j["colours"] = col.colour_count();
      for (auto& [k, v] : extra.items()) j[k] = v;
      emit_result(j);
      return 0;
    }

    if (*v_cmd) {
      StarColouring col = colouring_from_json(read_input(v_in));
      ValidationReport rep = validate_colouring(col);
      json j;
      j["ok"] = rep.ok;
      json issues = json::array();
      for (const ValidationIssue& i : rep.issues) {
        json o;
        o["class_id"] = i.class_id;
        o["reason"] = i.reason;
        issues.push_back(o);
      }
      j["issues"] = issues;
      emit_result(j);
      return rep.ok ? 0 : 1;
    }

    if (*d_cmd) {
      StarColouring col = colouring_from_json(read_input(d_in));
      json j;
      if (!d_pattern.empty()) {
        j = certificate_json(find_rainbow(col, parse_pattern(d_pattern)));
      } else if (d_spectrum) {
        auto spec = rainbow_cycle_spectrum(col);
        json lens = json::array();
        json certs;
        for (auto& [len, cert] : spec) {
          lens.push_back(len);
          certs[std::to_string(len)] = to_json(cert);
        }
        j["lengths"] = lens;
        j["certificates"] = certs;
      } else if (d_hamilton) {
        j = certificate_json(rainbow_hamilton_cycle(col));
      } else if (d_extend >= 0) {
        j = certificate_json(std::optional<RainbowCertificate>(extend_rainbow_cycle(col, d_extend)));
      } else if (!d_t1.empty() && !d_t2.empty()) {
        j = certificate_json(
            find_rainbow_join(col, parse_pattern(d_t1), parse_pattern(d_t2), G.seed));
      } else {
        throw InputError("detect: pick --pattern, --spectrum, --hamilton, --extend or --t1/--t2");
      }
      emit_result(j);
      return 0;
    }

    if (*t_cmd) {
      Tournament t(0);
      if (!t_in.empty()) {
        t = tournament_from_json(read_input(t_in));
      } else if (t_ckfree >= 3) {
        t = find_ck_free_tournament(t_n, t_ckfree, t_nontrivial);
      } else if (t_random) {
        Rng rng(G.seed);
        t = random_tournament(t_n, rng);
      } else {
        t = transitive_tournament(t_n);
      }
      json j;
      j["tournament"] = to_json(t);
      auto comps = strong_components(t);
      json cj = json::array();
      for (auto& comp : comps) cj.push_back(comp);
      j["strong_components"] = cj;
      j["redei_path"] = redei_hamilton_path(t);
      if (comps.size() == 1 && t.n >= 3) {
        json mj;
        for (auto& [len, cyc] : moon_cycles(t)) mj[std::to_string(len)] = cyc;
        j["moon_cycles"] = mj;
      }
      emit_result(j);
      return 0;
    }

    if (*o_cmd) {
      json j;
      if (*oa) {
        if (oa_pattern.empty() == oa_family.empty())
          throw InputError("arstar: exactly one of --pattern / --family");
        if (!oa_pattern.empty()) {
          OracleResult res = star_anti_ramsey(oa_n, parse_pattern(oa_pattern), oracle_opts());
          j["value"] = res.value;
          j["exists"] = true;
          j["stats"] = stats_json(res.stats);
        } else {
          auto res = star_anti_ramsey_family(oa_n, parse_family(oa_family), oracle_opts());
          j["exists"] = res.has_value();
          if (res) {
            j["value"] = res->value;
            j["stats"] = stats_json(res->stats);
          }
        }
      } else if (*on) {
        auto got = nsar(parse_pattern(on_pattern), on_cap, oracle_opts());
        j["found"] = got.has_value();
        if (got)
          j["value"] = *got;
        else
          j["lower_bound"] = on_cap + 1;
      } else if (*oe) {
        auto wits = extremal_colourings(oe_n, parse_pattern(oe_pattern), oracle_opts());
        j["count"] = wits.size();
        json keys = json::array();
        json cols = json::array();
        for (const StarColouring& w : wits) {
          keys.push_back(canonical_key(w).key);
          if (oe_all) cols.push_back(to_json(w));
        }
        j["keys"] = keys;
        if (oe_all) j["colourings"] = cols;
      } else if (*ox) {
        ExResult res = ex_small(ox_n, parse_family(ox_family), ox_cap);
        j["value"] = res.value;
        j["witness"] = to_json(res.witness);
        j["nodes"] = res.nodes;
      } else if (*oz) {
        ExResult res = zarankiewicz_small(oz_m, oz_n, oz_s, oz_t);
        j["value"] = res.value;
        j["witness"] = to_json(res.witness);
        j["nodes"] = res.nodes;
      }
      emit_result(j);
      return 0;
    }

    if (*ct_cmd) {
      auto nr = ct_n.empty() ? default_range(ct_name) : parse_range(ct_n);
      auto kr = ct_k.empty() ? std::pair<int, int>{3, 5} : parse_range(ct_k);
      std::vector<Row> rows = theorem_rows(ct_name, nr, kr);
      emit(render_rows(rows));
      for (const Row& r : rows)
        if (r.status == "FAIL") return 1;
      return 0;
    }

    if (*e_cmd) {
      json j;
      if (e_count && !e_canonical) {
        j["count"] = count_star_colourings(e_n);
      } else {
        json cols = json::array();
        uint64_t total = enumerate_star_colourings(e_n, e_canonical, [&](const StarColouring& c) {
          if (e_limit > 0 && (int)cols.size() < e_limit) cols.push_back(to_json(c));
        });
        j["count"] = total;
        if (e_limit > 0) j["colourings"] = cols;
      }
      j["n"] = e_n;
      j["canonical"] = e_canonical;
      emit_result(j);
      return 0;
    }

    if (*r_cmd) {
      std::vector<Row> rows;
      for (const std::string& name :
           {std::string("k3"), std::string("cycle"), std::string("k4"), std::string("k4minus")}) {
        auto nr = default_range(name);
        nr.second = std::min(nr.second, 5);
        auto add = theorem_rows(name, nr, {3, 5});
        rows.insert(rows.end(), add.begin(), add.end());
      }
      for (const std::string& name : {std::string("nsar-paths"), std::string("zex-sandwich"),
                                      std::string("redblue")}) {
        auto add = theorem_rows(name, {2, 4}, {3, 5});
        rows.insert(rows.end(), add.begin(), add.end());
      }
      emit(render_rows(rows));
      for (const Row& r : rows)
        if (r.status == "FAIL") return 1;
      return 0;
    }
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
