#include "starcol/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "starcol/oracle.hpp"

namespace starcol {

namespace {

StarColouring finish(StarColouring c, int want_colours = -1) {
  ValidationReport rep = validate_colouring(c);
  if (!rep.ok) throw std::logic_error("generator produced invalid colouring: " + rep.issues.front().reason);
  if (want_colours >= 0 && c.colour_count() != want_colours)
    throw std::logic_error("generator colour count mismatch");
  return c;
}

int choose2(int x) { return x * (x - 1) / 2; }

// balanced part sizes, largest parts first
std::vector<int> balanced_parts(int n, int l) {
  std::vector<int> sizes(l, n / l);
  for (int i = 0; i < n % l; ++i) sizes[i]++;
  return sizes;
}

int turan_edges(const std::vector<int>& sizes) {
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  int e = choose2(n);
  for (int s : sizes) e -= choose2(s);
  return e;
}

}  // namespace

BlowupPart BlowupPart::lex(int size) {
  BlowupPart p;
  p.size = size;
  p.kind = Lexical;
  return p;
}

BlowupPart BlowupPart::given(StarColouring c) {
  BlowupPart p;
  p.size = c.n;
  p.kind = Explicit;
  p.inner = std::move(c);
  return p;
}

BlowupPart BlowupPart::recurse(BlowupSpec s) {
  BlowupPart p;
  p.size = s.total();
  p.kind = Nested;
  p.sub = std::make_shared<BlowupSpec>(std::move(s));
  return p;
}

int BlowupSpec::total() const {
  int n = 0;
  for (const auto& p : parts) n += p.size;
  return n;
}

ModificationSpec ModificationSpec::from_graph(const SimpleGraph& l) {
  ModificationSpec m;
  for (Edge e : l.edges()) m.stars.push_back({e});
  return m;
}

ModificationSpec ModificationSpec::from_stars(std::vector<std::vector<Edge>> s) {
  ModificationSpec m;
  m.stars = std::move(s);
  return m;
}

StarColouring lexical_colouring(int n) {
  if (n < 1) throw InputError("lexical: n must be positive");
  StarColouring c;
  c.n = n;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Edge> cls;
    for (int j = i + 1; j < n; ++j) cls.push_back(mk_edge(i, j));
    c.classes.push_back(std::move(cls));
  }
  return finish(std::move(c), n >= 1 ? n - 1 : 0);
}

StarColouring rainbow_complete(int n) {
  if (n < 1) throw InputError("rainbow: n must be positive");
  StarColouring c;
  c.n = n;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) c.classes.push_back({mk_edge(u, v)});
  return finish(std::move(c), choose2(n));
}

StarColouring orientable_colouring(const Tournament& t) {
  if (t.n < 2) throw InputError("orientable: need n >= 2");
  StarColouring c;
  c.n = t.n;
  int sinks = 0;
  for (int v = 0; v < t.n; ++v) {
    if (t.out_degree(v) == 0) {
      sinks++;
      continue;
    }
    std::vector<Edge> cls;
    for (int u = 0; u < t.n; ++u)
      if (t.arc(v, u)) cls.push_back(mk_edge(v, u));
    c.classes.push_back(std::move(cls));
  }
  return finish(std::move(c), t.n - sinks);
}

StarColouring rainbow_blowup(const BlowupSpec& spec) {
  int l = (int)spec.parts.size();
  if (l < 1) throw InputError("blowup: no parts");
  int n = spec.total();
  int mn = n, mx = 0;
  for (const auto& p : spec.parts) {
    if (p.size < 1) throw InputError("blowup: empty part");
    mn = std::min(mn, p.size);
    mx = std::max(mx, p.size);
  }
  if (mx - mn > 1) throw InputError("blowup: part sizes must differ by at most 1");

  std::vector<int> part_of(n), offset(l);
  {
    int at = 0;
    for (int i = 0; i < l; ++i) {
      offset[i] = at;
      for (int j = 0; j < spec.parts[i].size; ++j) part_of[at++] = i;
    }
  }

  StarColouring c;
  c.n = n;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (part_of[u] != part_of[v]) c.classes.push_back({mk_edge(u, v)});

  for (int i = 0; i < l; ++i) {
    const BlowupPart& p = spec.parts[i];
    StarColouring in;
    switch (p.kind) {
      case BlowupPart::Lexical: in = lexical_colouring(p.size); break;
      case BlowupPart::Explicit:
        if (!p.inner || p.inner->n != p.size) throw InputError("blowup: explicit part size mismatch");
        in = *p.inner;
        {
          ValidationReport rep = validate_colouring(in);
          if (!rep.ok) throw InputError("blowup: explicit part not a star colouring");
        }
        break;
      case BlowupPart::Nested:
        if (!p.sub || p.sub->total() != p.size) throw InputError("blowup: nested part size mismatch");
        in = rainbow_blowup(*p.sub);
        break;
    }
    for (const auto& cls : in.classes) {
      std::vector<Edge> shifted;
      for (Edge e : cls) shifted.push_back(mk_edge(e.first + offset[i], e.second + offset[i]));
      c.classes.push_back(std::move(shifted));
    }
  }
  return finish(std::move(c));
}

StarColouring modified_colouring(const StarColouring& c, const ModificationSpec& m) {
  ValidationReport rep = validate_colouring(c);
  if (!rep.ok) throw InputError("modified: base not a star colouring");

  std::set<Edge> taken;
  for (const auto& st : m.stars) {
    if (st.empty()) throw InputError("modified: empty star in spec");
    uint32_t common = ~0u;
    for (Edge e : st) {
      if (e.first < 0 || e.second >= c.n || e.first >= e.second)
        throw InputError("modified: bad edge in spec");
      if (!taken.insert(mk_edge(e.first, e.second)).second)
        throw InputError("modified: stars not edge-disjoint");
      common &= (1u << e.first) | (1u << e.second);
    }
    if (common == 0) throw InputError("modified: spec class is not a star");
  }

  StarColouring out;
  out.n = c.n;
  for (const auto& cls : c.classes) {
    std::vector<Edge> keep;
    for (Edge e : cls)
      if (!taken.count(e)) keep.push_back(e);
    if (!keep.empty()) out.classes.push_back(std::move(keep));
  }
  for (const auto& st : m.stars) {
    std::vector<Edge> fresh;
    for (Edge e : st) fresh.push_back(mk_edge(e.first, e.second));
    out.classes.push_back(std::move(fresh));
  }
  return finish(std::move(out));
}

StarColouring cycle_extremal(int n, int k, const std::optional<Tournament>& a_tournament) {
  if (k < 3 || n < k) throw InputError("cycle_extremal: need n >= k >= 3");
  int na = n - k + 1;
  Tournament t = a_tournament ? *a_tournament : transitive_tournament(na);
  if (t.n != na) throw InputError("cycle_extremal: tournament must have n-k+1 vertices");
  if (!is_ck_free(t, k).free) throw InputError("cycle_extremal: tournament has a directed C_k");

  StarColouring c;
  c.n = n;
  for (int x = 0; x < na; ++x) {
    std::vector<Edge> cls;
    for (int y = 0; y < na; ++y)
      if (t.arc(x, y)) cls.push_back(mk_edge(x, y));
    for (int b = na; b < n; ++b) cls.push_back(mk_edge(x, b));
    c.classes.push_back(std::move(cls));
  }
  for (int v = na; v < n; ++v)
    for (int u = na; u < v; ++u) c.classes.push_back({mk_edge(u, v)});
  return finish(std::move(c), n + choose2(k - 2) - 1);
}

StarColouring k4_extremal_two_part(int n, int part1) {
  if (n < 4) throw InputError("k4 two-part: need n >= 4");
  if (part1 < 2 || part1 > n - 1) throw InputError("k4 two-part: need 2 <= |V1| <= n-1");

  StarColouring c;
  c.n = n;
  for (int i = 0; i + 1 < part1; ++i) {
    std::vector<Edge> cls;
    for (int j = i + 1; j < part1; ++j) cls.push_back(mk_edge(i, j));
    c.classes.push_back(std::move(cls));
  }
  for (int i = part1; i + 1 < n; ++i) {
    std::vector<Edge> cls;
    for (int j = i + 1; j < n; ++j) cls.push_back(mk_edge(i, j));
    c.classes.push_back(std::move(cls));
  }
  for (int v = 1; v < part1; ++v) {
    std::vector<Edge> cls;
    for (int u = part1; u < n; ++u) cls.push_back(mk_edge(v, u));
    c.classes.push_back(std::move(cls));
  }
  for (int u = part1; u < n; ++u) c.classes.push_back({mk_edge(0, u)});
  return finish(std::move(c), 2 * n - 3);
}

StarColouring k4_extremal_three_part(int n, const std::array<int, 3>& sizes) {
  if (n < 4) throw InputError("k4 three-part: need n >= 4");
  if (sizes[0] + sizes[1] + sizes[2] != n) throw InputError("k4 three-part: sizes must sum to n");
  for (int s : sizes)
    if (s < 1) throw InputError("k4 three-part: parts must be non-empty");

  int lo[3], hi[3];
  lo[0] = 0;
  for (int i = 0; i < 3; ++i) {
    hi[i] = lo[i] + sizes[i];
    if (i < 2) lo[i + 1] = hi[i];
  }

  StarColouring c;
  c.n = n;
  for (int i = 0; i < 3; ++i)
    for (int u = lo[i]; u + 1 < hi[i]; ++u) {
      std::vector<Edge> cls;
      for (int w = u + 1; w < hi[i]; ++w) cls.push_back(mk_edge(u, w));
      c.classes.push_back(std::move(cls));
    }
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    for (int v = lo[i]; v < hi[i]; ++v) {
      std::vector<Edge> cls;
      for (int u = lo[j]; u < hi[j]; ++u) cls.push_back(mk_edge(v, u));
      c.classes.push_back(std::move(cls));
    }
  }
  return finish(std::move(c), 2 * n - 3);
}

StarColouring k4minus_extremal(int n, const std::optional<K4MinusParams>& params) {
  if (n < 2) throw InputError("k4minus: need n >= 2");
  if (n <= 2) return lexical_colouring(n);

  std::vector<std::vector<Edge>> stars;
  if (n % 2 == 1) {
    if (params) throw InputError("k4minus: parity params only apply to even n");
    for (int i = 0; i + 1 < n - 1; i += 2) stars.push_back({mk_edge(i, i + 1)});
  } else {
    int m = n / 2;
    K4MinusParams p = params.value_or(K4MinusParams{});
    if (p.a < 1 || 2 * p.a + 1 > n - 1) throw InputError("k4minus: a out of range");
    int t0 = 2 * p.a - 2;  // block {t0, t0+1, t0+2}
    std::vector<Edge> s = p.s_edges;
    if (s.empty()) s.push_back(mk_edge(t0, t0 + 1));
    if (s.size() > 2) throw InputError("k4minus: S needs 1 or 2 edges");
    std::set<Edge> seen;
    for (Edge& e : s) {
      e = mk_edge(e.first, e.second);
      if (e.first < t0 || e.second > t0 + 2) throw InputError("k4minus: S edge outside its block");
      if (!seen.insert(e).second) throw InputError("k4minus: duplicate S edge");
    }
    for (int i = 0; i + 1 < t0; i += 2) stars.push_back({mk_edge(i, i + 1)});
    stars.push_back(s);
    for (int i = t0 + 3; i + 1 <= 2 * m - 2; i += 2) stars.push_back({mk_edge(i, i + 1)});
  }
  StarColouring out = modified_colouring(lexical_colouring(n), ModificationSpec::from_stars(stars));
  return finish(std::move(out), 3 * (n - 1) / 2);
}

StarColouring apex_extension(const StarColouring& c) {
  ValidationReport rep = validate_colouring(c);
  if (!rep.ok) throw InputError("apex: base not a star colouring");
  StarColouring out;
  out.n = c.n + 1;
  out.classes = c.classes;
  for (int v = 0; v < c.n; ++v) out.classes.push_back({mk_edge(v, c.n)});
  return finish(std::move(out), c.colour_count() + c.n);
}

StarColouring min_degree_construction(int n, const SimpleGraph& h) {
  int delta = h.n > 0 ? h.degree(0) : 0;
  for (int v = 0; v < h.n; ++v) delta = std::min(delta, h.degree(v));
  if (h.n < 2 || delta < 2) throw InputError("min_degree: need delta(H) >= 2");
  if (n < h.n) throw InputError("min_degree: need n >= v(H)");

  int v0 = h.n - 1, d = delta - 1;
  StarColouring c = rainbow_complete(v0);
  c.n = v0;
  for (int x = v0; x < n; ++x) {
    for (int i = 0; i < d; ++i) {
      std::vector<Edge> cls;
      for (int j = i; j < x; j += d) cls.push_back(mk_edge(j, x));
      c.classes.push_back(std::move(cls));
    }
    c.n = x + 1;
  }
  return finish(std::move(c), choose2(h.n - 1) + d * (n - h.n + 1));
}

StarColouring clique_blowup_lower(int n, int m) {
  if (m < 5) throw InputError("clique_blowup: need m >= 5");
  if (n < m) throw InputError("clique_blowup: need n >= m");

  BlowupSpec spec;
  int want;
  if (m % 2 == 1) {
    int k = (m - 1) / 2;
    std::vector<int> sizes = balanced_parts(n, k);
    for (int s : sizes) spec.parts.push_back(BlowupPart::lex(s));
    want = turan_edges(sizes) + n - k;
  } else {
    int k = m / 2;
    std::vector<int> sizes = balanced_parts(n, k - 1);
    for (int i = 0; i < (int)sizes.size(); ++i) {
      if (i > 0) {
        spec.parts.push_back(BlowupPart::lex(sizes[i]));
        continue;
      }
      if (sizes[0] <= 3)
        spec.parts.push_back(BlowupPart::given(rainbow_complete(sizes[0])));
      else
        spec.parts.push_back(BlowupPart::given(k4_extremal_two_part(sizes[0], 2)));
    }
    want = turan_edges(sizes) + n + (n + k - 2) / (k - 1) - k - 1;
  }
  return finish(rainbow_blowup(spec), want);
}

GirthModifiedResult girth_modified_lower(int n, const SimpleGraph& h, int ex_cap) {
  GraphInvariants inv = graph_invariants(h);
  if (inv.ea < 3) throw InputError("girth_modified: need ea(H) >= 3");
  if (n < 3) throw InputError("girth_modified: need n >= 3");

  ExResult ex = ex_small(n, cycle_family(std::min(h.n, n)), ex_cap);
  GirthModifiedResult r{modified_colouring(lexical_colouring(n), ModificationSpec::from_graph(ex.witness)),
                        ex.witness};
  return r;
}

}  // namespace starcol
