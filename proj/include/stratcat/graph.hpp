#pragma once

// Compact cellular stratified spaces of dimension <= 1, modelled as finite
// multigraphs: vertices are the 0-strata, closed edges (with endpoints) the
// 1-strata. Loops and parallel edges are allowed. All values are immutable
// after construction and every operation is a pure function.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace stratcat {

using VIdx = int;
using EIdx = int;

struct Edge {
  std::string name;
  VIdx src = -1;
  VIdx dst = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeDef {
  std::string name, src, dst;
};

inline bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

/// A stratified graph. Vertices and edges are kept in lexicographic order by
/// name, so every enumeration over them is reproducible.
class StratifiedGraph {
 public:
  StratifiedGraph() = default;

  StratifiedGraph(std::vector<std::string> vertex_names, std::vector<EdgeDef> edge_defs,
                  std::optional<std::string> basepoint_name = std::nullopt) {
    std::sort(vertex_names.begin(), vertex_names.end());
    for (std::size_t i = 0; i < vertex_names.size(); ++i) {
      const auto& v = vertex_names[i];
      if (!valid_name(v)) throw std::invalid_argument("invalid vertex name: '" + v + "'");
      if (i > 0 && v == vertex_names[i - 1])
        throw std::invalid_argument("duplicate vertex name: '" + v + "'");
    }
    vertices_ = std::move(vertex_names);
    std::sort(edge_defs.begin(), edge_defs.end(),
              [](const EdgeDef& a, const EdgeDef& b) { return a.name < b.name; });
    edges_.reserve(edge_defs.size());
    for (std::size_t i = 0; i < edge_defs.size(); ++i) {
      const auto& d = edge_defs[i];
      if (!valid_name(d.name)) throw std::invalid_argument("invalid edge name: '" + d.name + "'");
      if (i > 0 && d.name == edge_defs[i - 1].name)
        throw std::invalid_argument("duplicate edge name: '" + d.name + "'");
      VIdx s = vertex_index(d.src), t = vertex_index(d.dst);
      if (s < 0) throw std::invalid_argument("edge '" + d.name + "': unknown src '" + d.src + "'");
      if (t < 0) throw std::invalid_argument("edge '" + d.name + "': unknown dst '" + d.dst + "'");
      edges_.push_back(Edge{d.name, s, t});
    }
    if (basepoint_name) {
      VIdx b = vertex_index(*basepoint_name);
      if (b < 0) throw std::invalid_argument("unknown basepoint '" + *basepoint_name + "'");
      basepoint_ = b;
    }
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<VIdx> basepoint() const { return basepoint_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int dim() const { return edges_.empty() ? 0 : 1; }

  VIdx vertex_index(std::string_view name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name) return -1;
    return static_cast<VIdx>(it - vertices_.begin());
  }

  EIdx edge_index(std::string_view name) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), name,
                               [](const Edge& e, std::string_view n) { return e.name < n; });
    if (it == edges_.end() || it->name != name) return -1;
    return static_cast<EIdx>(it - edges_.begin());
  }

  friend bool operator==(const StratifiedGraph&, const StratifiedGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::optional<VIdx> basepoint_;
};

using GraphPtr = std::shared_ptr<const StratifiedGraph>;

inline GraphPtr make_graph(std::vector<std::string> vertices, std::vector<EdgeDef> edges,
                           std::optional<std::string> basepoint = std::nullopt) {
  return std::make_shared<const StratifiedGraph>(std::move(vertices), std::move(edges),
                                                 std::move(basepoint));
}

inline bool graphs_equal(const GraphPtr& a, const GraphPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Standard spaces

inline GraphPtr space_point() { return make_graph({"pt"}, {}); }

inline GraphPtr space_points(int m) {
  if (m < 1) throw std::invalid_argument("points(m): m must be >= 1");
  std::vector<std::string> vs;
  for (int i = 1; i <= m; ++i) vs.push_back("p" + std::to_string(i));
  return make_graph(std::move(vs), {});
}

inline GraphPtr space_interval() { return make_graph({"a", "b"}, {{"x", "a", "b"}}); }

/// The interval [0,m] subdivided at the integers: vertices 0..m, edges ek: (k-1)->k.
inline GraphPtr space_chain(int m) {
  if (m < 1) throw std::invalid_argument("chain(m): m must be >= 1");
  std::vector<std::string> vs;
  std::vector<EdgeDef> es;
  for (int i = 0; i <= m; ++i) vs.push_back(std::to_string(i));
  for (int i = 1; i <= m; ++i)
    es.push_back({"e" + std::to_string(i), std::to_string(i - 1), std::to_string(i)});
  return make_graph(std::move(vs), std::move(es));
}

/// Circle stratified by one point and its complement: a single vertex with a loop.
inline GraphPtr space_circle() { return make_graph({"v"}, {{"e", "v", "v"}}, "v"); }

/// Wedge of m circles, all point strata identified.
inline GraphPtr space_wedge(int m) {
  if (m < 1) throw std::invalid_argument("wedge(m): m must be >= 1");
  std::vector<EdgeDef> es;
  for (int i = 1; i <= m; ++i) es.push_back({"e" + std::to_string(i), "v", "v"});
  return make_graph({"v"}, std::move(es), "v");
}

/// Parses "point", "interval", "circle", "points(m)", "chain(m)", "wedge(m)".
inline std::optional<GraphPtr> parse_standard_space(std::string_view kind) {
  if (kind == "point") return space_point();
  if (kind == "interval") return space_interval();
  if (kind == "circle") return space_circle();
  auto arg = [&](std::string_view prefix) -> std::optional<int> {
    if (kind.size() < prefix.size() + 3 || kind.substr(0, prefix.size()) != prefix) return {};
    if (kind[prefix.size()] != '(' || kind.back() != ')') return {};
    std::string num(kind.substr(prefix.size() + 1, kind.size() - prefix.size() - 2));
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c))) return {};
    if (num.empty()) return {};
    return std::stoi(num);
  };
  if (auto m = arg("points")) return space_points(*m);
  if (auto m = arg("chain")) return space_chain(*m);
  if (auto m = arg("wedge")) return space_wedge(*m);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subdivision

/// A subdivision of a graph: each base edge is replaced by a directed path in
/// the refined graph; carriers record the replacement.
struct Subdivision {
  GraphPtr base;
  GraphPtr refined;
  struct Carrier {
    std::vector<EIdx> edges;     // refined edges, in path order; size >= 1
    std::vector<VIdx> interior;  // refined interior vertices; size == edges.size() - 1
  };
  std::vector<Carrier> carriers;  // indexed by base edge
};

namespace detail {
// Picks `base` if unused, else base_2, base_3, ... deterministically.
inline std::string fresh_name(const std::set<std::string>& used, const std::string& base) {
  if (!used.count(base)) return base;
  for (int k = 2;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}
}  // namespace detail

/// Inserts `counts[edge]` interior vertices into each edge (0 allowed, missing
/// edges default to 0).
inline Subdivision subdivide(const GraphPtr& X, const std::map<std::string, int>& counts) {
  for (const auto& [name, c] : counts) {
    if (X->edge_index(name) < 0)
      throw std::invalid_argument("subdivide: unknown edge '" + name + "'");
    if (c < 0) throw std::invalid_argument("subdivide: negative count for '" + name + "'");
  }
  std::set<std::string> used(X->vertices().begin(), X->vertices().end());
  for (const auto& e : X->edges()) used.insert(e.name);

  std::vector<std::string> vs(X->vertices());
  std::vector<EdgeDef> es;
  // (base edge index) -> ordered names of its pieces / interior points
  std::vector<std::vector<std::string>> piece_names(X->edges().size());
  std::vector<std::vector<std::string>> interior_names(X->edges().size());
  for (EIdx ei = 0; ei < X->num_edges(); ++ei) {
    const Edge& e = X->edges()[ei];
    auto it = counts.find(e.name);
    int k = it == counts.end() ? 0 : it->second;
    if (k == 0) {
      piece_names[ei] = {e.name};
      es.push_back({e.name, X->vertices()[e.src], X->vertices()[e.dst]});
      continue;
    }
    std::vector<std::string> inner;
    for (int i = 1; i <= k; ++i) {
      std::string v = detail::fresh_name(used, e.name + "_s" + std::to_string(i));
      used.insert(v);
      inner.push_back(v);
      vs.push_back(v);
    }
    for (int i = 0; i <= k; ++i) {
      std::string p = detail::fresh_name(used, e.name + "_p" + std::to_string(i + 1));
      used.insert(p);
      std::string from = i == 0 ? X->vertices()[e.src] : inner[i - 1];
      std::string to = i == k ? X->vertices()[e.dst] : inner[i];
      es.push_back({p, from, to});
      piece_names[ei].push_back(p);
    }
    interior_names[ei] = std::move(inner);
  }
  std::optional<std::string> bp;
  if (X->basepoint()) bp = X->vertices()[*X->basepoint()];
  GraphPtr refined = make_graph(std::move(vs), std::move(es), bp);

  Subdivision s;
  s.base = X;
  s.refined = refined;
  s.carriers.resize(X->edges().size());
  for (EIdx ei = 0; ei < X->num_edges(); ++ei) {
    for (const auto& p : piece_names[ei]) s.carriers[ei].edges.push_back(refined->edge_index(p));
    for (const auto& v : interior_names[ei])
      s.carriers[ei].interior.push_back(refined->vertex_index(v));
  }
  return s;
}

/// Rebuilds the base space from carrier data alone (used to check that
/// subdividing is reversible up to isomorphism).
inline GraphPtr collapse_subdivision(const Subdivision& s) {
  // Vertices of the result: refined vertices that are not interior to a carrier.
  std::set<VIdx> interior;
  for (const auto& c : s.carriers)
    for (VIdx v : c.interior) interior.insert(v);
  std::vector<std::string> vs;
  for (VIdx v = 0; v < s.refined->num_vertices(); ++v)
    if (!interior.count(v)) vs.push_back(s.refined->vertices()[v]);
  std::vector<EdgeDef> es;
  for (const auto& c : s.carriers) {
    const Edge& first = s.refined->edges()[c.edges.front()];
    const Edge& last = s.refined->edges()[c.edges.back()];
    es.push_back({first.name, s.refined->vertices()[first.src], s.refined->vertices()[last.dst]});
  }
  return make_graph(std::move(vs), std::move(es));
}

// ---------------------------------------------------------------------------
// Isomorphism

/// A stratification-preserving isomorphism: bijections on vertices and edges
/// respecting endpoints up to per-edge orientation reversal. Basepoints are
/// ignored.
struct GraphIso {
  std::vector<VIdx> vmap;     // source vertex -> target vertex
  std::vector<EIdx> emap;     // source edge -> target edge
  std::vector<bool> flipped;  // true where the edge is matched against its reversal
};

/// Returns the lexicographically least isomorphism X -> Y, or nullopt.
inline std::optional<GraphIso> is_isomorphic(const StratifiedGraph& X, const StratifiedGraph& Y) {
  if (X.num_vertices() != Y.num_vertices() || X.num_edges() != Y.num_edges()) return std::nullopt;
  const int nv = X.num_vertices(), ne = X.num_edges();

  std::vector<VIdx> perm(nv);
  for (int i = 0; i < nv; ++i) perm[i] = i;
  do {
    // Match edges in order; try target edges ascending, unflipped first.
    std::vector<EIdx> emap(ne, -1);
    std::vector<bool> flip(ne, false);
    std::vector<bool> taken(ne, false);
    auto match = [&](auto&& self, int i) -> bool {
      if (i == ne) return true;
      const Edge& e = X.edges()[i];
      VIdx s = perm[e.src], t = perm[e.dst];
      for (EIdx j = 0; j < ne; ++j) {
        if (taken[j]) continue;
        const Edge& f = Y.edges()[j];
        for (int fl = 0; fl < 2; ++fl) {
          VIdx fs = fl ? f.dst : f.src, ft = fl ? f.src : f.dst;
          if (fs == s && ft == t) {
            taken[j] = true;
            emap[i] = j;
            flip[i] = fl;
            if (self(self, i + 1)) return true;
            taken[j] = false;
          }
          if (f.src == f.dst) break;  // loops: both orientations identical
        }
      }
      return false;
    };
    if (match(match, 0)) return GraphIso{perm, emap, flip};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline std::optional<GraphIso> is_isomorphic(const GraphPtr& X, const GraphPtr& Y) {
  return is_isomorphic(*X, *Y);
}

// ---------------------------------------------------------------------------
// Bounded generation

/// All stratified graphs with 1..max_vertices vertices and 0..max_edges edges,
/// one representative per isomorphism class, in a fixed canonical order.
inline std::vector<GraphPtr> all_spaces(int max_vertices, int max_edges) {
  if (max_vertices < 1 || max_edges < 0) throw std::invalid_argument("all_spaces: bad bounds");
  std::vector<GraphPtr> out;
  for (int nv = 1; nv <= max_vertices; ++nv) {
    // Undirected edge slots (i,j), i <= j, in lex order.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < nv; ++i)
      for (int j = i; j < nv; ++j) slots.emplace_back(i, j);
    const int ns = static_cast<int>(slots.size());

    for (int ne = 0; ne <= max_edges; ++ne) {
      // Multisets of slot indices of size ne, nondecreasing.
      std::vector<int> pick(ne, 0);
      auto canonical = [&](const std::vector<int>& m) {
        // m is the lex-least representative of its orbit under vertex perms.
        std::vector<int> vp(nv);
        for (int i = 0; i < nv; ++i) vp[i] = i;
        while (std::next_permutation(vp.begin(), vp.end())) {
          std::vector<int> img;
          img.reserve(m.size());
          for (int s : m) {
            int a = vp[slots[s].first], b = vp[slots[s].second];
            if (a > b) std::swap(a, b);
            img.push_back(static_cast<int>(
                std::lower_bound(slots.begin(), slots.end(), std::make_pair(a, b)) -
                slots.begin()));
          }
          std::sort(img.begin(), img.end());
          if (img < m) return false;
        }
        return true;
      };
      auto emit = [&](const std::vector<int>& m) {
        if (!canonical(m)) return;
        std::vector<std::string> vs;
        for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
        std::vector<EdgeDef> es;
        for (std::size_t k = 0; k < m.size(); ++k)
          es.push_back({"e" + std::to_string(k + 1), vs[slots[m[k]].first], vs[slots[m[k]].second]});
        out.push_back(make_graph(std::move(vs), std::move(es)));
      };
      if (ne == 0) {
        emit({});
        continue;
      }
      // Odometer over nondecreasing index tuples.
      while (true) {
        emit(pick);
        int i = ne - 1;
        while (i >= 0 && pick[i] == ns - 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < ne; ++j) pick[j] = pick[i];
      }
    }
  }
  return out;
}

}  // namespace stratcat
