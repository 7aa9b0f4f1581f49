#pragma once

// Homotopy classes of prestratified maps between stratified graphs.
//
// A class is represented on the nose by a vertex assignment plus, per source
// edge, a directed edge path ("word") in the target. Words are never reduced:
// e followed by e-reversed does not cancel, because a homotopy through
// prestratified maps rel vertices can neither create, destroy nor reorder the
// preimages of an interior point of a target edge.

#include <compare>
#include <stdexcept>

#include "stratcat/graph.hpp"

namespace stratcat {

/// One directed traversal of a target edge.
struct Letter {
  EIdx edge = -1;
  bool fwd = true;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word reverse_flip(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->edge, !it->fwd});
  return r;
}

struct PMorphism {
  GraphPtr source, target;
  std::vector<VIdx> vertex_map;        // per source vertex
  std::vector<Word> edge_words;        // per source edge, w.r.t. its stored orientation

  friend bool operator==(const PMorphism& a, const PMorphism& b) {
    return a.vertex_map == b.vertex_map && a.edge_words == b.edge_words &&
           graphs_equal(a.source, b.source) && graphs_equal(a.target, b.target);
  }
  // Data order only; callers compare morphisms with equal endpoints.
  friend bool operator<(const PMorphism& a, const PMorphism& b) {
    return std::tie(a.vertex_map, a.edge_words) < std::tie(b.vertex_map, b.edge_words);
  }
};

/// Follows `w` in `g` from `from`; returns the end vertex or -1 if not a path.
inline VIdx follow_word(const StratifiedGraph& g, VIdx from, const Word& w) {
  VIdx cur = from;
  for (const Letter& l : w) {
    if (l.edge < 0 || l.edge >= g.num_edges()) return -1;
    const Edge& e = g.edges()[l.edge];
    if (l.fwd) {
      if (e.src != cur) return -1;
      cur = e.dst;
    } else {
      if (e.dst != cur) return -1;
      cur = e.src;
    }
  }
  return cur;
}

inline bool is_valid(const PMorphism& f) {
  if (!f.source || !f.target) return false;
  if (static_cast<int>(f.vertex_map.size()) != f.source->num_vertices()) return false;
  if (static_cast<int>(f.edge_words.size()) != f.source->num_edges()) return false;
  for (VIdx v : f.vertex_map)
    if (v < 0 || v >= f.target->num_vertices()) return false;
  for (EIdx x = 0; x < f.source->num_edges(); ++x) {
    const Edge& e = f.source->edges()[x];
    VIdx end = follow_word(*f.target, f.vertex_map[e.src], f.edge_words[x]);
    if (end < 0 || end != f.vertex_map[e.dst]) return false;
  }
  return true;
}

inline PMorphism make_pmorphism(GraphPtr source, GraphPtr target, std::vector<VIdx> vertex_map,
                                std::vector<Word> edge_words) {
  PMorphism f{std::move(source), std::move(target), std::move(vertex_map), std::move(edge_words)};
  if (!is_valid(f)) throw std::invalid_argument("make_pmorphism: edge words are not paths");
  return f;
}

/// Convenience constructor using names; words given as a sequence of
/// (edge name, forward?) pairs.
inline PMorphism make_pmorphism_named(const GraphPtr& source, const GraphPtr& target,
                                      const std::map<std::string, std::string>& vmap,
                                      const std::map<std::string, std::vector<std::pair<std::string, bool>>>& words) {
  std::vector<VIdx> vm(source->num_vertices(), -1);
  for (VIdx v = 0; v < source->num_vertices(); ++v) {
    auto it = vmap.find(source->vertices()[v]);
    if (it == vmap.end())
      throw std::invalid_argument("vertex_map missing '" + source->vertices()[v] + "'");
    VIdx w = target->vertex_index(it->second);
    if (w < 0) throw std::invalid_argument("vertex_map: unknown target vertex '" + it->second + "'");
    vm[v] = w;
  }
  std::vector<Word> ws(source->num_edges());
  for (const auto& [ename, seq] : words) {
    EIdx x = source->edge_index(ename);
    if (x < 0) throw std::invalid_argument("edge_words: unknown source edge '" + ename + "'");
    for (const auto& [tname, fwd] : seq) {
      EIdx e = target->edge_index(tname);
      if (e < 0) throw std::invalid_argument("edge_words: unknown target edge '" + tname + "'");
      ws[x].push_back({e, fwd});
    }
  }
  return make_pmorphism(source, target, std::move(vm), std::move(ws));
}

inline PMorphism identity(const GraphPtr& X) {
  std::vector<VIdx> vm(X->num_vertices());
  for (VIdx v = 0; v < X->num_vertices(); ++v) vm[v] = v;
  std::vector<Word> ws(X->num_edges());
  for (EIdx x = 0; x < X->num_edges(); ++x) ws[x] = {Letter{x, true}};
  return PMorphism{X, X, std::move(vm), std::move(ws)};
}

/// g after f. Each letter of f is substituted by g's word for that edge,
/// reversed and direction-flipped where the letter runs backwards.
inline PMorphism compose(const PMorphism& g, const PMorphism& f) {
  if (!graphs_equal(f.target, g.source))
    throw std::invalid_argument("compose: target of f is not source of g");
  PMorphism h;
  h.source = f.source;
  h.target = g.target;
  h.vertex_map.resize(f.vertex_map.size());
  for (std::size_t v = 0; v < f.vertex_map.size(); ++v)
    h.vertex_map[v] = g.vertex_map[f.vertex_map[v]];
  h.edge_words.resize(f.edge_words.size());
  for (std::size_t x = 0; x < f.edge_words.size(); ++x) {
    Word& out = h.edge_words[x];
    for (const Letter& l : f.edge_words[x]) {
      const Word& w = g.edge_words[l.edge];
      if (l.fwd)
        out.insert(out.end(), w.begin(), w.end());
      else {
        Word r = reverse_flip(w);
        out.insert(out.end(), r.begin(), r.end());
      }
    }
  }
  return h;
}

/// A map is stratified when no edge needs subdividing: every edge either
/// collapses to a vertex or traverses a single target edge once.
inline bool is_stratified(const PMorphism& f) {
  for (const Word& w : f.edge_words)
    if (w.size() > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Orientation renormalization. Per-edge data is stored relative to the edge's
// reference orientation; flipping that orientation is a data transformation.

/// Same underlying map, with source edge `x` stored in the opposite orientation.
inline PMorphism flip_source_edge(const PMorphism& f, EIdx x) {
  const Edge& e = f.source->edges()[x];
  std::vector<EdgeDef> es;
  for (const Edge& d : f.source->edges()) {
    std::string s = f.source->vertices()[d.src], t = f.source->vertices()[d.dst];
    if (&d == &e) std::swap(s, t);
    es.push_back({d.name, s, t});
  }
  std::optional<std::string> bp;
  if (f.source->basepoint()) bp = f.source->vertices()[*f.source->basepoint()];
  PMorphism out = f;
  out.source = make_graph(f.source->vertices(), std::move(es), bp);
  out.edge_words[x] = reverse_flip(f.edge_words[x]);
  return out;
}

/// Same underlying map, with target edge `e` stored in the opposite orientation.
inline PMorphism flip_target_edge(const PMorphism& f, EIdx e) {
  const Edge& ed = f.target->edges()[e];
  std::vector<EdgeDef> es;
  for (const Edge& d : f.target->edges()) {
    std::string s = f.target->vertices()[d.src], t = f.target->vertices()[d.dst];
    if (&d == &ed) std::swap(s, t);
    es.push_back({d.name, s, t});
  }
  std::optional<std::string> bp;
  if (f.target->basepoint()) bp = f.target->vertices()[*f.target->basepoint()];
  PMorphism out = f;
  out.target = make_graph(f.target->vertices(), std::move(es), bp);
  for (Word& w : out.edge_words)
    for (Letter& l : w)
      if (l.edge == e) l.fwd = !l.fwd;
  return out;
}

// ---------------------------------------------------------------------------
// Bounded enumeration

namespace detail {
/// All directed edge paths from `from` to `to` of length <= max_len, in lex
/// order of their letter sequences (prefix-first).
inline std::vector<Word> paths_between(const StratifiedGraph& g, VIdx from, VIdx to, int max_len) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, VIdx at) -> void {
    if (at == to) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (EIdx e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edges()[e];
      if (ed.src == at) {
        cur.push_back({e, true});
        self(self, ed.dst);
        cur.pop_back();
      }
      if (ed.dst == at && ed.src != ed.dst) {
        cur.push_back({e, false});
        self(self, ed.src);
        cur.pop_back();
      }
      if (ed.src == ed.dst && ed.src == at) {  // loop reverse traversal
        cur.push_back({e, false});
        self(self, ed.src);
        cur.pop_back();
      }
    }
  };
  rec(rec, from);
  return out;
}
}  // namespace detail

/// All morphisms X -> Y whose every edge word has length <= max_word_len,
/// in canonical order.
inline std::vector<PMorphism> enumerate_homs(const GraphPtr& X, const GraphPtr& Y,
                                             int max_word_len) {
  if (max_word_len < 0) throw std::invalid_argument("enumerate_homs: negative bound");
  std::vector<PMorphism> out;
  const int nv = X->num_vertices(), ne = X->num_edges();
  std::vector<VIdx> vm(nv, 0);
  const int tv = Y->num_vertices();
  if (tv == 0) {
    if (nv == 0) out.push_back(PMorphism{X, Y, {}, std::vector<Word>(ne)});
    return out;  // no maps into the empty space from a nonempty one
  }
  while (true) {
    // Candidate words per edge under this vertex map.
    std::vector<std::vector<Word>> choices(ne);
    bool ok = true;
    for (EIdx x = 0; x < ne && ok; ++x) {
      const Edge& e = X->edges()[x];
      choices[x] = detail::paths_between(*Y, vm[e.src], vm[e.dst], max_word_len);
      if (choices[x].empty()) ok = false;
    }
    if (ok) {
      std::vector<std::size_t> pick(ne, 0);
      while (true) {
        PMorphism f;
        f.source = X;
        f.target = Y;
        f.vertex_map = vm;
        f.edge_words.resize(ne);
        for (EIdx x = 0; x < ne; ++x) f.edge_words[x] = choices[x][pick[x]];
        out.push_back(std::move(f));
        int i = ne - 1;
        while (i >= 0 && pick[i] + 1 == choices[i].size()) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < ne; ++j) pick[j] = 0;
      }
    }
    int i = nv - 1;
    while (i >= 0 && vm[i] == tv - 1) --i;
    if (i < 0) break;
    ++vm[i];
    for (int j = i + 1; j < nv; ++j) vm[j] = 0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standard morphisms

/// point -> X at vertex v (characteristic map of a 0-stratum).
inline PMorphism vertex_inclusion(const GraphPtr& X, VIdx v) {
  return PMorphism{space_point(), X, {v}, {}};
}

/// interval -> X traversing edge e once (characteristic map of a 1-stratum).
inline PMorphism edge_traversal(const GraphPtr& X, EIdx e) {
  const Edge& ed = X->edges()[e];
  return PMorphism{space_interval(), X, {ed.src, ed.dst}, {Word{Letter{e, true}}}};
}

inline PMorphism collapse_to_point(const GraphPtr& X) {
  return PMorphism{X, space_point(), std::vector<VIdx>(X->num_vertices(), 0),
                   std::vector<Word>(X->num_edges())};
}

/// The endpoint inclusions point -> interval.
inline PMorphism interval_start() { return vertex_inclusion(space_interval(), 0); }  // vertex a
inline PMorphism interval_end() { return vertex_inclusion(space_interval(), 1); }    // vertex b

/// interval -> interval reversal (t -> 1-t): swaps endpoints, word reversed.
inline PMorphism interval_reversal() {
  GraphPtr iv = space_interval();
  return PMorphism{iv, iv, {1, 0}, {Word{Letter{0, false}}}};
}

/// interval -> chain(2) doubling map (t -> 2t): traverses e1 then e2.
inline PMorphism interval_to_chain2() {
  GraphPtr iv = space_interval(), ch = space_chain(2);
  return PMorphism{iv, ch, {ch->vertex_index("0"), ch->vertex_index("2")},
                   {Word{Letter{ch->edge_index("e1"), true}, Letter{ch->edge_index("e2"), true}}}};
}

/// circle -> wedge(2) pinch, degree one onto each lobe, first lobe first.
inline PMorphism circle_pinch() {
  GraphPtr c = space_circle(), w = space_wedge(2);
  return PMorphism{c, w, {0},
                   {Word{Letter{w->edge_index("e1"), true}, Letter{w->edge_index("e2"), true}}}};
}

/// circle -> circle reflection: the loop traversed backwards.
inline PMorphism circle_reflection() {
  GraphPtr c = space_circle();
  return PMorphism{c, c, {0}, {Word{Letter{0, false}}}};
}

/// The canonical prestratified map base -> refined of a subdivision: the
/// identity on points, with each edge word the carrier path.
inline PMorphism subdivision_morphism(const Subdivision& s) {
  std::vector<VIdx> vm(s.base->num_vertices());
  for (VIdx v = 0; v < s.base->num_vertices(); ++v)
    vm[v] = s.refined->vertex_index(s.base->vertices()[v]);
  std::vector<Word> ws(s.base->num_edges());
  for (EIdx x = 0; x < s.base->num_edges(); ++x)
    for (EIdx p : s.carriers[x].edges) ws[x].push_back({p, true});
  return make_pmorphism(s.base, s.refined, std::move(vm), std::move(ws));
}

}  // namespace stratcat
