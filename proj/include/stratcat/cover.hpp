#pragma once

// Covers for the Grothendieck topology on stratified graphs and stratified
// maps: a cover of X is a family of stratified maps containing, for each
// stratum of X, one that trivially covers it. Sieves are represented by such
// generating families; pairwise overlaps are cached fibre products.

#include "stratcat/fibre.hpp"

namespace stratcat {

/// Reference to a stratum of a graph.
struct StratumRef {
  bool is_edge = false;
  int idx = -1;
  friend auto operator<=>(const StratumRef&, const StratumRef&) = default;
};

/// f trivially covers S when the preimage of S is a single stratum mapped
/// bijectively onto it: for a vertex, one vertex and no collapsing edge; for
/// an edge, exactly one edge traversing it once.
inline bool trivially_covers(const PMorphism& f, StratumRef S) {
  if (!is_stratified(f)) throw std::invalid_argument("trivially_covers: map is not stratified");
  const StratifiedGraph& Y = *f.source;
  if (!S.is_edge) {
    int vertices_over = 0;
    for (VIdx v = 0; v < Y.num_vertices(); ++v)
      if (f.vertex_map[v] == S.idx) ++vertices_over;
    int collapsed_over = 0;
    for (EIdx x = 0; x < Y.num_edges(); ++x)
      if (f.edge_words[x].empty() && f.vertex_map[Y.edges()[x].src] == S.idx) ++collapsed_over;
    return vertices_over == 1 && collapsed_over == 0;
  }
  int edges_over = 0;
  for (EIdx x = 0; x < Y.num_edges(); ++x)
    if (!f.edge_words[x].empty() && f.edge_words[x].front().edge == S.idx) ++edges_over;
  return edges_over == 1;
}

struct CoverPiece {
  PMorphism map;  // stratified, into the base
  const GraphPtr& domain() const { return map.source; }
};

struct Cover {
  GraphPtr base;
  std::vector<CoverPiece> pieces;
  std::string descr;
  // overlaps[i][j-i] = Y_i x_base Y_j for j >= i (proj_x -> Y_i, proj_y -> Y_j)
  std::vector<std::vector<FibreProduct>> overlaps;

  /// For each base stratum: the first piece trivially covering it, together
  /// with the covering stratum in the piece domain (and, for edges, whether
  /// the traversal agrees with the base edge's orientation).
  struct Assignment {
    int piece = -1;
    int idx = -1;   // vertex or edge index in the piece domain
    bool fwd = true;
  };
  std::vector<Assignment> vertex_cov;  // per base vertex
  std::vector<Assignment> edge_cov;    // per base edge
};

inline Cover make_cover(GraphPtr base, std::vector<PMorphism> piece_maps, std::string descr) {
  Cover c;
  c.base = std::move(base);
  c.descr = std::move(descr);
  for (auto& f : piece_maps) {
    if (!graphs_equal(f.target, c.base))
      throw std::invalid_argument("make_cover: piece does not map into the base");
    if (!is_stratified(f)) throw std::invalid_argument("make_cover: piece is not stratified");
    c.pieces.push_back(CoverPiece{std::move(f)});
  }
  c.vertex_cov.assign(c.base->num_vertices(), {});
  c.edge_cov.assign(c.base->num_edges(), {});
  for (VIdx v = 0; v < c.base->num_vertices(); ++v) {
    for (std::size_t i = 0; i < c.pieces.size() && c.vertex_cov[v].piece < 0; ++i) {
      const PMorphism& f = c.pieces[i].map;
      if (!trivially_covers(f, {false, v})) continue;
      for (VIdx u = 0; u < f.source->num_vertices(); ++u)
        if (f.vertex_map[u] == v) {
          c.vertex_cov[v] = {static_cast<int>(i), u, true};
          break;
        }
    }
    if (c.vertex_cov[v].piece < 0)
      throw std::invalid_argument("make_cover: vertex '" + c.base->vertices()[v] +
                                  "' is not trivially covered");
  }
  for (EIdx e = 0; e < c.base->num_edges(); ++e) {
    for (std::size_t i = 0; i < c.pieces.size() && c.edge_cov[e].piece < 0; ++i) {
      const PMorphism& f = c.pieces[i].map;
      if (!trivially_covers(f, {true, e})) continue;
      for (EIdx b = 0; b < f.source->num_edges(); ++b)
        if (!f.edge_words[b].empty() && f.edge_words[b].front().edge == e) {
          c.edge_cov[e] = {static_cast<int>(i), b, f.edge_words[b].front().fwd};
          break;
        }
    }
    if (c.edge_cov[e].piece < 0)
      throw std::invalid_argument("make_cover: edge '" + c.base->edges()[e].name +
                                  "' is not trivially covered");
  }
  c.overlaps.resize(c.pieces.size());
  for (std::size_t i = 0; i < c.pieces.size(); ++i)
    for (std::size_t j = i; j < c.pieces.size(); ++j)
      c.overlaps[i].push_back(fibre_product(c.pieces[i].map, c.pieces[j].map));
  return c;
}

/// The canonical cover by closures of strata: one point per vertex, one
/// interval per edge.
inline Cover closure_cover(const GraphPtr& X) {
  std::vector<PMorphism> pieces;
  for (VIdx v = 0; v < X->num_vertices(); ++v) pieces.push_back(vertex_inclusion(X, v));
  for (EIdx e = 0; e < X->num_edges(); ++e) pieces.push_back(edge_traversal(X, e));
  return make_cover(X, std::move(pieces), "closure");
}

/// Pulls a cover back along a stratified map: pieces are the fibre products
/// X' x_X Y_i with their projections to X'.
inline Cover pullback_cover(const Cover& C, const PMorphism& g) {
  if (!is_stratified(g)) throw std::invalid_argument("pullback_cover: map is not stratified");
  if (!graphs_equal(g.target, C.base))
    throw std::invalid_argument("pullback_cover: map does not land in the base");
  std::vector<PMorphism> pieces;
  for (const CoverPiece& p : C.pieces) pieces.push_back(fibre_product(g, p.map).proj_x);
  return make_cover(g.source, std::move(pieces), "pullback(" + C.descr + ")");
}

}  // namespace stratcat
