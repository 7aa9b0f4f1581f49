#pragma once

// Fibre products of stratified maps, stratified by the pairwise fibre
// products of strata. Stratum pairs whose product would be 2-dimensional
// (two edges both collapsing to the same vertex) are expunged, so the result
// stays within dimension 1; it is not claimed to be a categorical limit.

#include "stratcat/morphism.hpp"

namespace stratcat {

struct FibreProduct {
  GraphPtr space;
  PMorphism proj_x, proj_y;
};

namespace detail {

/// Image stratum of a stratum under a stratified map: (is_edge, index).
struct StratImage {
  bool is_edge = false;
  int idx = -1;
  bool fwd = true;  // for an edge mapping onto an edge: orientation agreement
  friend bool operator==(const StratImage&, const StratImage&) = default;
};

inline StratImage vertex_image(const PMorphism& f, VIdx v) {
  return {false, f.vertex_map[v], true};
}

inline StratImage edge_image(const PMorphism& f, EIdx x) {
  const Word& w = f.edge_words[x];
  if (w.empty()) return {false, f.vertex_map[f.source->edges()[x].src], true};
  return {true, w.front().edge, w.front().fwd};
}

}  // namespace detail

inline FibreProduct fibre_product(const PMorphism& f, const PMorphism& g) {
  if (!is_stratified(f) || !is_stratified(g))
    throw std::invalid_argument("fibre_product: maps must be stratified");
  if (!graphs_equal(f.target, g.target))
    throw std::invalid_argument("fibre_product: maps must share a target");
  const StratifiedGraph& X = *f.source;
  const StratifiedGraph& Y = *g.source;

  // Vertices: pairs of vertices over a common vertex, in row-major order.
  std::vector<std::pair<VIdx, VIdx>> vpairs;
  std::map<std::pair<VIdx, VIdx>, int> vindex;
  for (VIdx a = 0; a < X.num_vertices(); ++a)
    for (VIdx b = 0; b < Y.num_vertices(); ++b)
      if (f.vertex_map[a] == g.vertex_map[b]) {
        vindex[{a, b}] = static_cast<int>(vpairs.size());
        vpairs.emplace_back(a, b);
      }

  // Edges: vertex x collapsed-edge, collapsed-edge x vertex, edge x edge over
  // a common target edge. Each contributes one 1-stratum; the endpoints are
  // vertex pairs already collected above.
  struct FpEdge {
    std::pair<VIdx, VIdx> from, to;
    Word wx, wy;  // projection words (length <= 1)
    std::string label;
  };
  std::vector<FpEdge> fpe;

  for (VIdx a = 0; a < X.num_vertices(); ++a)
    for (EIdx y = 0; y < Y.num_edges(); ++y) {
      if (!g.edge_words[y].empty()) continue;  // only collapsed edges pair with a vertex
      const Edge& ey = Y.edges()[y];
      if (f.vertex_map[a] != g.vertex_map[ey.src]) continue;
      fpe.push_back({{a, ey.src}, {a, ey.dst}, {}, {Letter{y, true}},
                     X.vertices()[a] + "__" + ey.name});
    }
  for (EIdx x = 0; x < X.num_edges(); ++x) {
    if (!f.edge_words[x].empty()) continue;
    const Edge& ex = X.edges()[x];
    for (VIdx b = 0; b < Y.num_vertices(); ++b) {
      if (f.vertex_map[ex.src] != g.vertex_map[b]) continue;
      fpe.push_back({{ex.src, b}, {ex.dst, b}, {Letter{x, true}}, {},
                     ex.name + "__" + Y.vertices()[b]});
    }
  }
  for (EIdx x = 0; x < X.num_edges(); ++x) {
    if (f.edge_words[x].empty()) continue;
    const Letter lx = f.edge_words[x].front();
    for (EIdx y = 0; y < Y.num_edges(); ++y) {
      if (g.edge_words[y].empty()) continue;
      const Letter ly = g.edge_words[y].front();
      if (lx.edge != ly.edge) continue;
      const Edge& ex = X.edges()[x];
      const Edge& ey = Y.edges()[y];
      // Endpoint of x sitting over src/dst of the common target edge.
      VIdx x_at_src = lx.fwd ? ex.src : ex.dst, x_at_dst = lx.fwd ? ex.dst : ex.src;
      VIdx y_at_src = ly.fwd ? ey.src : ey.dst, y_at_dst = ly.fwd ? ey.dst : ey.src;
      fpe.push_back({{x_at_src, y_at_src},
                     {x_at_dst, y_at_dst},
                     {Letter{x, lx.fwd}},
                     {Letter{y, ly.fwd}},
                     ex.name + "__" + ey.name});
    }
  }

  // Build the graph with deterministic, collision-free names.
  std::vector<std::string> vnames(vpairs.size());
  {
    std::set<std::string> used;
    for (std::size_t i = 0; i < vpairs.size(); ++i) {
      vnames[i] = detail::fresh_name(
          used, X.vertices()[vpairs[i].first] + "__" + Y.vertices()[vpairs[i].second]);
      used.insert(vnames[i]);
    }
  }
  std::vector<EdgeDef> edefs;
  std::vector<std::string> enames(fpe.size());
  {
    std::set<std::string> used;
    for (std::size_t i = 0; i < fpe.size(); ++i) {
      enames[i] = detail::fresh_name(used, fpe[i].label);
      used.insert(enames[i]);
      edefs.push_back({enames[i], vnames[vindex.at(fpe[i].from)], vnames[vindex.at(fpe[i].to)]});
    }
  }
  GraphPtr P = make_graph(vnames, edefs);

  // Assemble projections (note: make_graph re-sorted strata by name).
  std::vector<VIdx> pvx(P->num_vertices()), pvy(P->num_vertices());
  for (std::size_t i = 0; i < vpairs.size(); ++i) {
    VIdx pv = P->vertex_index(vnames[i]);
    pvx[pv] = vpairs[i].first;
    pvy[pv] = vpairs[i].second;
  }
  std::vector<Word> pwx(P->num_edges()), pwy(P->num_edges());
  for (std::size_t i = 0; i < fpe.size(); ++i) {
    EIdx pe = P->edge_index(enames[i]);
    pwx[pe] = fpe[i].wx;
    pwy[pe] = fpe[i].wy;
  }
  FibreProduct out;
  out.space = P;
  out.proj_x = make_pmorphism(P, f.source, std::move(pvx), std::move(pwx));
  out.proj_y = make_pmorphism(P, g.source, std::move(pvy), std::move(pwy));
  return out;
}

}  // namespace stratcat
