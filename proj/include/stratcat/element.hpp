#pragma once

// Presheaf elements: one canonical payload per mathematical element, tagged
// with the space it lives on. Equality is payload equality.

#include <variant>

#include "stratcat/morphism.hpp"

namespace stratcat {

/// Framed 0-dimensional tangle data: one sign word per edge, ordered along the
/// edge's stored orientation. '+' means the framing agrees with it.
struct TangleWords {
  std::vector<std::string> words;  // per edge index; chars '+'/'-'
  friend auto operator<=>(const TangleWords&, const TangleWords&) = default;
};

/// Signed crossings of the target's point stratum by a based transversal map.
/// Same payload shape as TangleWords; the distinct type records the distinct
/// semantics.
struct CrossingWords {
  std::vector<std::string> words;
  friend auto operator<=>(const CrossingWords&, const CrossingWords&) = default;
};

/// A labelling of a space by a dagger category: objects on vertices, morphism
/// names on edges (typed along each edge's stored orientation).
struct Labelling {
  std::vector<std::string> vertex_labels;  // per vertex index
  std::vector<std::string> edge_labels;    // per edge index
  friend auto operator<=>(const Labelling&, const Labelling&) = default;
};

struct Element;
using Tuple = std::vector<Element>;  // componentwise element of a product

struct Element {
  GraphPtr space;
  std::variant<PMorphism, TangleWords, CrossingWords, Labelling, Tuple> payload;

  friend bool operator==(const Element& a, const Element& b) { return a.payload == b.payload; }
  friend bool operator<(const Element& a, const Element& b);
};

namespace detail {
inline bool tuple_less(const Tuple& a, const Tuple& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Element& x, const Element& y) { return x < y; });
}
}  // namespace detail

inline bool operator<(const Element& a, const Element& b) {
  if (a.payload.index() != b.payload.index()) return a.payload.index() < b.payload.index();
  return std::visit(
      [&](const auto& pa) {
        using T = std::decay_t<decltype(pa)>;
        const auto& pb = std::get<T>(b.payload);
        if constexpr (std::is_same_v<T, Tuple>)
          return detail::tuple_less(pa, pb);
        else
          return pa < pb;
      },
      a.payload);
}

// ---------------------------------------------------------------------------
// Canonical textual keys (used for deterministic naming and reports).

inline std::string word_key(const StratifiedGraph& target, const Word& w) {
  if (w.empty()) return "_";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += target.edges()[w[i].edge].name;
    if (!w[i].fwd) s += '\'';
  }
  return s;
}

inline std::string element_key(const Element& el) {
  struct V {
    const Element& el;
    std::string operator()(const PMorphism& f) const {
      std::string s = "{";
      for (std::size_t v = 0; v < f.vertex_map.size(); ++v) {
        if (v) s += ',';
        s += f.source->vertices()[v] + ">" + f.target->vertices()[f.vertex_map[v]];
      }
      if (!f.edge_words.empty()) {
        s += ';';
        for (std::size_t x = 0; x < f.edge_words.size(); ++x) {
          if (x) s += ',';
          s += f.source->edges()[x].name + ">" + word_key(*f.target, f.edge_words[x]);
        }
      }
      return s + "}";
    }
    std::string signs(const std::vector<std::string>& words, char tag) const {
      std::string s{tag};
      s += '{';
      for (std::size_t x = 0; x < words.size(); ++x) {
        if (x) s += ',';
        s += el.space->edges()[x].name + "=" + words[x];
      }
      return s + "}";
    }
    std::string operator()(const TangleWords& t) const { return signs(t.words, 't'); }
    std::string operator()(const CrossingWords& c) const { return signs(c.words, 'c'); }
    std::string operator()(const Labelling& l) const {
      std::string s = "L{";
      for (std::size_t v = 0; v < l.vertex_labels.size(); ++v) {
        if (v) s += ',';
        s += el.space->vertices()[v] + "=" + l.vertex_labels[v];
      }
      if (!l.edge_labels.empty()) {
        s += ';';
        for (std::size_t x = 0; x < l.edge_labels.size(); ++x) {
          if (x) s += ',';
          s += el.space->edges()[x].name + "=" + l.edge_labels[x];
        }
      }
      return s + "}";
    }
    std::string operator()(const Tuple& t) const {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += element_key(t[i]);
      }
      return s + ")";
    }
  };
  return std::visit(V{el}, el.payload);
}

}  // namespace stratcat
