#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "gpwh/finite_group.hpp"
#include "gpwh/vertex_data.hpp"

namespace gpwh {

using Vertex = std::size_t;

/// Finite simplicial graph: no loops, no multiple edges.
class SimpleGraph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  /// Throws StructuralError on loops, repeated edges or out-of-range ids.
  SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return n_; }
  bool adjacent(Vertex v, Vertex w) const { return adj_.at(v * n_ + w); }
  /// Edges as (smaller, larger) pairs in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::size_t n_;
  std::vector<bool> adj_;
};

/// {v} together with its neighbours, sorted. Throws std::out_of_range.
std::vector<Vertex> star(const SimpleGraph& graph, Vertex v);

/// Size of the largest complete subgraph (exhaustive; graphs are tiny).
std::size_t max_clique_size(const SimpleGraph& graph);

/// One syllable g_v of a graph-product word. Ordering is (vertex, element).
struct Letter {
  Vertex vertex = 0;
  Element element = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class GraphProduct;

/// Canonical reduced form: the lexicographically least member of the
/// shuffle class. Only GraphProduct-aware functions construct these.
class ReducedWord {
 public:
  ReducedWord() = default;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::uint64_t context_id() const noexcept { return context_id_; }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  friend class GraphProduct;
  ReducedWord(std::vector<Letter> letters, std::uint64_t ctx)
      : letters_(std::move(letters)), context_id_(ctx) {}

  std::vector<Letter> letters_;
  std::uint64_t context_id_ = 0;
};

/// Graph plus one weak-Haagerup datum per vertex.
class GraphProduct {
 public:
  /// Throws StructuralError if the counts disagree or a datum fails
  /// validate_vertex_data at `tol`.
  GraphProduct(SimpleGraph graph, std::vector<WeakHaagerupVertexData> vertex_data,
               double tol = 1e-9);

  const SimpleGraph& graph() const noexcept { return graph_; }
  const WeakHaagerupVertexData& data(Vertex v) const { return data_.at(v); }
  const std::vector<WeakHaagerupVertexData>& vertex_data() const noexcept { return data_; }
  const FiniteGroup& group(Vertex v) const { return data_.at(v).group(); }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::uint64_t id() const noexcept { return id_; }

  /// Letters of distinct adjacent vertices commute.
  bool commute(const Letter& a, const Letter& b) const {
    return graph_.adjacent(a.vertex, b.vertex);
  }

  /// Every non-identity letter, ordered.
  std::vector<Letter> alphabet() const;

  /// Shorthand for reduce(*this, letters).
  ReducedWord word(std::initializer_list<Letter> letters) const;

  /// Wraps letters already known to be canonical. Internal use.
  ReducedWord adopt(std::vector<Letter> canonical_letters) const {
    return ReducedWord(std::move(canonical_letters), id_);
  }

 private:
  SimpleGraph graph_;
  std::vector<WeakHaagerupVertexData> data_;
  std::uint64_t id_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Reduced canonical form. Identity letters are dropped; same-vertex letters
/// separated only by commuting letters are merged. Throws std::out_of_range
/// for letters outside the context.
ReducedWord reduce(const GraphProduct& ctx, std::span<const Letter> word);

/// Lexicographically least shuffle of a word that is already reduced.
std::vector<Letter> canonical_order(const GraphProduct& ctx, std::span<const Letter> reduced);

/// Throws std::invalid_argument when the words come from another context.
ReducedWord multiply(const GraphProduct& ctx, const ReducedWord& a, const ReducedWord& b);
ReducedWord inverse(const GraphProduct& ctx, const ReducedWord& a);
inline std::size_t reduced_length(const ReducedWord& a) { return a.size(); }
bool equal(const ReducedWord& a, const ReducedWord& b);

/// |b^-1 a|_r.
std::size_t reduced_distance(const GraphProduct& ctx, const ReducedWord& a,
                             const ReducedWord& b);

/// Every ordering of the letters of `w` reachable by shuffles, as
/// permutations of positions in the canonical word. Throws EnumerationError
/// past `cap` states.
std::vector<std::vector<std::size_t>> representative_orders(
    const GraphProduct& ctx, const ReducedWord& w, std::size_t cap = kDefaultEnumerationCap);

/// The shuffle class of `w` as letter sequences (sorted).
std::vector<std::vector<Letter>> reduced_representatives(
    const GraphProduct& ctx, const ReducedWord& w, std::size_t cap = kDefaultEnumerationCap);

/// Positions (in the canonical word) of letters that some representative
/// places among its last min(d, |w|) letters. Sorted.
std::vector<std::size_t> d_tail_occurrences(const GraphProduct& ctx, const ReducedWord& w,
                                            std::size_t d,
                                            std::size_t cap = kDefaultEnumerationCap);

/// Minimal-length canonical element of g·G(st(v)).
ReducedWord coset_representative(const GraphProduct& ctx, const ReducedWord& g, Vertex v);

/// All elements of reduced length <= radius, sorted by (length, letters).
std::vector<ReducedWord> ball(const GraphProduct& ctx, std::size_t radius,
                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace gpwh
