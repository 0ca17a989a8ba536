#include "gpwh/word_engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "gpwh/errors.hpp"

namespace gpwh {

namespace {

std::atomic<std::uint64_t> next_context_id{1};

std::string describe(std::span<const Letter> w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(w[i].vertex) + "," + std::to_string(w[i].element) + "]";
  }
  return out + "]";
}

void check_context(const GraphProduct& ctx, const ReducedWord& w) {
  if (w.context_id() != 0 && w.context_id() != ctx.id()) {
    throw std::invalid_argument("word " + describe(w.letters()) +
                                " belongs to a different graph product");
  }
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count), adj_(vertex_count * vertex_count, false) {
  for (const auto& [a, b] : edges) {
    if (a >= n_ || b >= n_) {
      throw StructuralError("vertex_range", "edge (" + std::to_string(a) + "," +
                                                std::to_string(b) + ") leaves [0," +
                                                std::to_string(n_) + ")");
    }
    if (a == b) throw StructuralError("no_loops", "loop at vertex " + std::to_string(a));
    if (adj_[a * n_ + b]) {
      throw StructuralError("no_multiple_edges", "edge (" + std::to_string(a) + "," +
                                                     std::to_string(b) + ") repeated");
    }
    adj_[a * n_ + b] = adj_[b * n_ + a] = true;
  }
}

std::vector<SimpleGraph::Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      if (adjacent(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Vertex> star(const SimpleGraph& graph, Vertex v) {
  if (v >= graph.vertex_count()) {
    throw std::out_of_range("star: vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Vertex> out;
  for (Vertex w = 0; w < graph.vertex_count(); ++w) {
    if (w == v || graph.adjacent(v, w)) out.push_back(w);
  }
  return out;
}

std::size_t max_clique_size(const SimpleGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return 0;
  if (n > 24) throw std::invalid_argument("max_clique_size: graph too large for exhaustive search");
  std::size_t best = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (Vertex a = 0; a < n && clique; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if ((mask >> b & 1u) && !graph.adjacent(a, b)) {
          clique = false;
          break;
        }
      }
    }
    if (clique) best = size;
  }
  return best;
}

GraphProduct::GraphProduct(SimpleGraph graph, std::vector<WeakHaagerupVertexData> vertex_data,
                           double tol)
    : graph_(std::move(graph)), data_(std::move(vertex_data)), id_(next_context_id++) {
  if (data_.size() != graph_.vertex_count()) {
    throw StructuralError("vertex_data_count",
                          std::to_string(data_.size()) + " vertex data for " +
                              std::to_string(graph_.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < data_.size(); ++v) {
    const ValidationReport report = validate_vertex_data(data_[v], tol);
    if (!report.ok()) {
      throw StructuralError("weak_haagerup_data", "vertex " + std::to_string(v) + ": " +
                                                      report.violations.front().message);
    }
  }
}

std::vector<Letter> GraphProduct::alphabet() const {
  std::vector<Letter> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Element g = 1; g < group(v).order(); ++g) out.push_back({v, g});
  }
  return out;
}

ReducedWord GraphProduct::word(std::initializer_list<Letter> letters) const {
  return reduce(*this, std::span<const Letter>(letters.begin(), letters.size()));
}

std::vector<Letter> canonical_order(const GraphProduct& ctx, std::span<const Letter> reduced) {
  std::vector<Letter> remaining(reduced.begin(), reduced.end());
  std::vector<Letter> out;
  out.reserve(remaining.size());
  while (!remaining.empty()) {
    std::size_t best = remaining.size();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      bool movable = true;
      for (std::size_t k = 0; k < i; ++k) {
        if (!ctx.commute(remaining[k], remaining[i])) {
          movable = false;
          break;
        }
      }
      if (movable && (best == remaining.size() || remaining[i] < remaining[best])) best = i;
    }
    out.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

ReducedWord reduce(const GraphProduct& ctx, std::span<const Letter> word) {
  std::vector<Letter> w;
  w.reserve(word.size());
  for (const Letter& l : word) {
    if (l.vertex >= ctx.vertex_count() || !ctx.group(l.vertex).contains(l.element)) {
      throw std::out_of_range("letter [" + std::to_string(l.vertex) + "," +
                              std::to_string(l.element) + "] outside the graph product");
    }
    if (l.element != FiniteGroup::identity) w.push_back(l);
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < w.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == w[i].vertex) {
          const FiniteGroup& g = ctx.group(w[i].vertex);
          w[i].element = g.multiply(w[i].element, w[j].element);
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          if (w[i].element == FiniteGroup::identity) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          }
          merged = true;
          break;
        }
        if (!ctx.commute(w[i], w[j])) break;
      }
    }
  }
  return ctx.adopt(canonical_order(ctx, w));
}

ReducedWord multiply(const GraphProduct& ctx, const ReducedWord& a, const ReducedWord& b) {
  check_context(ctx, a);
  check_context(ctx, b);
  std::vector<Letter> w = a.letters();
  w.insert(w.end(), b.letters().begin(), b.letters().end());
  return reduce(ctx, w);
}

ReducedWord inverse(const GraphProduct& ctx, const ReducedWord& a) {
  check_context(ctx, a);
  std::vector<Letter> w;
  w.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    w.push_back({it->vertex, ctx.group(it->vertex).inverse(it->element)});
  }
  return reduce(ctx, w);
}

bool equal(const ReducedWord& a, const ReducedWord& b) {
  if (a.context_id() != 0 && b.context_id() != 0 && a.context_id() != b.context_id()) {
    throw std::invalid_argument("equal: words from different graph products");
  }
  return a.letters() == b.letters();
}

std::size_t reduced_distance(const GraphProduct& ctx, const ReducedWord& a,
                             const ReducedWord& b) {
  return multiply(ctx, inverse(ctx, b), a).size();
}

std::vector<std::vector<std::size_t>> representative_orders(const GraphProduct& ctx,
                                                            const ReducedWord& w,
                                                            std::size_t cap) {
  check_context(ctx, w);
  std::vector<std::size_t> start(w.size());
  for (std::size_t i = 0; i < start.size(); ++i) start[i] = i;
  std::set<std::vector<std::size_t>> seen{start};
  std::deque<std::vector<std::size_t>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::size_t> cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (!ctx.commute(w[cur[p]], w[cur[p + 1]])) continue;
      std::vector<std::size_t> next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw EnumerationError("shuffle class of " + describe(w.letters()) +
                                 " exceeds cap " + std::to_string(cap));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Letter>> reduced_representatives(const GraphProduct& ctx,
                                                         const ReducedWord& w,
                                                         std::size_t cap) {
  std::set<std::vector<Letter>> out;
  for (const auto& order : representative_orders(ctx, w, cap)) {
    std::vector<Letter> seq;
    seq.reserve(order.size());
    for (std::size_t p : order) seq.push_back(w[p]);
    out.insert(std::move(seq));
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> d_tail_occurrences(const GraphProduct& ctx, const ReducedWord& w,
                                            std::size_t d, std::size_t cap) {
  const std::size_t len = w.size();
  const std::size_t keep = std::min(d, len);
  if (keep == 0) return {};
  std::vector<bool> in_tail(len, false);
  if (keep == len) {
    in_tail.assign(len, true);
  } else {
    for (const auto& order : representative_orders(ctx, w, cap)) {
      for (std::size_t p = len - keep; p < len; ++p) in_tail[order[p]] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < len; ++i) {
    if (in_tail[i]) out.push_back(i);
  }
  return out;
}

ReducedWord coset_representative(const GraphProduct& ctx, const ReducedWord& g, Vertex v) {
  check_context(ctx, g);
  const std::vector<Vertex> st = star(ctx.graph(), v);
  auto in_star = [&](Vertex u) { return std::find(st.begin(), st.end(), u) != st.end(); };
  std::vector<Letter> w = g.letters();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (std::size_t i = w.size(); i-- > 0;) {
      if (!in_star(w[i].vertex)) continue;
      bool last = true;
      for (std::size_t k = i + 1; k < w.size(); ++k) {
        if (!ctx.commute(w[i], w[k])) {
          last = false;
          break;
        }
      }
      if (last) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        stripped = true;
        break;
      }
    }
  }
  return ctx.adopt(canonical_order(ctx, w));
}

std::vector<ReducedWord> ball(const GraphProduct& ctx, std::size_t radius, std::size_t cap) {
  const std::vector<Letter> alphabet = ctx.alphabet();
  std::set<ReducedWord> seen{ctx.adopt({})};
  std::vector<ReducedWord> layer{ctx.adopt({})};
  std::vector<ReducedWord> out{ctx.adopt({})};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::set<ReducedWord> next;
    for (const ReducedWord& w : layer) {
      for (const Letter& l : alphabet) {
        std::vector<Letter> ext = w.letters();
        ext.push_back(l);
        ReducedWord red = reduce(ctx, ext);
        if (red.size() == r && !seen.contains(red)) next.insert(std::move(red));
      }
    }
    for (const ReducedWord& w : next) seen.insert(w);
    if (seen.size() > cap) {
      throw EnumerationError("ball of radius " + std::to_string(radius) + " exceeds cap " +
                             std::to_string(cap));
    }
    layer.assign(next.begin(), next.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace gpwh
