#pragma once

// Brute-force reference implementations used only by the tests.

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "gpwh/word_engine.hpp"

namespace oracle {

using gpwh::GraphProduct;
using gpwh::Letter;
using Word = std::vector<Letter>;

/// Every word reachable from `w` by deleting identity letters, merging two
/// neighbouring letters of one vertex, or swapping neighbouring commuting
/// letters. The result of `reduce` is the lex-least of the shortest ones.
inline Word rewrite_normal_form(const GraphProduct& ctx, const Word& w) {
  std::set<Word> seen{w};
  std::queue<Word> todo;
  todo.push(w);
  Word best = w;
  while (!todo.empty()) {
    const Word cur = todo.front();
    todo.pop();
    if (cur.size() < best.size() || (cur.size() == best.size() && cur < best)) best = cur;
    auto visit = [&](Word next) {
      if (seen.insert(next).second) todo.push(std::move(next));
    };
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].element == 0) {
        Word next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        visit(std::move(next));
      }
      if (i + 1 == cur.size()) continue;
      const Letter a = cur[i], b = cur[i + 1];
      if (a.vertex == b.vertex) {
        Word next = cur;
        next[i] = {a.vertex, ctx.group(a.vertex).multiply(a.element, b.element)};
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i + 1));
        visit(std::move(next));
      } else if (ctx.graph().adjacent(a.vertex, b.vertex)) {
        Word next = cur;
        std::swap(next[i], next[i + 1]);
        visit(std::move(next));
      }
    }
  }
  return best;
}

/// All words of exactly `length` over every letter (identity included).
inline std::vector<Word> all_words(const GraphProduct& ctx, std::size_t length) {
  std::vector<Letter> letters;
  for (gpwh::Vertex v = 0; v < ctx.vertex_count(); ++v) {
    for (gpwh::Element g = 0; g < ctx.group(v).order(); ++g) letters.push_back({v, g});
  }
  std::vector<Word> out{{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (const Letter& l : letters) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Ball by breadth-first search in the Cayley graph on non-identity
/// letters, with elements identified by the rewriting normal form.
inline std::vector<Word> cayley_ball(const GraphProduct& ctx, std::size_t radius) {
  std::set<Word> seen{Word{}};
  std::vector<Word> layer{Word{}};
  std::vector<Word> out{Word{}};
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (const Letter& l : ctx.alphabet()) {
        Word x = w;
        x.push_back(l);
        x = rewrite_normal_form(ctx, x);
        if (seen.insert(x).second) next.push_back(x);
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Positions (of the canonical word) that some reduced permutation puts in
/// its last d places. The k-th copy of a letter maps to the k-th copy.
inline std::vector<std::size_t> d_tail_by_permutation(const GraphProduct& ctx, const Word& w,
                                                      std::size_t d) {
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::size_t> tail;
  do {
    Word candidate;
    for (std::size_t p : perm) candidate.push_back(w[p]);
    if (rewrite_normal_form(ctx, candidate) != w) continue;
    // Copies of one letter keep their relative order in a shuffle.
    bool order_ok = true;
    for (std::size_t i = 0; i < perm.size() && order_ok; ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) {
        if (w[perm[i]] == w[perm[j]] && perm[i] > perm[j]) order_ok = false;
      }
    }
    if (!order_ok) continue;
    const std::size_t start = w.size() > d ? w.size() - d : 0;
    for (std::size_t i = start; i < perm.size(); ++i) tail.insert(perm[i]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {tail.begin(), tail.end()};
}

/// Explicit symmetric Fock tensors: sum_k <a^{⊗k}, b^{⊗k}> 2^k / k! built
/// from Kronecker products, times e^{-|a|^2-|b|^2}.
inline double fock_expo_inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                              unsigned order) {
  Eigen::VectorXd ta = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd tb = Eigen::VectorXd::Ones(1);
  double sum = 1.0;
  double scale = 1.0;
  for (unsigned k = 1; k <= order; ++k) {
    Eigen::VectorXd na(ta.size() * a.size()), nb(tb.size() * b.size());
    for (Eigen::Index i = 0; i < ta.size(); ++i) {
      na.segment(i * a.size(), a.size()) = ta(i) * a;
      nb.segment(i * b.size(), b.size()) = tb(i) * b;
    }
    ta = std::move(na);
    tb = std::move(nb);
    scale *= 2.0 / k;
    sum += scale * ta.dot(tb);
  }
  return std::exp(-a.squaredNorm() - b.squaredNorm()) * sum;
}

}  // namespace oracle
