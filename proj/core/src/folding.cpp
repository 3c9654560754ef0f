#include "pi1/folding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pi1 {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);  // keep the smaller id (preserves basepoint 0)
    parent[b] = a;
    return a;
  }
};

}  // namespace

SubgroupGraph SubgroupGraph::build(const AlphabetRef& alphabet,
                                   std::span<const Word> generators) {
  if (!alphabet) raise(Errc::invalid_kind, "SubgroupGraph needs an alphabet");
  const std::size_t nsym = alphabet->size();

  // Wedge of loops at the basepoint.
  struct Edge {
    std::size_t from, to, label;
  };
  std::vector<Edge> edges;
  std::size_t nverts = 1;
  for (const Word& w : generators) {
    if (!same_alphabet(w.alphabet(), alphabet))
      raise(Errc::alphabet_mismatch, "generator over a different alphabet");
    std::size_t cur = 0;
    auto ls = w.letters();
    for (std::size_t idx = 0; idx < ls.size(); ++idx) {
      std::size_t nxt = idx + 1 == ls.size() ? 0 : nverts++;
      std::size_t label = *alphabet->index_of(ls[idx].sym);
      if (ls[idx].sign > 0)
        edges.push_back({cur, nxt, label});
      else
        edges.push_back({nxt, cur, label});
      cur = nxt;
    }
  }

  // Fold: merge targets of equal-labeled parallel edges until deterministic.
  UnionFind uf(nverts);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<std::size_t>> outm(nverts, std::vector<std::size_t>(nsym, npos));
    std::vector<std::vector<std::size_t>> inm(nverts, std::vector<std::size_t>(nsym, npos));
    for (const Edge& e : edges) {
      std::size_t a = uf.find(e.from), b = uf.find(e.to);
      if (outm[a][e.label] != npos && uf.find(outm[a][e.label]) != b) {
        uf.unite(outm[a][e.label], b);
        changed = true;
        break;
      }
      outm[a][e.label] = b;
      if (inm[b][e.label] != npos && uf.find(inm[b][e.label]) != a) {
        uf.unite(inm[b][e.label], a);
        changed = true;
        break;
      }
      inm[b][e.label] = a;
    }
  }

  // Collapse to representatives and prune hanging trees (basepoint stays).
  std::vector<std::size_t> repr(nverts, npos);
  std::vector<std::size_t> live;
  for (std::size_t v = 0; v < nverts; ++v) {
    std::size_t r = uf.find(v);
    if (repr[r] == npos) {
      repr[r] = live.size();
      live.push_back(r);
    }
  }
  std::size_t n = live.size();
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(nsym, npos));
  std::vector<std::vector<std::size_t>> in(n, std::vector<std::size_t>(nsym, npos));
  for (const Edge& e : edges) {
    std::size_t a = repr[uf.find(e.from)], b = repr[uf.find(e.to)];
    out[a][e.label] = b;
    in[b][e.label] = a;
  }

  std::size_t base = repr[uf.find(0)];
  std::vector<bool> removed(n, false);
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (removed[v] || v == base) continue;
      std::size_t degree = 0;
      for (std::size_t s = 0; s < nsym; ++s) {
        if (out[v][s] != npos && !removed[out[v][s]]) ++degree;
        if (in[v][s] != npos && !removed[in[v][s]]) ++degree;
      }
      if (degree <= 1) {
        removed[v] = true;
        for (std::size_t s = 0; s < nsym; ++s) {
          if (out[v][s] != npos) in[out[v][s]][s] = (in[out[v][s]][s] == v) ? npos : in[out[v][s]][s];
          if (in[v][s] != npos) out[in[v][s]][s] = (out[in[v][s]][s] == v) ? npos : out[in[v][s]][s];
          out[v][s] = in[v][s] = npos;
        }
        pruned = true;
      }
    }
  }

  // Renumber in BFS order from the basepoint for deterministic queries.
  std::vector<std::size_t> order(n, npos);
  std::vector<std::size_t> bfs;
  order[base] = 0;
  bfs.push_back(base);
  for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
    std::size_t v = bfs[qi];
    for (std::size_t s = 0; s < nsym; ++s) {
      for (std::size_t w : {out[v][s], in[v][s]}) {
        if (w != npos && !removed[w] && order[w] == npos) {
          order[w] = bfs.size();
          bfs.push_back(w);
        }
      }
    }
  }

  SubgroupGraph graph;
  graph.alphabet_ = alphabet;
  graph.out_.assign(bfs.size(), std::vector<std::size_t>(nsym, npos));
  graph.in_.assign(bfs.size(), std::vector<std::size_t>(nsym, npos));
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v] == npos) continue;
    for (std::size_t s = 0; s < nsym; ++s) {
      if (out[v][s] != npos && order[out[v][s]] != npos)
        graph.out_[order[v]][s] = order[out[v][s]];
      if (in[v][s] != npos && order[in[v][s]] != npos)
        graph.in_[order[v]][s] = order[in[v][s]];
    }
  }
  return graph;
}

SubgroupGraph SubgroupGraph::from_permutation_action(
    const AlphabetRef& alphabet, const std::vector<std::vector<std::size_t>>& perms) {
  if (!alphabet) raise(Errc::invalid_kind, "SubgroupGraph needs an alphabet");
  if (perms.size() != alphabet->size())
    raise(Errc::precondition_violated, "one permutation per alphabet symbol required");
  std::size_t n = perms.empty() ? 1 : perms[0].size();
  for (const auto& p : perms) {
    if (p.size() != n) raise(Errc::precondition_violated, "permutation degree mismatch");
    std::vector<bool> seen(n, false);
    for (std::size_t v : p) {
      if (v >= n || seen[v]) raise(Errc::precondition_violated, "not a permutation");
      seen[v] = true;
    }
  }
  // Restrict to the orbit of the basepoint; the cover corresponds to the
  // stabilizer of point 0, whose index is the orbit size.
  std::vector<std::size_t> order(n, npos);
  std::vector<std::size_t> bfs{0};
  order[0] = 0;
  for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
    std::size_t v = bfs[qi];
    for (const auto& p : perms) {
      std::size_t fwd = p[v];
      std::size_t bwd = static_cast<std::size_t>(
          std::find(p.begin(), p.end(), v) - p.begin());
      for (std::size_t w : {fwd, bwd}) {
        if (order[w] == npos) {
          order[w] = bfs.size();
          bfs.push_back(w);
        }
      }
    }
  }
  SubgroupGraph graph;
  graph.alphabet_ = alphabet;
  graph.out_.assign(bfs.size(), std::vector<std::size_t>(alphabet->size(), npos));
  graph.in_.assign(bfs.size(), std::vector<std::size_t>(alphabet->size(), npos));
  for (std::size_t s = 0; s < perms.size(); ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      if (order[v] == npos) continue;
      graph.out_[order[v]][s] = order[perms[s][v]];
      graph.in_[order[perms[s][v]]][s] = order[v];
    }
  }
  return graph;
}

bool SubgroupGraph::member(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) return false;
  std::size_t cur = 0;
  for (const auto& l : w.letters()) {
    std::size_t s = *alphabet_->index_of(l.sym);
    cur = l.sign > 0 ? out_[cur][s] : in_[cur][s];
    if (cur == npos) return false;
  }
  return cur == 0;
}

std::size_t SubgroupGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : out_)
    for (std::size_t t : row)
      if (t != npos) ++e;
  return e;
}

std::size_t SubgroupGraph::rank() const { return edge_count() - vertex_count() + 1; }

std::optional<std::size_t> SubgroupGraph::index() const {
  for (std::size_t v = 0; v < out_.size(); ++v) {
    for (std::size_t s = 0; s < alphabet_->size(); ++s) {
      if (out_[v][s] == npos || in_[v][s] == npos) return std::nullopt;
    }
  }
  return vertex_count();
}

std::vector<Word> SubgroupGraph::basis() const {
  const std::size_t nsym = alphabet_->size();
  const std::size_t n = vertex_count();
  // BFS spanning tree; path[v] is the reduced word labeling basepoint -> v.
  std::vector<std::optional<Word>> path(n);
  path[0] = Word(alphabet_);
  std::vector<std::size_t> bfs{0};
  std::vector<std::pair<std::size_t, std::size_t>> tree;  // (vertex, symbol) tree edges
  for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
    std::size_t v = bfs[qi];
    for (std::size_t s = 0; s < nsym; ++s) {
      std::size_t w = out_[v][s];
      if (w != npos && !path[w]) {
        path[w] = mul(*path[v], single(alphabet_, alphabet_->symbols()[s]));
        tree.emplace_back(v, s);
        bfs.push_back(w);
      }
      std::size_t p = in_[v][s];
      if (p != npos && !path[p]) {
        path[p] = mul(*path[v], single(alphabet_, alphabet_->symbols()[s], -1));
        tree.emplace_back(p, s);  // records (from, symbol) of the tree edge
        bfs.push_back(p);
      }
    }
  }
  auto is_tree_edge = [&](std::size_t v, std::size_t s) {
    return std::find(tree.begin(), tree.end(), std::make_pair(v, s)) != tree.end();
  };
  std::vector<Word> result;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < nsym; ++s) {
      std::size_t w = out_[v][s];
      if (w == npos || is_tree_edge(v, s)) continue;
      result.push_back(
          mul(mul(*path[v], single(alphabet_, alphabet_->symbols()[s])), inv(*path[w])));
    }
  }
  return result;
}

}  // namespace pi1
