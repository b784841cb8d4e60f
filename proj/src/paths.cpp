#include "grappa/paths.hpp"

#include <algorithm>
#include <functional>

namespace grappa {

int path_end(const ReductionGraph& g, const Path& p) {
  int at = p.start;
  for (int d : p.darts) at = g.dart_target(d);
  return at;
}

void check_path(const ReductionGraph& g, const Path& p) {
  int at = p.start;
  for (int d : p.darts) {
    if (g.dart_source(d) != at) throw GraphError("non-composable path word");
    at = g.dart_target(d);
  }
}

Path compose_paths(const ReductionGraph& g, const Path& first, const Path& then) {
  if (path_end(g, first) != then.start) throw GraphError("non-composable path word");
  Path p = first;
  p.darts.insert(p.darts.end(), then.darts.begin(), then.darts.end());
  return p;
}

Path reverse_path(const ReductionGraph& g, const Path& p) {
  Path r;
  r.start = path_end(g, p);
  for (auto it = p.darts.rbegin(); it != p.darts.rend(); ++it) {
    r.darts.push_back(g.dart_opposite(*it));
  }
  return r;
}

Rat dart_integral(const CycleSpace& cyc, int dart, int letter) {
  const ReductionGraph& g = *cyc.g;
  int e = g.dart_edge(dart);
  Rat v = g.edges[e].length * cyc.cycles[letter][e];
  return g.dart_forward(dart) ? v : -v;
}

Rat iterated_integral(const LieAlgebra& lie, const Path& p, const std::vector<int>& word) {
  const ReductionGraph& g = lie.graph();
  const CycleSpace& cyc = lie.cycle_space();
  check_path(g, p);
  int n = static_cast<int>(word.size());
  RatVec acc(n + 1, Rat(0));
  acc[0] = 1;
  std::vector<Rat> fact(n + 1, Rat(1));
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
  for (int d : p.darts) {
    RatVec next(n + 1, Rat(0));
    for (int k = 0; k <= n; ++k) {
      Rat prod = 1;
      for (int j = k; j >= 0; --j) {
        if (j < k) prod *= dart_integral(cyc, d, word[j]);
        if (acc[j] != 0) next[k] += acc[j] * prod / fact[k - j];
      }
    }
    acc = std::move(next);
  }
  return acc[n];
}

Rat iterated_integral(const LieAlgebra& lie, const PathCombo& c, const std::vector<int>& word) {
  Rat total = 0;
  for (const auto& [coeff, p] : c) total += coeff * iterated_integral(lie, p, word);
  return total;
}

int word_weight(const LieAlgebra& lie, const Word& w) {
  int s = 0;
  for (int g : w) s -= lie.generators()[g].w;
  return s;
}

TensorVec tv_concat_trunc(const LieAlgebra& lie, const TensorVec& x, const TensorVec& y,
                          int wmax) {
  TensorVec out;
  for (const auto& [wx, cx] : x) {
    int lx = word_weight(lie, wx);
    if (lx > wmax) continue;
    for (const auto& [wy, cy] : y) {
      if (lx + word_weight(lie, wy) > wmax) continue;
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(std::move(w), cx * cy);
      } else {
        it->second += cx * cy;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

TensorVec theta_dart(const LieAlgebra& lie, int dart, int wmax) {
  const ReductionGraph& g = lie.graph();
  int e = g.dart_edge(dart);
  Rat scale = g.dart_forward(dart) ? g.edges[e].length : -g.edges[e].length;
  TensorVec star = tv_scale(scale, lie.estar_tv(e));
  TensorVec out;
  out[Word{}] = 1;
  TensorVec power = out;
  Rat fact = 1;
  for (int k = 1; k <= wmax; ++k) {
    power = tv_concat_trunc(lie, power, star, wmax);
    if (power.empty()) break;
    fact *= k;
    tv_accumulate(out, power, Rat(1) / fact);
  }
  return out;
}

TensorVec theta_path(const LieAlgebra& lie, const Path& p, int wmax) {
  check_path(lie.graph(), p);
  TensorVec out;
  out[Word{}] = 1;
  for (int d : p.darts) out = tv_concat_trunc(lie, out, theta_dart(lie, d, wmax), wmax);
  return out;
}

TensorVec theta_combo(const LieAlgebra& lie, const PathCombo& c, int wmax) {
  TensorVec out;
  for (const auto& [coeff, p] : c) tv_accumulate(out, theta_path(lie, p, wmax), coeff);
  return out;
}

Path tree_path(const LieAlgebra& lie, int from, int to) {
  Path p;
  p.start = from;
  p.darts = lie.cycle_space().tree_path_darts(from, to);
  return p;
}

Path loop_at(const LieAlgebra& lie, int vertex, int i) {
  const ReductionGraph& g = lie.graph();
  const CycleSpace& cyc = lie.cycle_space();
  int e = cyc.nontree_edges[i];
  Path p = tree_path(lie, vertex, g.edges[e].src);
  p.darts.push_back(2 * e);
  auto back = cyc.tree_path_darts(g.edges[e].dst, vertex);
  p.darts.insert(p.darts.end(), back.begin(), back.end());
  return p;
}

std::vector<Path> spanning_paths(const LieAlgebra& lie, int u, int v, int n) {
  const ReductionGraph& g = lie.graph();
  int b1 = lie.cycle_space().dim();
  Path tail = tree_path(lie, u, v);
  std::vector<Path> out;
  for (const auto& tuple : h1_words_up_to(b1, n)) {
    Path p;
    p.start = u;
    for (int i : tuple) p = compose_paths(g, p, loop_at(lie, u, i));
    p = compose_paths(g, p, tail);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<int>> h1_words_up_to(int b1, int n) {
  std::vector<std::vector<int>> words;
  words.push_back({});
  size_t first_of_prev = 0;
  for (int len = 1; len <= n; ++len) {
    size_t end = words.size();
    for (size_t i = first_of_prev; i < end; ++i) {
      for (int l = 0; l < b1; ++l) {
        std::vector<int> w = words[i];
        w.push_back(l);
        words.push_back(std::move(w));
      }
    }
    first_of_prev = end;
  }
  return words;
}

DualityGram duality_gram(const LieAlgebra& lie, int u, int v, int n) {
  DualityGram d;
  d.words = h1_words_up_to(lie.cycle_space().dim(), n);
  d.paths = spanning_paths(lie, u, v, n);
  d.gram = Mat(static_cast<int>(d.words.size()), static_cast<int>(d.paths.size()));
  for (int c = 0; c < d.gram.cols; ++c) {
    for (int r = 0; r < d.gram.rows; ++r) {
      d.gram.at(r, c) = iterated_integral(lie, d.paths[c], d.words[r]);
    }
  }
  Mat copy = d.gram;
  d.rank = rank(copy);
  d.nonsingular = d.rank == d.gram.rows && d.gram.rows == d.gram.cols;
  return d;
}

PathCombo canonical_path(const LieAlgebra& lie, int u, int v, int n) {
  DualityGram d = duality_gram(lie, u, v, n);
  RatVec rhs(d.gram.rows, Rat(0));
  rhs[0] = 1;
  auto sol = solve(d.gram, rhs);
  if (!sol) throw GraphError("duality solve failed");
  PathCombo combo;
  for (size_t i = 0; i < d.paths.size(); ++i) {
    if ((*sol)[i] != 0) combo.push_back({(*sol)[i], d.paths[i]});
  }
  return combo;
}

namespace {

TensorVec ad_power(const LieAlgebra& lie, const TensorVec& x, const TensorVec& arg, int t) {
  TensorVec out = arg;
  for (int i = 0; i < t; ++i) out = tv_bracket(x, out);
  return out;
}

}  // namespace

EdgeLogs solve_edge_logs(const LieAlgebra& lie, int depth) {
  const ReductionGraph& g = lie.graph();
  const CycleSpace& cyc = lie.cycle_space();
  int ne = static_cast<int>(g.edges.size());
  int nv = static_cast<int>(g.vertices.size());
  int b1 = cyc.dim();
  EdgeLogs logs;
  logs.depth = depth;
  logs.by_edge.assign(ne, {});
  for (int e = 0; e < ne; ++e) {
    logs.by_edge[e].push_back(lie.reduce(lie.n_estar_tv(e), -1, -2));
  }
  for (int k = 2; k <= depth; ++k) {
    int dim = lie.dim(-k, -2);
    if (dim == 0) {
      for (int e = 0; e < ne; ++e) logs.by_edge[e].push_back(lie.zero(-k, -2));
      continue;
    }
    std::vector<Rat> fact(k + 2, Rat(1));
    for (int t = 1; t <= k + 1; ++t) fact[t] = fact[t - 1] * t;

    std::vector<TensorVec> rev_tail(ne), cyc_tail(ne);
    for (int e = 0; e < ne; ++e) {
      TensorVec star = lie.estar_tv(e);
      Rat l = g.edges[e].length;
      for (int j = 1; j < k; ++j) {
        int t = k - j;
        TensorVec adj = ad_power(lie, star, lie.rep(logs.by_edge[e][j - 1]), t);
        Rat lt = 1;
        for (int q = 0; q < t; ++q) lt *= -l;
        tv_accumulate(rev_tail[e], adj, -lt / fact[t]);
        tv_accumulate(cyc_tail[e], adj, lt / fact[t + 1]);
      }
    }

    int rows = (nv + b1) * dim;
    int cols = ne * dim;
    Mat a(rows, cols);
    RatVec rhs(rows, Rat(0));
    auto put_rhs = [&](int block, const TensorVec& tv) {
      LieElement x = lie.reduce(tv, -k, -2);
      for (int r = 0; r < dim; ++r) rhs[block * dim + r] += x.coords[r];
    };
    for (int v = 0; v < nv; ++v) {
      TensorVec r;
      if (k == 2) {
        tv_accumulate(r, lie.logdelta_vertex_tv(v), Rat(1));
        for (int h : g.out_halfs[v]) tv_accumulate(r, lie.logdelta_half_tv(h), Rat(1));
      }
      for (int d : g.out_darts[v]) {
        int e = g.dart_edge(d);
        if (g.dart_forward(d)) {
          for (int q = 0; q < dim; ++q) a.at(v * dim + q, e * dim + q) += 1;
        } else {
          for (int q = 0; q < dim; ++q) a.at(v * dim + q, e * dim + q) -= 1;
          tv_accumulate(r, rev_tail[e], Rat(-1));
        }
      }
      put_rhs(v, r);
    }
    for (int i = 0; i < b1; ++i) {
      TensorVec r;
      for (int e = 0; e < ne; ++e) {
        Rat mult = cyc.cycles[i][e];
        if (mult == 0) continue;
        Rat l = g.edges[e].length;
        for (int q = 0; q < dim; ++q) {
          a.at((nv + i) * dim + q, e * dim + q) += mult * l;
        }
        tv_accumulate(r, cyc_tail[e], -mult * l);
      }
      put_rhs(nv + i, r);
    }
    auto sol = solve(a, rhs);
    if (!sol) throw GraphError("edge trivialization solve failed");
    for (int e = 0; e < ne; ++e) {
      LieElement x = lie.zero(-k, -2);
      for (int q = 0; q < dim; ++q) x.coords[q] = (*sol)[e * dim + q];
      logs.by_edge[e].push_back(std::move(x));
    }
  }
  return logs;
}

TensorVec edge_log_tv(const LieAlgebra& lie, const EdgeLogs& logs, int dart, int wmax) {
  const ReductionGraph& g = lie.graph();
  int e = g.dart_edge(dart);
  TensorVec fwd;
  for (int k = 1; k <= logs.depth && k <= wmax; ++k) {
    tv_accumulate(fwd, lie.rep(logs.by_edge[e][k - 1]), Rat(1));
  }
  if (g.dart_forward(dart)) return fwd;
  TensorVec star = lie.estar_tv(e);
  Rat l = g.edges[e].length;
  TensorVec out;
  TensorVec cur = fwd;
  Rat lt = 1;
  Rat fact = 1;
  tv_accumulate(out, cur, Rat(-1));
  for (int t = 1; t <= wmax; ++t) {
    cur = tv_bracket(star, cur);
    lt *= -l;
    fact *= t;
    if (cur.empty()) break;
    tv_accumulate(out, cur, -lt / fact);
  }
  TensorVec trimmed;
  for (const auto& [w, c] : out) {
    if (word_weight(lie, w) <= wmax) trimmed[w] = c;
  }
  return trimmed;
}

TensorVec theta_n_path(const LieAlgebra& lie, const EdgeLogs& logs, const Path& p, int wmax) {
  const ReductionGraph& g = lie.graph();
  check_path(g, p);
  int n = static_cast<int>(p.darts.size());
  std::vector<TensorVec> prefix(n + 1), suffix(n + 1);
  prefix[0][Word{}] = 1;
  for (int i = 0; i < n; ++i) {
    prefix[i + 1] = tv_concat_trunc(lie, prefix[i], theta_dart(lie, p.darts[i], wmax), wmax);
  }
  suffix[n][Word{}] = 1;
  for (int i = n - 1; i >= 0; --i) {
    suffix[i] = tv_concat_trunc(lie, theta_dart(lie, p.darts[i], wmax), suffix[i + 1], wmax);
  }
  TensorVec total;
  for (int i = 0; i < n; ++i) {
    int e = g.dart_edge(p.darts[i]);
    TensorVec mid = edge_log_tv(lie, logs, p.darts[i], wmax);
    TensorVec term = tv_concat_trunc(lie, prefix[i], mid, wmax);
    term = tv_concat_trunc(lie, term, suffix[i], wmax);
    tv_accumulate(total, term, g.edges[e].length);
  }
  return total;
}

TensorVec theta_n_combo(const LieAlgebra& lie, const EdgeLogs& logs, const PathCombo& c,
                        int wmax) {
  TensorVec out;
  for (const auto& [coeff, p] : c) {
    tv_accumulate(out, theta_n_path(lie, logs, p, wmax), coeff);
  }
  return out;
}

const WordElim& TwoSidedIdeal::elim(int w, int m) const {
  auto key = std::make_pair(w, m);
  auto it = elims_.find(key);
  if (it != elims_.end()) return it->second;
  WordElim el;
  const auto& gens = lie_->generators();
  auto words_of = [&](int ww, int mm) {
    std::vector<Word> out;
    Word cur;
    std::function<void(int, int)> go = [&](int rw, int rm) {
      if (rm < 0 || rm > 2 * rw) return;
      if (rw == 0) {
        if (rm == 0) out.push_back(cur);
        return;
      }
      for (int gid = 0; gid < static_cast<int>(gens.size()); ++gid) {
        int gw = -gens[gid].w;
        if (gw > rw) continue;
        cur.push_back(gid);
        go(rw - gw, rm + gens[gid].m);
        cur.pop_back();
      }
    };
    go(ww, mm);
    std::sort(out.begin(), out.end());
    return out;
  };
  int ww = -w;
  int mm = -m;
  if (ww >= 2 && mm >= 2) {
    for (int wa = 0; wa <= ww - 2; ++wa) {
      for (int ma = 0; ma <= mm - 2; ++ma) {
        int wb = ww - 2 - wa;
        int mb = mm - 2 - ma;
        std::vector<Word> left = words_of(wa, ma);
        std::vector<Word> right = words_of(wb, mb);
        for (const Word& u : left) {
          for (const Word& v : right) {
            TensorVec t;
            for (const auto& [sw, sc] : lie_->sigma()) {
              Word full = u;
              full.insert(full.end(), sw.begin(), sw.end());
              full.insert(full.end(), v.begin(), v.end());
              t[full] = sc;
            }
            el.insert(std::move(t), {});
          }
        }
      }
    }
  }
  return elims_.emplace(key, std::move(el)).first->second;
}

TensorVec TwoSidedIdeal::reduce(const TensorVec& t) const {
  std::map<std::pair<int, int>, TensorVec> split;
  const auto& gens = lie_->generators();
  for (const auto& [w, c] : t) {
    int ww = 0;
    int mm = 0;
    for (int gid : w) {
      ww += gens[gid].w;
      mm += gens[gid].m;
    }
    split[{ww, mm}][w] = c;
  }
  TensorVec out;
  for (const auto& [deg, part] : split) {
    TensorVec res = elim(deg.first, deg.second).reduce(part);
    tv_accumulate(out, res, Rat(1));
  }
  return out;
}

bool invt_path_exists(const LieAlgebra& lie, const EdgeLogs& logs, int u, int v, int n) {
  std::vector<Path> paths = spanning_paths(lie, u, v, n);
  TwoSidedIdeal ideal(lie);
  std::vector<TensorVec> cols;
  std::map<Word, int> index;
  for (const Path& p : paths) {
    TensorVec reduced = ideal.reduce(theta_n_path(lie, logs, p, n));
    for (const auto& [w, c] : reduced) {
      if (!index.count(w)) index[w] = static_cast<int>(index.size());
    }
    cols.push_back(std::move(reduced));
  }
  int rows = static_cast<int>(index.size());
  int nc = static_cast<int>(cols.size());
  Mat a(rows + 1, nc);
  for (int c = 0; c < nc; ++c) {
    for (const auto& [w, val] : cols[c]) a.at(index[w], c) = val;
    a.at(rows, c) = 1;
  }
  Mat top(rows, nc);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < nc; ++c) top.at(r, c) = a.at(r, c);
  }
  return rank(a) > rank(top);
}

}  // namespace grappa
