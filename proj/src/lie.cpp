#include "grappa/lie.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace grappa {

void tv_accumulate(TensorVec& dst, const TensorVec& src, const Rat& coeff) {
  if (coeff == 0) return;
  for (const auto& [w, c] : src) {
    auto it = dst.find(w);
    if (it == dst.end()) {
      dst.emplace(w, coeff * c);
    } else {
      it->second += coeff * c;
      if (it->second == 0) dst.erase(it);
    }
  }
}

TensorVec tv_scale(const Rat& c, const TensorVec& v) {
  TensorVec out;
  tv_accumulate(out, v, c);
  return out;
}

TensorVec tv_concat(const TensorVec& x, const TensorVec& y) {
  TensorVec out;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) {
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

TensorVec tv_bracket(const TensorVec& x, const TensorVec& y) {
  TensorVec out = tv_concat(x, y);
  tv_accumulate(out, tv_concat(y, x), Rat(-1));
  return out;
}

TensorVec WordElim::reduce(TensorVec v, std::map<int, Rat>* tags_out) const {
  TensorVec residual;
  while (!v.empty()) {
    auto top = std::prev(v.end());
    Word pivot = top->first;
    Rat c = top->second;
    v.erase(top);
    auto it = rows.find(pivot);
    if (it == rows.end()) {
      residual.emplace(std::move(pivot), c);
      continue;
    }
    const Row& row = it->second;
    for (const auto& [w, rc] : row.vec) {
      if (w == pivot) continue;
      auto vt = v.find(w);
      if (vt == v.end()) {
        v.emplace(w, -c * rc);
      } else {
        vt->second -= c * rc;
        if (vt->second == 0) v.erase(vt);
      }
    }
    if (tags_out) {
      for (const auto& [k, tc] : row.tags) {
        Rat& slot = (*tags_out)[k];
        slot += c * tc;
        if (slot == 0) tags_out->erase(k);
      }
    }
  }
  return residual;
}

bool WordElim::insert(TensorVec v, std::map<int, Rat> tags) {
  std::map<int, Rat> used;
  TensorVec res = reduce(std::move(v), &used);
  if (res.empty()) return false;
  for (const auto& [k, c] : used) {
    Rat& slot = tags[k];
    slot -= c;
    if (slot == 0) tags.erase(k);
  }
  auto top = std::prev(res.end());
  Word pivot = top->first;
  Rat lead = top->second;
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    for (auto& [w, c] : res) c *= inv;
    for (auto& [k, c] : tags) c *= inv;
  }
  rows.emplace(std::move(pivot), Row{std::move(res), std::move(tags)});
  return true;
}

bool word_is_lyndon(const Word& w) {
  int n = static_cast<int>(w.size());
  if (n == 0) return false;
  for (int r = 1; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      int a = w[k];
      int b = w[(r + k) % n];
      if (a < b) break;
      if (a > b) return false;
      if (k == n - 1) return false;
    }
  }
  return true;
}

namespace {

int word_w(const Word& w, const std::vector<Generator>& gens) {
  int s = 0;
  for (int g : w) s += gens[g].w;
  return s;
}

int word_m(const Word& w, const std::vector<Generator>& gens) {
  int s = 0;
  for (int g : w) s += gens[g].m;
  return s;
}

}  // namespace

LieAlgebra::LieAlgebra(const ReductionGraph& g) : g_(g), cycles_(build_cycles(g_)) {
  init();
}

LieAlgebra::LieAlgebra(const ReductionGraph& g, std::vector<RatVec> cycle_basis)
    : g_(g), cycles_(build_cycles_with_basis(g_, std::move(cycle_basis))) {
  init();
}

void LieAlgebra::init() {
  const ReductionGraph& g = g_;
  int b1 = cycles_.dim();
  for (int i = 0; i < b1; ++i) {
    Generator gen;
    gen.kind = GenKind::estar;
    gen.a = i;
    gen.w = -1;
    gen.m = 0;
    gen.name = "estar:" + std::to_string(i + 1);
    estar_ids_.push_back(static_cast<int>(gens_.size()));
    gens_.push_back(std::move(gen));
  }
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    for (long i = 1; i <= g.vertices[v].genus; ++i) {
      Generator gb;
      gb.kind = GenKind::beta;
      gb.a = v;
      gb.b = static_cast<int>(i);
      gb.w = -1;
      gb.m = -1;
      gb.name = "beta:" + g.vertices[v].id + ":" + std::to_string(i);
      beta_ids_[{v, static_cast<int>(i)}] = static_cast<int>(gens_.size());
      gens_.push_back(std::move(gb));
      Generator gp;
      gp.kind = GenKind::betap;
      gp.a = v;
      gp.b = static_cast<int>(i);
      gp.w = -1;
      gp.m = -1;
      gp.name = "betap:" + g.vertices[v].id + ":" + std::to_string(i);
      betap_ids_[{v, static_cast<int>(i)}] = static_cast<int>(gens_.size());
      gens_.push_back(std::move(gp));
    }
  }
  for (int i = 0; i < b1; ++i) {
    Generator gen;
    gen.kind = GenKind::h1;
    gen.a = i;
    gen.w = -1;
    gen.m = -2;
    gen.name = "h1:" + std::to_string(i + 1);
    h1_ids_.push_back(static_cast<int>(gens_.size()));
    gens_.push_back(std::move(gen));
  }
  for (int h = 0; h < static_cast<int>(g.half_edges.size()); ++h) {
    Generator gen;
    gen.kind = GenKind::logdelta;
    gen.a = h;
    gen.w = -2;
    gen.m = -2;
    gen.name = "logdelta:" + g.half_edges[h].id;
    logdelta_ids_.push_back(static_cast<int>(gens_.size()));
    gens_.push_back(std::move(gen));
  }

  for (int i = 0; i < b1; ++i) {
    tv_accumulate(sigma_, tv_bracket(gen_tv(h1_ids_[i]), gen_tv(estar_ids_[i])), Rat(1));
  }
  for (const auto& [key, bid] : beta_ids_) {
    int pid = betap_ids_.at(key);
    tv_accumulate(sigma_, tv_bracket(gen_tv(pid), gen_tv(bid)), Rat(1));
  }
  for (int id : logdelta_ids_) {
    tv_accumulate(sigma_, gen_tv(id), Rat(1));
  }
}

TensorVec LieAlgebra::gen_tv(int gen) const {
  TensorVec t;
  t[{gen}] = 1;
  return t;
}

TensorVec LieAlgebra::estar_tv(int edge) const {
  RatVec c = cycles_.estar_coords(edge);
  TensorVec t;
  for (int i = 0; i < cycles_.dim(); ++i) {
    if (c[i] != 0) tv_accumulate(t, gen_tv(estar_ids_[i]), c[i]);
  }
  return t;
}

TensorVec LieAlgebra::h1_tv(const RatVec& basis_coords) const {
  TensorVec t;
  for (int i = 0; i < cycles_.dim(); ++i) {
    if (basis_coords[i] != 0) tv_accumulate(t, gen_tv(h1_ids_[i]), basis_coords[i]);
  }
  return t;
}

TensorVec LieAlgebra::n_estar_tv(int edge) const {
  return h1_tv(cycles_.n_of_estar(edge));
}

TensorVec LieAlgebra::logdelta_vertex_tv(int v) const {
  TensorVec t;
  for (long i = 1; i <= g_.vertices[v].genus; ++i) {
    int bid = beta_ids_.at({v, static_cast<int>(i)});
    int pid = betap_ids_.at({v, static_cast<int>(i)});
    tv_accumulate(t, tv_bracket(gen_tv(pid), gen_tv(bid)), Rat(1));
  }
  return t;
}

TensorVec LieAlgebra::logdelta_half_tv(int h) const {
  return gen_tv(logdelta_ids_[h]);
}

const std::vector<TensorVec>& LieAlgebra::ideal_piece(int w, int m) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto key = std::make_pair(w, m);
  auto it = ideal_.find(key);
  if (it != ideal_.end()) return it->second;

  std::vector<TensorVec> rows;
  if (w <= -2 && m <= -2 && m >= 2 * w) {
    WordElim elim;
    if (w == -2 && m == -2) elim.insert(sigma_, {});
    for (int gid = 0; gid < static_cast<int>(gens_.size()); ++gid) {
      const Generator& gen = gens_[gid];
      int sw = w - gen.w;
      int sm = m - gen.m;
      if (sw > -2) continue;
      const auto& sub = ideal_piece(sw, sm);
      TensorVec gt = gen_tv(gid);
      for (const TensorVec& r : sub) elim.insert(tv_bracket(gt, r), {});
    }
    for (const auto& [pivot, row] : elim.rows) rows.push_back(row.vec);
  }
  return ideal_.emplace(key, std::move(rows)).first->second;
}

const LiePiece& LieAlgebra::piece(int w, int m) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto key = std::make_pair(w, m);
  auto it = pieces_.find(key);
  if (it != pieces_.end()) return it->second;

  LiePiece p;
  p.w = w;
  p.m = m;
  if (w <= -1 && m <= 0 && m >= 2 * w) {
    std::vector<Word> words;
    Word cur;
    int want_w = -w;
    int want_m = -m;
    std::function<void(int, int)> go = [&](int rw, int rm) {
      if (rm < 0 || rm > 2 * rw) return;
      if (rw == 0) {
        if (rm == 0) words.push_back(cur);
        return;
      }
      for (int gid = 0; gid < static_cast<int>(gens_.size()); ++gid) {
        int gw = -gens_[gid].w;
        if (gw > rw) continue;
        cur.push_back(gid);
        go(rw - gw, rm + gens_[gid].m);
        cur.pop_back();
      }
    };
    go(want_w, want_m);
    std::sort(words.begin(), words.end());
    for (const Word& word : words) {
      if (word_is_lyndon(word)) p.lyndon.push_back(word);
    }
    std::function<const TensorVec&(const Word&)> bracketing =
        [&](const Word& word) -> const TensorVec& {
      auto bit = bracket_cache_.find(word);
      if (bit != bracket_cache_.end()) return bit->second;
      TensorVec t;
      if (word.size() == 1) {
        t = gen_tv(word[0]);
      } else {
        int n = static_cast<int>(word.size());
        int split = -1;
        for (int s = 1; s < n; ++s) {
          Word suffix(word.begin() + s, word.end());
          if (word_is_lyndon(suffix)) {
            split = s;
            break;
          }
        }
        Word left(word.begin(), word.begin() + split);
        Word right(word.begin() + split, word.end());
        t = tv_bracket(bracketing(left), bracketing(right));
      }
      return bracket_cache_.emplace(word, std::move(t)).first->second;
    };
    for (const Word& word : p.lyndon) p.lyndon_tv.push_back(bracketing(word));
    for (const TensorVec& row : ideal_piece(w, m)) p.elim.insert(row, {});
    for (int k = 0; k < static_cast<int>(p.lyndon.size()); ++k) {
      if (p.elim.insert(p.lyndon_tv[k], {{k, Rat(1)}})) p.basis.push_back(k);
    }
  }
  return pieces_.emplace(key, std::move(p)).first->second;
}

LieElement LieAlgebra::zero(int w, int m) const {
  LieElement x;
  x.w = w;
  x.m = m;
  x.coords.assign(piece(w, m).dim(), Rat(0));
  return x;
}

LieElement LieAlgebra::reduce(const TensorVec& tv, int w, int m) const {
  for (const auto& [word, c] : tv) {
    if (word_w(word, gens_) != w || word_m(word, gens_) != m) {
      throw GraphError("bidegree mismatch");
    }
  }
  const LiePiece& p = piece(w, m);
  std::map<int, Rat> tags;
  TensorVec res = p.elim.reduce(tv, &tags);
  if (!res.empty()) throw GraphError("not a lie element");
  LieElement x = zero(w, m);
  for (const auto& [k, c] : tags) {
    auto pos = std::lower_bound(p.basis.begin(), p.basis.end(), k);
    if (pos == p.basis.end() || *pos != k) throw GraphError("not a lie element");
    x.coords[pos - p.basis.begin()] = c;
  }
  return x;
}

TensorVec LieAlgebra::rep(const LieElement& x) const {
  const LiePiece& p = piece(x.w, x.m);
  TensorVec t;
  for (int k = 0; k < p.dim(); ++k) {
    if (x.coords[k] != 0) tv_accumulate(t, p.lyndon_tv[p.basis[k]], x.coords[k]);
  }
  return t;
}

LieElement LieAlgebra::add(const LieElement& x, const LieElement& y) const {
  if (x.w != y.w || x.m != y.m) throw GraphError("bidegree mismatch");
  LieElement z = x;
  for (size_t i = 0; i < z.coords.size(); ++i) z.coords[i] += y.coords[i];
  return z;
}

LieElement LieAlgebra::scale(const Rat& c, const LieElement& x) const {
  LieElement z = x;
  for (auto& v : z.coords) v *= c;
  return z;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  TensorVec t = tv_bracket(rep(x), rep(y));
  return reduce(t, x.w + y.w, x.m + y.m);
}

TensorVec LieAlgebra::apply_N_tv(const TensorVec& v) const {
  int b1 = cycles_.dim();
  TensorVec out;
  for (const auto& [word, c] : v) {
    for (size_t p = 0; p < word.size(); ++p) {
      const Generator& gen = gens_[word[p]];
      if (gen.kind != GenKind::estar) continue;
      for (int j = 0; j < b1; ++j) {
        Rat coeff = cycles_.gram_inv.at(j, gen.a) * c;
        if (coeff == 0) continue;
        Word nw = word;
        nw[p] = h1_ids_[j];
        auto it = out.find(nw);
        if (it == out.end()) {
          out.emplace(std::move(nw), coeff);
        } else {
          it->second += coeff;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

LieElement LieAlgebra::apply_N(const LieElement& x) const {
  return reduce(apply_N_tv(rep(x)), x.w, x.m - 2);
}

const std::vector<RatVec>& LieAlgebra::v_basis(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = v_bases_.find(n);
  if (it != v_bases_.end()) return it->second;

  const LiePiece& src = piece(-n, -2);
  int steps = n - 1;
  int tm = -2 - 2 * steps;
  const LiePiece& tgt = piece(-n, tm);
  Mat a(tgt.dim(), src.dim());
  for (int k = 0; k < src.dim(); ++k) {
    TensorVec t = src.lyndon_tv[src.basis[k]];
    for (int s = 0; s < steps; ++s) t = apply_N_tv(t);
    LieElement y = reduce(t, -n, tm);
    for (int r = 0; r < tgt.dim(); ++r) a.at(r, k) = y.coords[r];
  }
  std::vector<RatVec> ker = nullspace(a);
  Mat k(static_cast<int>(ker.size()), src.dim());
  for (int r = 0; r < k.rows; ++r) {
    for (int c = 0; c < k.cols; ++c) k.at(r, c) = ker[r][c];
  }
  rref(k);
  std::vector<RatVec> rows;
  for (int r = 0; r < k.rows; ++r) {
    RatVec row(src.dim());
    bool nonzero = false;
    for (int c = 0; c < k.cols; ++c) {
      row[c] = k.at(r, c);
      if (row[c] != 0) nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return v_bases_.emplace(n, std::move(rows)).first->second;
}

RatVec LieAlgebra::v_coords(const LieElement& x) const {
  const std::vector<RatVec>& basis = v_basis(-x.w);
  int d = static_cast<int>(x.coords.size());
  Mat a(d, static_cast<int>(basis.size()));
  for (int c = 0; c < a.cols; ++c) {
    for (int r = 0; r < d; ++r) a.at(r, c) = basis[c][r];
  }
  auto sol = solve(a, x.coords);
  if (!sol) throw GraphError("not N-invariant");
  return *sol;
}

LieAlgebra::WmReport LieAlgebra::wm_check(int n, int i) const {
  WmReport rep;
  const LiePiece& src = piece(-n, -(n - i));
  const LiePiece& tgt = piece(-n, -(n + i));
  rep.dim_src = src.dim();
  rep.dim_tgt = tgt.dim();
  Mat a(tgt.dim(), src.dim());
  for (int k = 0; k < src.dim(); ++k) {
    TensorVec t = src.lyndon_tv[src.basis[k]];
    for (int s = 0; s < i; ++s) t = apply_N_tv(t);
    LieElement y = reduce(t, -n, -(n + i));
    for (int r = 0; r < tgt.dim(); ++r) a.at(r, k) = y.coords[r];
  }
  rep.rank = rank(a);
  rep.bijective = rep.rank == rep.dim_src && rep.dim_src == rep.dim_tgt;
  return rep;
}

namespace {

nlohmann::json tree_of_word(const Word& w, const std::vector<Generator>& gens) {
  if (w.size() == 1) return gens[w[0]].name;
  int n = static_cast<int>(w.size());
  int split = -1;
  for (int s = 1; s < n; ++s) {
    Word suffix(w.begin() + s, w.end());
    if (word_is_lyndon(suffix)) {
      split = s;
      break;
    }
  }
  Word left(w.begin(), w.begin() + split);
  Word right(w.begin() + split, w.end());
  return nlohmann::json::array(
      {"[,]", tree_of_word(left, gens), tree_of_word(right, gens)});
}

}  // namespace

std::string LieAlgebra::basis_tree_json(int w, int m, int k) const {
  const LiePiece& p = piece(w, m);
  return tree_of_word(p.lyndon[p.basis[k]], gens_).dump();
}

std::string LieAlgebra::free_tree_json(int w, int m, int k) const {
  const LiePiece& p = piece(w, m);
  return tree_of_word(p.lyndon[k], gens_).dump();
}

}  // namespace grappa
