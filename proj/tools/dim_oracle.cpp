// Dimension tables for the bigraded quotient, computed without the Lie
// engine: free piece dimensions by the Witt content formula, associative
// quotient dimensions as word counts minus the rank of the two-sided span
// of the defining relation, and primitive dimensions by inverting the
// Poincare-Birkhoff-Witt product expansion.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "grappa/graph.hpp"
#include "grappa/linalg.hpp"

using namespace grappa;

namespace {

struct OGen {
  int w;
  int m;
};

using OWord = std::vector<int>;

struct OTerm {
  OWord word;
  int coeff;
};

std::vector<OGen> oracle_gens(const ReductionGraph& g, std::vector<OTerm>& sigma) {
  std::vector<OGen> gens;
  int b1 = g.betti();
  for (int i = 0; i < b1; ++i) gens.push_back({-1, 0});
  std::vector<std::pair<int, int>> beta_pairs;
  for (const auto& v : g.vertices) {
    for (long i = 0; i < v.genus; ++i) {
      beta_pairs.push_back({static_cast<int>(gens.size()), static_cast<int>(gens.size()) + 1});
      gens.push_back({-1, -1});
      gens.push_back({-1, -1});
    }
  }
  std::vector<int> zeta_ids;
  for (int i = 0; i < b1; ++i) {
    zeta_ids.push_back(static_cast<int>(gens.size()));
    gens.push_back({-1, -2});
  }
  std::vector<int> delta_ids;
  for (size_t h = 0; h < g.half_edges.size(); ++h) {
    delta_ids.push_back(static_cast<int>(gens.size()));
    gens.push_back({-2, -2});
  }
  for (int i = 0; i < b1; ++i) {
    sigma.push_back({{zeta_ids[i], i}, 1});
    sigma.push_back({{i, zeta_ids[i]}, -1});
  }
  for (auto [b, bp] : beta_pairs) {
    sigma.push_back({{bp, b}, 1});
    sigma.push_back({{b, bp}, -1});
  }
  for (int d : delta_ids) sigma.push_back({{d}, 1});
  return gens;
}

std::vector<OWord> words_of(const std::vector<OGen>& gens, int ww, int mm) {
  std::vector<OWord> out;
  OWord cur;
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
}

int mobius(int d) {
  static const int table[] = {0, 1, -1, -1, 0, -1, 1, -1};
  return table[d];
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Witt formula summed over generator contents of the bidegree.
mpz_class free_lie_dim(const std::vector<OGen>& gens, int ww, int mm) {
  mpz_class total = 0;
  std::vector<int> content(gens.size(), 0);
  std::function<void(int, int, int)> go = [&](int gid, int rw, int rm) {
    if (rm < 0 || rm > 2 * rw) return;
    if (rw == 0) {
      if (rm != 0) return;
      int n = std::accumulate(content.begin(), content.end(), 0);
      int g = 0;
      for (int c : content) g = std::gcd(g, c);
      mpz_class piece = 0;
      for (int d = 1; d <= g; ++d) {
        if (g % d != 0 || mobius(d) == 0) continue;
        mpz_class mult = factorial(n / d);
        for (int c : content) mult /= factorial(c / d);
        piece += mobius(d) * mult;
      }
      total += piece / n;
      return;
    }
    if (gid == static_cast<int>(gens.size())) return;
    int gw = -gens[gid].w;
    int gm = -gens[gid].m;
    for (int k = 0; k * gw <= rw; ++k) {
      content[gid] = k;
      go(gid + 1, rw - k * gw, rm - k * gm);
    }
    content[gid] = 0;
  };
  go(0, ww, mm);
  return total;
}

// Word count minus the rank of { u sigma v } at the bidegree.
int assoc_dim(const std::vector<OGen>& gens, const std::vector<OTerm>& sigma,
              int ww, int mm) {
  std::vector<OWord> words = words_of(gens, ww, mm);
  if (words.empty()) return 0;
  std::map<OWord, int> index;
  for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  std::vector<RatVec> rows;
  for (int wa = 0; wa <= ww - 2; ++wa) {
    for (int ma = 0; ma <= mm; ++ma) {
      int wb = ww - 2 - wa;
      int mb = mm - 2 - ma;
      if (mb < 0) continue;
      std::vector<OWord> left = words_of(gens, wa, ma);
      std::vector<OWord> right = words_of(gens, wb, mb);
      for (const OWord& u : left) {
        for (const OWord& v : right) {
          RatVec row(words.size(), Rat(0));
          for (const OTerm& t : sigma) {
            OWord w = u;
            w.insert(w.end(), t.word.begin(), t.word.end());
            w.insert(w.end(), v.begin(), v.end());
            auto it = index.find(w);
            if (it == index.end()) goto skip;
            row[it->second] += t.coeff;
          }
          rows.push_back(std::move(row));
        skip:;
        }
      }
    }
  }
  int r = 0;
  if (!rows.empty()) {
    Mat a(static_cast<int>(rows.size()), static_cast<int>(words.size()));
    for (int i = 0; i < a.rows; ++i) {
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = rows[i][j];
    }
    r = rank(a);
  }
  return static_cast<int>(words.size()) - r;
}

mpz_class binom(const mpz_class& n, int k) {
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: dim_oracle WMAX graph.json...\n";
    return 2;
  }
  int wmax = std::stoi(argv[1]);
  for (int arg = 2; arg < argc; ++arg) {
    std::ifstream in(argv[arg]);
    std::stringstream buf;
    buf << in.rdbuf();
    ReductionGraph g = parse_graph(buf.str());
    std::vector<OTerm> sigma;
    std::vector<OGen> gens = oracle_gens(g, sigma);
    std::cout << "# " << argv[arg] << "  gens=" << gens.size() << "\n";

    std::map<std::pair<int, int>, mpz_class> assoc;
    for (int ww = 1; ww <= wmax; ++ww) {
      for (int mm = 0; mm <= 2 * ww; ++mm) {
        assoc[{ww, mm}] = assoc_dim(gens, sigma, ww, mm);
      }
    }

    // Invert the PBW product to recover primitive dimensions.
    std::map<std::pair<int, int>, mpz_class> poly;
    poly[{0, 0}] = 1;
    std::map<std::pair<int, int>, mpz_class> lie;
    for (int ww = 1; ww <= wmax; ++ww) {
      for (int mm = 0; mm <= 2 * ww; ++mm) {
        mpz_class seen = 0;
        auto it = poly.find({ww, mm});
        if (it != poly.end()) seen = it->second;
        mpz_class l = assoc[{ww, mm}] - seen;
        lie[{ww, mm}] = l;
        if (l == 0) continue;
        std::map<std::pair<int, int>, mpz_class> next;
        for (const auto& [deg, c] : poly) {
          for (int k = 0; deg.first + k * ww <= wmax; ++k) {
            auto key = std::make_pair(deg.first + k * ww, deg.second + k * mm);
            next[key] += c * binom(l + k - 1, k);
          }
        }
        poly = std::move(next);
      }
    }

    for (int ww = 1; ww <= wmax; ++ww) {
      for (int mm = 0; mm <= 2 * ww; ++mm) {
        mpz_class f = free_lie_dim(gens, ww, mm);
        std::cout << "(" << -ww << "," << -mm << ") free=" << f.get_str()
                  << " assoc=" << assoc[{ww, mm}].get_str()
                  << " lie=" << lie[{ww, mm}].get_str() << "\n";
      }
    }
    std::cout << "\n";
  }
  return 0;
}
