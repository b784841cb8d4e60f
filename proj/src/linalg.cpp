#include "grappa/linalg.hpp"

#include <stdexcept>

namespace grappa {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xv = x.at(r, k);
      if (xv == 0) continue;
      for (int c = 0; c < y.cols; ++c) z.at(r, c) += xv * y.at(k, c);
    }
  return z;
}

RatVec mat_vec(const Mat& m, const RatVec& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("matrix shape mismatch");
  RatVec out(m.rows, Rat(0));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    const Rat inv = Rat(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve(const Mat& m, const RatVec& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw std::invalid_argument("matrix shape mismatch");
  Mat aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  const std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  RatVec x(m.cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
  return x;
}

std::vector<RatVec> nullspace(const Mat& m) {
  Mat r = m;
  const std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat inverse(const Mat& m) {
  if (m.rows != m.cols) throw std::runtime_error("inverse of non-square matrix");
  Mat aug(m.rows, 2 * m.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols + r) = 1;
  }
  const std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != m.rows || pivots.back() != m.rows - 1)
    throw std::runtime_error("inverse of singular matrix");
  Mat inv(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) inv.at(r, c) = aug.at(r, m.cols + c);
  return inv;
}

RatVec vec_add(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  RatVec z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

RatVec vec_sub(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  RatVec z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

RatVec vec_scale(const Rat& c, const RatVec& x) {
  RatVec z(x);
  for (auto& v : z) v *= c;
  return z;
}

Rat dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  Rat s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_zero_vec(const RatVec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

RatVec RowSpan::reduce(RatVec v) const {
  for (size_t i = 0; i < rows.size(); ++i) {
    const Rat& c = v[lead[i]];
    if (c == 0) continue;
    const Rat f = c;
    for (int j = lead[i]; j < cols; ++j)
      if (rows[i][j] != 0) v[j] -= f * rows[i][j];
  }
  return v;
}

bool RowSpan::insert(RatVec v) {
  v = reduce(std::move(v));
  int l = -1;
  for (int j = 0; j < cols; ++j)
    if (v[j] != 0) {
      l = j;
      break;
    }
  if (l < 0) return false;
  const Rat inv = Rat(1) / v[l];
  for (int j = l; j < cols; ++j) v[j] *= inv;
  // Keep earlier rows reduced against the new one.
  for (size_t i = 0; i < rows.size(); ++i) {
    const Rat f = rows[i][l];
    if (f == 0) continue;
    for (int j = l; j < cols; ++j)
      if (v[j] != 0) rows[i][j] -= f * v[j];
  }
  size_t pos = 0;
  while (pos < lead.size() && lead[pos] < l) ++pos;
  rows.insert(rows.begin() + pos, std::move(v));
  lead.insert(lead.begin() + pos, l);
  return true;
}

}  // namespace grappa
