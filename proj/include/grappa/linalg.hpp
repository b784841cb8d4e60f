#pragma once

#include <optional>
#include <vector>

#include "grappa/rational.hpp"

namespace grappa {

using RatVec = std::vector<Rat>;

// Dense exact matrix, row-major.
struct Mat {
  int rows = 0;
  int cols = 0;
  RatVec a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int n);
  Mat transposed() const;
};

Mat operator*(const Mat& x, const Mat& y);
RatVec mat_vec(const Mat& m, const RatVec& v);

// In-place reduced row echelon form. Returns pivot column indices in order.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// One solution of m x = b, if any.
std::optional<RatVec> solve(const Mat& m, const RatVec& b);

// Basis of the right kernel, one vector per free column, deterministic.
std::vector<RatVec> nullspace(const Mat& m);

// Inverse of a square nonsingular matrix; throws std::runtime_error otherwise.
Mat inverse(const Mat& m);

RatVec vec_add(const RatVec& x, const RatVec& y);
RatVec vec_sub(const RatVec& x, const RatVec& y);
RatVec vec_scale(const Rat& c, const RatVec& x);
Rat dot(const RatVec& x, const RatVec& y);
bool is_zero_vec(const RatVec& x);

// Incremental exact row reduction used to maintain independent spanning sets.
struct RowSpan {
  int cols = 0;
  std::vector<RatVec> rows;       // reduced, each with leading 1
  std::vector<int> lead;          // leading column per row, increasing

  explicit RowSpan(int c) : cols(c) {}
  // Reduces v against the span; returns the remainder.
  RatVec reduce(RatVec v) const;
  // Returns true and absorbs v if it enlarges the span.
  bool insert(RatVec v);
  int dim() const { return static_cast<int>(rows.size()); }
  bool contains(const RatVec& v) const { return is_zero_vec(reduce(v)); }
};

}  // namespace grappa
