#include "korbit/linalg.hpp"

#include <stdexcept>

namespace korbit {

Mat mat_zero(int rows, int cols) { return Mat(rows, Vec(cols, Rat(0))); }

Mat mat_identity(int n) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = static_cast<int>(b[0].size());
  Mat out = mat_zero(n, m);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

Vec mat_apply(const Mat& a, const Vec& v) {
  Vec out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (a[i][j] != 0 && v[j] != 0) out[i] += a[i][j] * v[j];
    }
  }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += b[i][j];
  }
  return out;
}

Mat mat_scale(const Rat& c, const Mat& a) {
  Mat out = a;
  for (auto& row : out) {
    for (auto& x : row) x *= c;
  }
  return out;
}

namespace {

// Row echelon form in place; returns pivot column indices.
std::vector<int> echelonize(Mat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    Rat inv = Rat(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int mat_rank(Mat a) { return static_cast<int>(echelonize(a).size()); }

std::vector<Vec> nullspace(const Mat& a) {
  if (a.empty()) return {};
  int cols = static_cast<int>(a[0].size());
  Mat m = a;
  std::vector<int> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(v);
  }
  return basis;
}

int span_rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return mat_rank(vectors);
}

std::vector<Vec> annihilator(const std::vector<Vec>& vectors, int dim) {
  if (vectors.empty()) {
    std::vector<Vec> all;
    for (int i = 0; i < dim; ++i) {
      Vec v(dim, Rat(0));
      v[i] = 1;
      all.push_back(v);
    }
    return all;
  }
  return nullspace(vectors);
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat trace_product(const Mat& a, const Mat& b) {
  Rat s = 0;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += a[i][j] * b[j][i];
  }
  return s;
}

}  // namespace korbit
