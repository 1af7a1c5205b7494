#pragma once

#include <vector>

#include "korbit/numeric.hpp"

namespace korbit {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Mat mat_zero(int rows, int cols);
Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Rat& c, const Mat& a);

// Rank of the matrix (exact Gaussian elimination); leaves input untouched.
int mat_rank(Mat a);

// Basis of the kernel {x : a x = 0}, deterministic (free columns in order).
std::vector<Vec> nullspace(const Mat& a);

// Rank of the span of the given vectors.
int span_rank(const std::vector<Vec>& vectors);

// Functionals vanishing on the span of `vectors`: basis of the kernel of the
// matrix whose rows are the vectors.
std::vector<Vec> annihilator(const std::vector<Vec>& vectors, int dim);

Rat dot(const Vec& a, const Vec& b);

// Trace of a*b for square matrices.
Rat trace_product(const Mat& a, const Mat& b);

}  // namespace korbit
