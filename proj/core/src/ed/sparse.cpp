#include "dicke/ed/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace dicke::ed {

void CsrMatrix::multiply(const double* x, double* y) const {
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      s += val[k] * x[col[k]];
    }
    y[i] = s;
  }
}

std::vector<double> CsrMatrix::multiply(const std::vector<double>& x) const {
  if (x.size() != n) throw std::invalid_argument("dimension mismatch");
  std::vector<double> y(n);
  multiply(x.data(), y.data());
  return y;
}

double CsrMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n || j >= n) throw std::out_of_range("index outside matrix");
  const auto first = col.begin() + static_cast<std::ptrdiff_t>(row_ptr[i]);
  const auto last = col.begin() + static_cast<std::ptrdiff_t>(row_ptr[i + 1]);
  const auto it = std::lower_bound(first, last, j);
  if (it == last || *it != j) return 0.0;
  return val[static_cast<std::size_t>(it - col.begin())];
}

void CsrBuilder::add(std::size_t i, std::size_t j, double v) {
  if (i >= n_ || j >= n_) throw std::out_of_range("triplet outside matrix");
  t_.push_back({i, j, v});
}

void CsrBuilder::add_symmetric(std::size_t i, std::size_t j, double v) {
  add(i, j, v);
  if (i != j) add(j, i, v);
}

void CsrBuilder::add_antisymmetric(std::size_t i, std::size_t j, double v) {
  if (i == j) throw std::invalid_argument("antisymmetric diagonal entry");
  add(i, j, v);
  add(j, i, -v);
}

CsrMatrix CsrBuilder::build() const {
  std::vector<Triplet> t = t_;
  std::stable_sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  CsrMatrix m;
  m.n = n_;
  m.row_ptr.assign(n_ + 1, 0);
  std::size_t k = 0;
  while (k < t.size()) {
    const std::size_t i = t[k].i, j = t[k].j;
    double s = 0.0;
    while (k < t.size() && t[k].i == i && t[k].j == j) s += t[k++].v;
    if (s == 0.0) continue;
    m.col.push_back(j);
    m.val.push_back(s);
    ++m.row_ptr[i + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) m.row_ptr[i + 1] += m.row_ptr[i];
  return m;
}

CsrMatrix transpose(const CsrMatrix& a) {
  CsrBuilder b(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      b.add(a.col[k], i, a.val[k]);
    }
  }
  return b.build();
}

namespace {

bool mirrored(const CsrMatrix& a, double sign) {
  const CsrMatrix t = transpose(a);
  if (t.col != a.col || t.row_ptr != a.row_ptr) return false;
  for (std::size_t k = 0; k < a.val.size(); ++k) {
    if (t.val[k] != sign * a.val[k]) return false;
  }
  return true;
}

}  // namespace

bool is_exactly_symmetric(const CsrMatrix& a) { return mirrored(a, 1.0); }

bool is_exactly_antisymmetric(const CsrMatrix& a) { return mirrored(a, -1.0); }

bool bitwise_equal(const CsrMatrix& a, const CsrMatrix& b) {
  if (a.n != b.n || a.row_ptr != b.row_ptr || a.col != b.col) return false;
  return a.val.size() == b.val.size() &&
         (a.val.empty() || std::memcmp(a.val.data(), b.val.data(),
                                       a.val.size() * sizeof(double)) == 0);
}

double inf_norm(const CsrMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.n; ++i) {
    double s = 0.0;
    for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      s += std::abs(a.val[k]);
    }
    best = std::max(best, s);
  }
  return best;
}

}  // namespace dicke::ed
