#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dicke::ed {

// Real square matrix in compressed sparse row layout, columns sorted.
struct CsrMatrix {
  std::size_t n{0};
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::size_t> col;
  std::vector<double> val;

  std::size_t nnz() const { return val.size(); }
  // y = A x
  void multiply(const double* x, double* y) const;
  std::vector<double> multiply(const std::vector<double>& x) const;
  double at(std::size_t i, std::size_t j) const;
};

// Collects triplets; duplicates are summed in insertion order.
class CsrBuilder {
 public:
  explicit CsrBuilder(std::size_t n) : n_(n) {}
  void add(std::size_t i, std::size_t j, double v);
  // adds (i, j, v) and (j, i, v) together, so the result is exactly symmetric
  void add_symmetric(std::size_t i, std::size_t j, double v);
  // adds (i, j, v) and (j, i, -v)
  void add_antisymmetric(std::size_t i, std::size_t j, double v);
  CsrMatrix build() const;

 private:
  struct Triplet {
    std::size_t i, j;
    double v;
  };
  std::size_t n_;
  std::vector<Triplet> t_;
};

bool is_exactly_symmetric(const CsrMatrix& a);
bool is_exactly_antisymmetric(const CsrMatrix& a);
bool bitwise_equal(const CsrMatrix& a, const CsrMatrix& b);
double inf_norm(const CsrMatrix& a);
CsrMatrix transpose(const CsrMatrix& a);

struct SparseHamiltonian {
  CsrMatrix matrix;
  // +1 / -1 per basis state when a Z2 parity commutes with the matrix;
  // empty otherwise.
  std::vector<std::int8_t> parity;

  std::size_t dim() const { return matrix.n; }
  bool has_parity() const { return !parity.empty(); }
};

}  // namespace dicke::ed
