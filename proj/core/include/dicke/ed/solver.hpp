#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dicke/ed/sparse.hpp"

namespace dicke::ed {

enum class SolverMethod { Auto, Lanczos, Dense };

std::string_view to_string(SolverMethod m);

struct SolverOptions {
  double tolerance{1e-10};  // relative to the matrix infinity norm
  int max_iterations{5000};  // matrix-vector products
  int krylov_size{250};      // restart length
  std::size_t dense_limit{2048};
  SolverMethod method{SolverMethod::Auto};
  double degeneracy_gap{1e-8};
};

struct GroundStateResult {
  double energy{0.0};
  std::vector<double> vector;
  double residual{0.0};  // ||H v - E v||_2
  double scale{1.0};     // ||H||_inf used for the stopping rule
  int iterations{0};
  bool near_degenerate{false};
  int parity{0};  // +1 / -1 sector of the returned state, 0 if unlabelled
  SolverMethod method{SolverMethod::Lanczos};

  double relative_residual() const { return scale > 0 ? residual / scale : residual; }
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int iterations, double best_residual);
  int iterations() const { return iterations_; }
  double best_residual() const { return best_residual_; }

 private:
  int iterations_;
  double best_residual_;
};

// Lowest eigenpair. With parity labels both sectors are solved; when their
// energies are closer than degeneracy_gap the even state is returned and
// near_degenerate is set.
GroundStateResult ground_state(const SparseHamiltonian& h,
                               const SolverOptions& opts = {});
GroundStateResult ground_state(const CsrMatrix& h,
                               const SolverOptions& opts = {});

// Lowest `count` eigenpairs inside one parity sector (sector = +1 / -1, or 0
// for the whole space), found one after another by deflation.
std::vector<GroundStateResult> lowest_eigenpairs(const SparseHamiltonian& h,
                                                 int count, int sector,
                                                 const SolverOptions& opts = {});

// Full spectrum in ascending order; eigenvectors are columns.
struct DenseSpectrum {
  std::size_t dim{0};
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

DenseSpectrum dense_spectrum(const SparseHamiltonian& h);

}  // namespace dicke::ed
