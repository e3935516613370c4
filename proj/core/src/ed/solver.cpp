#include "dicke/ed/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace dicke::ed {

std::string_view to_string(SolverMethod m) {
  switch (m) {
    case SolverMethod::Auto: return "auto";
    case SolverMethod::Lanczos: return "lanczos";
    case SolverMethod::Dense: return "dense";
  }
  return "unknown";
}

ConvergenceError::ConvergenceError(int iterations, double best_residual)
    : std::runtime_error("Lanczos did not converge after " +
                         std::to_string(iterations) +
                         " iterations; best residual " +
                         std::to_string(best_residual)),
      iterations_(iterations),
      best_residual_(best_residual) {}

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double a, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

void scale(Vec& a, double s) {
  for (double& x : a) x *= s;
}

// Fix the overall sign: largest-magnitude component positive.
void canonical_sign(Vec& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (!v.empty() && v[best] < 0.0) scale(v, -1.0);
}

double residual_norm(const CsrMatrix& a, const Vec& v, double e) {
  Vec w = a.multiply(v);
  axpy(-e, v, w);
  return norm(w);
}

// Deterministic start vector: all-ones plus a hashed per-index offset. Pure
// all-ones is invariant under every basis permutation symmetry (a <-> b at
// resonance, spin permutations), so it has no overlap with eigenstates that
// are odd under one and Lanczos would never reach them.
Vec start_vector(std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t z = 0x9E3779B97F4A7C15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    v[i] = 1.0 + 0.5 * static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  return v;
}

struct Projector {
  const std::vector<std::int8_t>* parity{nullptr};
  int sector{0};
  const std::vector<Vec>* locked{nullptr};

  void operator()(Vec& w) const {
    if (parity && sector != 0) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if ((*parity)[i] != sector) w[i] = 0.0;
      }
    }
    if (locked) {
      for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& u : *locked) axpy(-dot(u, w), u, w);
      }
    }
  }
};

GroundStateResult lanczos(const CsrMatrix& a, const Projector& project,
                          const SolverOptions& opts, double hnorm) {
  const std::size_t n = a.n;
  const double target = opts.tolerance * hnorm;
  const double breakdown = 1e-12 * std::max(hnorm, 1e-300);
  const int kmax = std::max(2, opts.krylov_size);

  Vec start = start_vector(n);
  project(start);
  double s0 = norm(start);
  if (s0 == 0.0) throw std::invalid_argument("empty sector for Lanczos");
  scale(start, 1.0 / s0);

  int iters = 0;
  double best = std::numeric_limits<double>::infinity();
  Vec x = start;

  while (iters < opts.max_iterations) {
    std::vector<Vec> basis;
    basis.push_back(x);
    std::vector<double> alpha, beta;
    Vec w(n);
    bool restart = false;

    for (int j = 0; j < kmax && !restart; ++j) {
      a.multiply(basis[j].data(), w.data());
      ++iters;
      project(w);
      const double aj = dot(basis[j], w);
      alpha.push_back(aj);
      axpy(-aj, basis[j], w);
      if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
      for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& u : basis) axpy(-dot(u, w), u, w);
      }
      project(w);
      const double bj = norm(w);

      const bool last = j + 1 == kmax || iters >= opts.max_iterations;
      const bool broke = bj < breakdown;
      if (!(broke || last || j % 5 == 4)) {
        beta.push_back(bj);
        basis.push_back(w);
        scale(basis.back(), 1.0 / bj);
        continue;
      }

      const int m = j + 1;
      Eigen::VectorXd d(m), e(std::max(m - 1, 1));
      for (int i = 0; i < m; ++i) d[i] = alpha[i];
      for (int i = 0; i + 1 < m; ++i) e[i] = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(d, e.head(std::max(m - 1, 0)),
                                 Eigen::ComputeEigenvectors);
      const Eigen::VectorXd s = tri.eigenvectors().col(0);
      const double estimate = bj * std::abs(s[m - 1]);

      if (estimate <= target || broke || last) {
        Vec ritz(n, 0.0);
        for (int i = 0; i < m; ++i) axpy(s[i], basis[i], ritz);
        project(ritz);
        scale(ritz, 1.0 / norm(ritz));
        Vec hr = a.multiply(ritz);
        const double rq = dot(ritz, hr);
        axpy(-rq, ritz, hr);
        const double res = norm(hr);
        best = std::min(best, res);
        if (res <= target) {
          GroundStateResult out;
          out.energy = rq;
          out.vector = std::move(ritz);
          out.residual = res;
          out.scale = hnorm;
          out.iterations = iters;
          out.method = SolverMethod::Lanczos;
          return out;
        }
        x = std::move(ritz);
        restart = true;
        continue;
      }
      beta.push_back(bj);
      basis.push_back(w);
      scale(basis.back(), 1.0 / bj);
    }
  }
  throw ConvergenceError(iters, best);
}

std::vector<std::size_t> sector_indices(const SparseHamiltonian& h,
                                        int sector) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (sector == 0 || h.parity[i] == sector) idx.push_back(i);
  }
  return idx;
}

Eigen::MatrixXd dense_block(const CsrMatrix& a,
                            const std::vector<std::size_t>& idx) {
  std::vector<long> local(a.n, -1);
  for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<long>(k);
  const auto m = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::size_t i = idx[k];
    for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      const long c = local[a.col[p]];
      if (c < 0) {
        throw std::logic_error("matrix couples different parity sectors");
      }
      dense(static_cast<Eigen::Index>(k), c) = a.val[p];
    }
  }
  return dense;
}

GroundStateResult dense_lowest(const CsrMatrix& a,
                               const std::vector<std::size_t>& idx,
                               double hnorm) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_block(a, idx));
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolver failed");
  }
  GroundStateResult out;
  out.vector.assign(a.n, 0.0);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.vector[idx[k]] = es.eigenvectors()(static_cast<Eigen::Index>(k), 0);
  }
  out.energy = es.eigenvalues()[0];
  out.residual = residual_norm(a, out.vector, out.energy);
  out.scale = hnorm;
  out.iterations = 0;
  out.method = SolverMethod::Dense;
  return out;
}

bool use_dense(const SolverOptions& opts, std::size_t dim) {
  if (opts.method == SolverMethod::Dense) return true;
  if (opts.method == SolverMethod::Lanczos) return false;
  return dim <= opts.dense_limit;
}

GroundStateResult solve_sector(const SparseHamiltonian& h, int sector,
                               const SolverOptions& opts, double hnorm) {
  GroundStateResult r;
  if (use_dense(opts, h.dim())) {
    r = dense_lowest(h.matrix, sector_indices(h, sector), hnorm);
  } else {
    Projector proj{sector != 0 ? &h.parity : nullptr, sector, nullptr};
    r = lanczos(h.matrix, proj, opts, hnorm);
  }
  canonical_sign(r.vector);
  r.parity = sector;
  return r;
}

}  // namespace

GroundStateResult ground_state(const SparseHamiltonian& h,
                               const SolverOptions& opts) {
  if (h.dim() == 0) throw std::invalid_argument("empty matrix");
  const double hnorm = inf_norm(h.matrix);
  if (!h.has_parity()) return solve_sector(h, 0, opts, hnorm);

  bool has_even = false, has_odd = false;
  for (auto p : h.parity) (p > 0 ? has_even : has_odd) = true;
  if (!has_odd) return solve_sector(h, 1, opts, hnorm);
  if (!has_even) return solve_sector(h, -1, opts, hnorm);

  GroundStateResult even = solve_sector(h, 1, opts, hnorm);
  GroundStateResult odd = solve_sector(h, -1, opts, hnorm);
  const int total_iters = even.iterations + odd.iterations;
  GroundStateResult pick;
  if (std::abs(even.energy - odd.energy) < opts.degeneracy_gap) {
    pick = std::move(even);
    pick.near_degenerate = true;
  } else {
    pick = even.energy < odd.energy ? std::move(even) : std::move(odd);
  }
  pick.iterations = total_iters;
  return pick;
}

GroundStateResult ground_state(const CsrMatrix& h, const SolverOptions& opts) {
  SparseHamiltonian wrapped{h, {}};
  return ground_state(wrapped, opts);
}

std::vector<GroundStateResult> lowest_eigenpairs(const SparseHamiltonian& h,
                                                 int count, int sector,
                                                 const SolverOptions& opts) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (sector != 0 && !h.has_parity()) {
    throw std::invalid_argument("matrix carries no parity labels");
  }
  const double hnorm = inf_norm(h.matrix);
  std::vector<GroundStateResult> out;
  if (use_dense(opts, h.dim())) {
    const auto idx = sector_indices(h, sector);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_block(h.matrix, idx));
    const int n = std::min<int>(count, static_cast<int>(idx.size()));
    for (int c = 0; c < n; ++c) {
      GroundStateResult r;
      r.vector.assign(h.dim(), 0.0);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        r.vector[idx[k]] = es.eigenvectors()(static_cast<Eigen::Index>(k), c);
      }
      canonical_sign(r.vector);
      r.energy = es.eigenvalues()[c];
      r.residual = residual_norm(h.matrix, r.vector, r.energy);
      r.scale = hnorm;
      r.parity = sector;
      r.method = SolverMethod::Dense;
      out.push_back(std::move(r));
    }
    return out;
  }
  std::vector<Vec> locked;
  for (int c = 0; c < count; ++c) {
    Projector proj{sector != 0 ? &h.parity : nullptr, sector, &locked};
    GroundStateResult r = lanczos(h.matrix, proj, opts, hnorm);
    canonical_sign(r.vector);
    r.parity = sector;
    locked.push_back(r.vector);
    out.push_back(std::move(r));
  }
  return out;
}

DenseSpectrum dense_spectrum(const SparseHamiltonian& h) {
  DenseSpectrum spec;
  spec.dim = h.dim();
  std::vector<int> sectors = h.has_parity() ? std::vector<int>{1, -1}
                                            : std::vector<int>{0};
  std::vector<std::pair<double, Vec>> pairs;
  for (int sector : sectors) {
    const auto idx = sector_indices(h, sector);
    if (idx.empty()) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_block(h.matrix, idx));
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("dense eigensolver failed");
    }
    for (Eigen::Index c = 0; c < es.eigenvalues().size(); ++c) {
      Vec v(h.dim(), 0.0);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        v[idx[k]] = es.eigenvectors()(static_cast<Eigen::Index>(k), c);
      }
      pairs.emplace_back(es.eigenvalues()[c], std::move(v));
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [e, v] : pairs) {
    spec.values.push_back(e);
    spec.vectors.push_back(std::move(v));
  }
  return spec;
}

}  // namespace dicke::ed
