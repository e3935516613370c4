#include "dicke/ed/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dicke::ed {
namespace {

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

double sq_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

QuadratureOperator general_quadrature(const BasisDescriptor& basis,
                                      double boson_weight, double spin_weight,
                                      Quadrature label) {
  CsrBuilder b(basis.dim);
  for (int n = 0; n <= basis.n_max; ++n) {
    for (std::uint32_t s = 0; s < basis.spin_dim; ++s) {
      const std::size_t i = basis.index(n, s);
      // <n+1, s| a^dag |n, s> = sqrt(n+1)
      if (boson_weight != 0.0 && n < basis.n_max) {
        b.add_antisymmetric(basis.index(n + 1, s), i,
                            boson_weight * std::sqrt(n + 1.0));
      }
      if (spin_weight == 0.0) continue;
      for (int q = 0; q < basis.n_spins; ++q) {
        const std::uint32_t bit = 1u << q;
        if (s & bit) continue;
        // S+ raises spin q: entry (s|bit, s) = +1, minus sign from -w_s
        b.add_antisymmetric(basis.index(n, s | bit), i, -spin_weight);
      }
    }
  }
  return {b.build(), label};
}

QuadratureOperator p_minus_tilde(const BasisDescriptor& basis) {
  return general_quadrature(basis, 1.0 / std::sqrt(2.0),
                            1.0 / std::sqrt(2.0 * basis.n_spins),
                            Quadrature::PMinusTilde);
}

QuadratureOperator sy_tilde(const BasisDescriptor& basis) {
  return general_quadrature(basis, 0.0, -1.0 / std::sqrt(1.0 * basis.n_spins),
                            Quadrature::SyTilde);
}

QuadratureOperator disorder_quadrature(const DickeParams& p,
                                       const DisorderEnsemble& d,
                                       const BasisDescriptor& basis) {
  if (basis.n_spins != d.n_total()) {
    throw std::invalid_argument("basis must hold N + m spins");
  }
  const NormalModeData bar = normal_modes(renormalized_params(p, d));
  return general_quadrature(
      basis, std::sqrt(p.omega / 2.0) * std::cos(bar.gamma),
      std::sqrt(p.omega0 / (2.0 * d.n_total())) * std::sin(bar.gamma),
      Quadrature::Pd);
}

QuadratureOperator ising_k0_quadrature(const IsingParams& ip,
                                       const BasisDescriptor& basis) {
  if (basis.n_spins != ip.n_spins) {
    throw std::invalid_argument("basis n_spins does not match params");
  }
  const KQuadrature k0 = squeezed_quadrature_coefficients_k(ip, 0.0);
  return general_quadrature(basis, k0.boson, k0.spin, Quadrature::PMinusK);
}

QuadratureOperator hopfield_p_minus(const DickeParams& p,
                                    const TwoBosonBasis& basis) {
  const QuadratureWeights w = two_mode_quadrature_coefficients(p);
  CsrBuilder b(basis.dim);
  for (int na = 0; na <= basis.n_max_a; ++na) {
    for (int nb = 0; nb <= basis.n_max_b; ++nb) {
      const std::size_t i = basis.index(na, nb);
      if (na < basis.n_max_a) {
        b.add_antisymmetric(basis.index(na + 1, nb), i,
                            w.boson * std::sqrt(na + 1.0));
      }
      if (nb < basis.n_max_b) {
        b.add_antisymmetric(basis.index(na, nb + 1), i,
                            -w.spin * std::sqrt(nb + 1.0));
      }
    }
  }
  return {b.build(), Quadrature::PMinus};
}

CsrMatrix hopfield_q_minus(const DickeParams& p, const TwoBosonBasis& basis) {
  const NormalModeData m = normal_modes(p);
  const double ca = std::cos(m.gamma) / std::sqrt(2.0 * p.omega);
  const double cb = -std::sin(m.gamma) / std::sqrt(2.0 * p.omega0);
  CsrBuilder b(basis.dim);
  for (int na = 0; na <= basis.n_max_a; ++na) {
    for (int nb = 0; nb <= basis.n_max_b; ++nb) {
      const std::size_t i = basis.index(na, nb);
      if (na < basis.n_max_a) {
        b.add_symmetric(basis.index(na + 1, nb), i, ca * std::sqrt(na + 1.0));
      }
      if (nb < basis.n_max_b) {
        b.add_symmetric(basis.index(na, nb + 1), i, cb * std::sqrt(nb + 1.0));
      }
    }
  }
  return b.build();
}

CsrMatrix boson_position(const BasisDescriptor& basis) {
  CsrBuilder b(basis.dim);
  for (int n = 0; n < basis.n_max; ++n) {
    for (std::uint32_t s = 0; s < basis.spin_dim; ++s) {
      b.add_symmetric(basis.index(n + 1, s), basis.index(n, s),
                      std::sqrt(n + 1.0));
    }
  }
  return b.build();
}

CsrMatrix total_sx(const BasisDescriptor& basis) {
  CsrBuilder b(basis.dim);
  for (int n = 0; n <= basis.n_max; ++n) {
    for (std::uint32_t s = 0; s < basis.spin_dim; ++s) {
      for (int q = 0; q < basis.n_spins; ++q) {
        const std::uint32_t bit = 1u << q;
        if (s & bit) continue;
        b.add_symmetric(basis.index(n, s | bit), basis.index(n, s), 0.5);
      }
    }
  }
  return b.build();
}

double variance(const std::vector<double>& v, const QuadratureOperator& q) {
  check_dim(v.size(), q.generator.n);
  // <O> = i v.M v vanishes for real v, so only <O^2> = |M v|^2 remains
  return sq_norm(q.generator.multiply(v));
}

double variance(const GroundStateResult& gs, const QuadratureOperator& q) {
  return variance(gs.vector, q);
}

double expectation(const std::vector<double>& v, const CsrMatrix& s) {
  check_dim(v.size(), s.n);
  const std::vector<double> sv = s.multiply(v);
  double e = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) e += v[i] * sv[i];
  return e;
}

double variance_symmetric(const std::vector<double>& v, const CsrMatrix& s) {
  check_dim(v.size(), s.n);
  const std::vector<double> sv = s.multiply(v);
  double mean = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) mean += v[i] * sv[i];
  const double var = sq_norm(sv) - mean * mean;
  return var < 0.0 ? 0.0 : var;
}

double total_spin_expectation(const std::vector<double>& v,
                              const BasisDescriptor& basis) {
  check_dim(v.size(), basis.dim);
  const int ns = basis.n_spins;
  // S^2 = 3N/4 + 2 sum_{i<j} (Sz_i Sz_j + (S+_i S-_j + S-_i S+_j) / 2)
  double pair_sum = 0.0;
  for (std::size_t idx = 0; idx < basis.dim; ++idx) {
    const double a = v[idx];
    if (a == 0.0) continue;
    const auto [n, s] = basis.state(idx);
    for (int i = 0; i < ns; ++i) {
      const bool ui = (s >> i) & 1u;
      for (int j = i + 1; j < ns; ++j) {
        const bool uj = (s >> j) & 1u;
        pair_sum += (ui == uj ? 0.25 : -0.25) * a * a;
        if (ui != uj) {
          const std::uint32_t t = s ^ ((1u << i) | (1u << j));
          pair_sum += 0.5 * a * v[basis.index(n, t)];
        }
      }
    }
  }
  return 0.75 * ns + 2.0 * pair_sum;
}

double thermal_variance(const DenseSpectrum& spec,
                        const QuadratureOperator& q, double temperature,
                        std::size_t n_eigenpairs) {
  check_dim(spec.dim, q.generator.n);
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw std::invalid_argument("temperature must be >= 0");
  }
  if (spec.values.empty()) throw std::invalid_argument("empty spectrum");
  const std::size_t keep =
      n_eigenpairs == 0 ? spec.values.size()
                        : std::min(n_eigenpairs, spec.values.size());
  if (temperature == 0.0) return variance(spec.vectors[0], q);

  const double e0 = spec.values[0];
  const double tail = std::exp(-(spec.values[keep - 1] - e0) / temperature);
  if (!(tail < kBoltzmannTailBound)) {
    throw TailBoundError(
        "Boltzmann weight of the highest retained level is " +
        std::to_string(tail) + "; increase the truncation or lower T");
  }
  double z = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < keep; ++i) {
    const double w = std::exp(-(spec.values[i] - e0) / temperature);
    z += w;
    if (w < 1e-18) continue;
    acc += w * variance(spec.vectors[i], q);
  }
  return acc / z;
}

double thermal_variance(const SparseHamiltonian& h,
                        const QuadratureOperator& q, double temperature,
                        std::size_t n_eigenpairs) {
  return thermal_variance(dense_spectrum(h), q, temperature, n_eigenpairs);
}

}  // namespace dicke::ed
