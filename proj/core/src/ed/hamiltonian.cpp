#include "dicke/ed/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace dicke::ed {
namespace {

// Entries of the truncated (a + a^dag)^2 = X.X acting on |n>.
void add_x_squared(CsrBuilder& b, double coeff, int n_max, std::size_t stride,
                   std::size_t offset) {
  for (int n = 0; n <= n_max; ++n) {
    // <n|X X|n> = n + (n+1), except the top level lost a^dag
    const double diag = n < n_max ? 2.0 * n + 1.0 : static_cast<double>(n);
    const std::size_t i = static_cast<std::size_t>(n) * stride + offset;
    b.add(i, i, coeff * diag);
    if (n + 2 <= n_max) {
      const double off = std::sqrt((n + 1.0) * (n + 2.0));
      b.add_symmetric(i + 2 * stride, i, coeff * off);
    }
  }
}

}  // namespace

SparseHamiltonian build_spin_boson_hamiltonian(const SpinBosonTerms& t,
                                               const BasisDescriptor& basis) {
  const int ns = basis.n_spins;
  if (static_cast<int>(t.fields.size()) != ns ||
      static_cast<int>(t.couplings.size()) != ns) {
    throw std::invalid_argument("fields/couplings must have one entry per spin");
  }
  if (!(t.n_norm > 0.0)) throw std::invalid_argument("n_norm must be > 0");
  if (t.ising_j != 0.0 && ns < 2) {
    throw std::invalid_argument("Ising ring needs at least 2 spins");
  }

  CsrBuilder b(basis.dim);
  const std::size_t sd = basis.spin_dim;
  const double scale = 1.0 / std::sqrt(t.n_norm);

  for (int n = 0; n <= basis.n_max; ++n) {
    for (std::uint32_t s = 0; s < sd; ++s) {
      const std::size_t i = basis.index(n, s);
      double diag = t.omega * n;
      for (int q = 0; q < ns; ++q) {
        diag += ((s >> q) & 1u) ? 0.5 * t.fields[q] : -0.5 * t.fields[q];
      }
      b.add(i, i, diag);
      if (n < basis.n_max) {
        const double amp = std::sqrt(n + 1.0) * scale;
        for (int q = 0; q < ns; ++q) {
          if (t.couplings[q] == 0.0) continue;
          const std::size_t j = basis.index(n + 1, s ^ (1u << q));
          b.add_symmetric(j, i, t.couplings[q] * amp);
        }
      }
    }
  }

  if (t.a2_coeff != 0.0) {
    for (std::uint32_t s = 0; s < sd; ++s) {
      add_x_squared(b, t.a2_coeff, basis.n_max, sd, s);
    }
  }

  if (t.ising_j != 0.0) {
    // literal periodic sum over n = 0 .. N-1 of S^x_n S^x_{n+1}
    for (int q = 0; q < ns; ++q) {
      const int r = (q + 1) % ns;
      const std::uint32_t flip = (1u << q) | (1u << r);
      for (int n = 0; n <= basis.n_max; ++n) {
        for (std::uint32_t s = 0; s < sd; ++s) {
          const std::uint32_t s2 = s ^ flip;
          if (s2 < s) continue;
          b.add_symmetric(basis.index(n, s2), basis.index(n, s), t.ising_j);
        }
      }
    }
  }

  SparseHamiltonian h;
  h.matrix = b.build();
  h.parity.resize(basis.dim);
  for (std::size_t i = 0; i < basis.dim; ++i) {
    const auto [n, s] = basis.state(i);
    h.parity[i] = ((n + std::popcount(s)) % 2 == 0) ? 1 : -1;
  }
  return h;
}

SparseHamiltonian build_dicke_hamiltonian(const DickeParams& p,
                                          const BasisDescriptor& basis) {
  validate_params(p);
  if (basis.n_spins != p.n_spins) {
    throw std::invalid_argument("basis n_spins does not match params");
  }
  SpinBosonTerms t;
  t.omega = p.omega;
  t.a2_coeff = p.a2_coeff;
  t.fields.assign(p.n_spins, p.omega0);
  t.couplings.assign(p.n_spins, p.g);
  t.n_norm = p.n_spins;
  return build_spin_boson_hamiltonian(t, basis);
}

SparseHamiltonian build_disordered_hamiltonian(const DickeParams& p,
                                               const DisorderEnsemble& d,
                                               const BasisDescriptor& basis) {
  validate_params(p);
  validate_ensemble(d);
  if (p.n_spins != d.n_clean) {
    throw std::invalid_argument("n_spins must equal the ensemble n_clean");
  }
  if (basis.n_spins != d.n_total()) {
    throw std::invalid_argument("basis must hold N + m spins");
  }
  SpinBosonTerms t;
  t.omega = p.omega;
  t.a2_coeff = p.a2_coeff;
  t.fields.assign(d.n_clean, p.omega0);
  t.couplings.assign(d.n_clean, p.g);
  for (const auto& s : d.defects) {
    t.fields.push_back(s.omega_prime);
    t.couplings.push_back(s.g_prime);
  }
  t.n_norm = d.n_total();
  return build_spin_boson_hamiltonian(t, basis);
}

SparseHamiltonian build_dicke_ising_hamiltonian(const DickeParams& p,
                                                double eta,
                                                const BasisDescriptor& basis) {
  validate_params(p);
  if (!std::isfinite(eta)) throw std::invalid_argument("eta must be finite");
  if (basis.n_spins != p.n_spins) {
    throw std::invalid_argument("basis n_spins does not match params");
  }
  SpinBosonTerms t;
  t.omega = p.omega;
  t.a2_coeff = p.a2_coeff;
  t.fields.assign(p.n_spins, p.omega0);
  t.couplings.assign(p.n_spins, p.g);
  t.n_norm = p.n_spins;
  t.ising_j = eta * p.omega0;
  return build_spin_boson_hamiltonian(t, basis);
}

SparseHamiltonian build_hopfield_hamiltonian(const DickeParams& p,
                                             const TwoBosonBasis& basis) {
  validate_params(p);
  CsrBuilder b(basis.dim);
  for (int na = 0; na <= basis.n_max_a; ++na) {
    for (int nb = 0; nb <= basis.n_max_b; ++nb) {
      const std::size_t i = basis.index(na, nb);
      b.add(i, i, p.omega * na + p.omega0 * nb);
      if (p.g == 0.0 || na == basis.n_max_a) continue;
      const double ra = std::sqrt(na + 1.0);
      // (a^dag)(b^dag + b) from |na, nb>
      if (nb < basis.n_max_b) {
        b.add_symmetric(basis.index(na + 1, nb + 1), i,
                        p.g * ra * std::sqrt(nb + 1.0));
      }
      if (nb > 0) {
        b.add_symmetric(basis.index(na + 1, nb - 1), i,
                        p.g * ra * std::sqrt(static_cast<double>(nb)));
      }
    }
  }
  if (p.a2_coeff != 0.0) {
    const std::size_t stride = static_cast<std::size_t>(basis.n_max_b) + 1;
    for (int nb = 0; nb <= basis.n_max_b; ++nb) {
      add_x_squared(b, p.a2_coeff, basis.n_max_a, stride,
                    static_cast<std::size_t>(nb));
    }
  }
  SparseHamiltonian h;
  h.matrix = b.build();
  h.parity.resize(basis.dim);
  for (std::size_t i = 0; i < basis.dim; ++i) {
    const auto [na, nb] = basis.state(i);
    h.parity[i] = ((na + nb) % 2 == 0) ? 1 : -1;
  }
  return h;
}

}  // namespace dicke::ed
