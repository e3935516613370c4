#pragma once
// Dense brute-force constructions used as independent oracles. Built from
// explicit Kronecker products of small matrices, no shared code with the
// sparse builders.

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "dicke/ed/sparse.hpp"

namespace oracle {

using Mat = Eigen::MatrixXd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat annihilation(int n_max) {
  Mat a = Mat::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

// basis order {down, up}
inline Mat sigma_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat sigma_z() { Mat m(2, 2); m << -1, 0, 0, 1; return m; }
inline Mat s_plus() { Mat m(2, 2); m << 0, 0, 1, 0; return m; }

// op on spin q inside spin_{N-1} x ... x spin_0, so the flat index is the
// bit mask with bit q = spin q
inline Mat on_site(const Mat& op, int q, int n_spins) {
  Mat out = Mat::Identity(1, 1);
  for (int s = n_spins - 1; s >= 0; --s) {
    out = kron(out, s == q ? op : Mat(Mat::Identity(2, 2)));
  }
  return out;
}

struct SpinBoson {
  double omega{1};
  double a2{0};
  std::vector<double> fields;
  std::vector<double> couplings;
  double n_norm{1};
  double j{0};
  int n_max{1};
};

inline Mat spin_boson(const SpinBoson& s) {
  const int ns = static_cast<int>(s.fields.size());
  const Mat a = annihilation(s.n_max);
  const Mat ib = Mat::Identity(s.n_max + 1, s.n_max + 1);
  const Mat is = Mat::Identity(Eigen::Index(1) << ns, Eigen::Index(1) << ns);
  const Mat x = a + a.transpose();
  Mat h = kron(s.omega * a.transpose() * a + s.a2 * x * x, is);
  for (int q = 0; q < ns; ++q) {
    h += kron(ib, 0.5 * s.fields[q] * on_site(sigma_z(), q, ns));
    h += s.couplings[q] / std::sqrt(s.n_norm) * kron(x, on_site(sigma_x(), q, ns));
  }
  if (s.j != 0) {
    for (int q = 0; q < ns; ++q) {
      const int r = (q + 1) % ns;
      // 4 J Sx Sx = J sigma_x sigma_x
      h += s.j * kron(ib, on_site(sigma_x(), q, ns) * on_site(sigma_x(), r, ns));
    }
  }
  return h;
}

inline Mat hopfield(double omega, double omega0, double g, double a2,
                    int n_max_a, int n_max_b) {
  const Mat a = annihilation(n_max_a), b = annihilation(n_max_b);
  const Mat ia = Mat::Identity(n_max_a + 1, n_max_a + 1);
  const Mat ib = Mat::Identity(n_max_b + 1, n_max_b + 1);
  const Mat xa = a + a.transpose(), xb = b + b.transpose();
  return kron(omega * a.transpose() * a + a2 * xa * xa, ib) +
         kron(ia, omega0 * b.transpose() * b) + g * kron(xa, xb);
}

inline Mat to_dense(const dicke::ed::CsrMatrix& m) {
  Mat d = Mat::Zero(Eigen::Index(m.n), Eigen::Index(m.n));
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k)
      d(Eigen::Index(i), Eigen::Index(m.col[k])) += m.val[k];
  return d;
}

// generator w_b (a^dag - a) - w_s sum_i (S+_i - S-_i)
inline Mat quadrature(int n_spins, int n_max, double wb, double ws) {
  const Mat a = annihilation(n_max);
  const Mat ib = Mat::Identity(n_max + 1, n_max + 1);
  const Eigen::Index sd = Eigen::Index(1) << n_spins;
  Mat m = wb * kron(Mat(a.transpose() - a), Mat::Identity(sd, sd));
  const Mat sp = s_plus();
  for (int q = 0; q < n_spins; ++q) {
    m -= ws * kron(ib, on_site(Mat(sp - sp.transpose()), q, n_spins));
  }
  return m;
}

// Var of O = i M in state v: <O^2> - <O>^2 = -v.M^2 v + (v.M v)^2
inline double variance(const Mat& m, const Eigen::VectorXd& v) {
  const double mean = v.dot(m * v);
  return -v.dot(m * (m * v)) + mean * mean;
}

inline double lowest(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

}  // namespace oracle
