#include "hcwalk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcwalk::kernels {

namespace {
// Rows per work item in the output sweep. Any block size gives the same bits
// because each out[a] accumulates over n in ascending order regardless.
constexpr int kRowBlock = 256;
}  // namespace

void spectral_propagate(const Eigen::MatrixXd& modes, const Eigen::VectorXd& energies,
                        double tau, const Eigen::VectorXcd& in, Eigen::VectorXcd& out,
                        Exec exec) {
  const int dim = static_cast<int>(modes.rows());
  if (modes.cols() != dim || energies.size() != dim || in.size() != dim)
    throw std::invalid_argument("spectral_propagate: dimension mismatch");
  out.resize(dim);

  const double* v = modes.data();  // column-major, column n = eigenvector n
  Eigen::VectorXcd coeff(dim);

  // coeff_n = exp(-i E_n tau) <n|psi>
#pragma omp parallel for schedule(static) if (exec == Exec::omp)
  for (int n = 0; n < dim; ++n) {
    const double* col = v + static_cast<std::size_t>(n) * dim;
    double re = 0.0, im = 0.0;
    for (int a = 0; a < dim; ++a) {
      re += col[a] * in[a].real();
      im += col[a] * in[a].imag();
    }
    const double pr = std::cos(energies[n] * tau);
    const double pi = -std::sin(energies[n] * tau);
    coeff[n] = {re * pr - im * pi, re * pi + im * pr};
  }

  // out = V * coeff, swept column by column over each block of rows so the
  // matrix is streamed contiguously.
  const int nblocks = (dim + kRowBlock - 1) / kRowBlock;
#pragma omp parallel for schedule(static) if (exec == Exec::omp)
  for (int b = 0; b < nblocks; ++b) {
    const int a0 = b * kRowBlock;
    const int a1 = std::min(dim, a0 + kRowBlock);
    for (int a = a0; a < a1; ++a) out[a] = {0.0, 0.0};
    for (int n = 0; n < dim; ++n) {
      const double* col = v + static_cast<std::size_t>(n) * dim;
      const std::complex<double> cn = coeff[n];
      for (int a = a0; a < a1; ++a) out[a] += col[a] * cn;
    }
  }
}

CsrMatrix csr_from_dense(const Eigen::MatrixXd& dense) {
  CsrMatrix a;
  a.rows = static_cast<int>(dense.rows());
  a.cols = static_cast<int>(dense.cols());
  a.row_ptr.assign(a.rows + 1, 0);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      const double x = dense(r, c);
      if (x != 0.0) {
        a.col_idx.push_back(c);
        a.values.push_back(x);
      }
    }
    a.row_ptr[r + 1] = static_cast<int>(a.values.size());
  }
  return a;
}

void csr_matvec(const CsrMatrix& a, const std::complex<double>* x,
                std::complex<double>* y, Exec exec) {
#pragma omp parallel for schedule(static) if (exec == Exec::omp)
  for (int r = 0; r < a.rows; ++r) {
    double re = 0.0, im = 0.0;
    for (int k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
      const double w = a.values[k];
      const std::complex<double> xv = x[a.col_idx[k]];
      re += w * xv.real();
      im += w * xv.imag();
    }
    y[r] = {re, im};
  }
}

}  // namespace hcwalk::kernels
