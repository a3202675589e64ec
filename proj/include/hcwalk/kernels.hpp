#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace hcwalk {

// Execution policy for the data-parallel kernels. `serial` is the reference
// implementation; `omp` runs the same loops under OpenMP. Parallelism is only
// ever over independent output elements with a fixed per-element accumulation
// order, so both policies produce bitwise-identical results.
enum class Exec { serial, omp };

namespace kernels {

// out = V * diag(exp(-i*E*tau)) * V^T * in, with V real orthonormal
// (columns = eigenvectors) and E the matching eigenvalues.
void spectral_propagate(const Eigen::MatrixXd& modes, const Eigen::VectorXd& energies,
                        double tau, const Eigen::VectorXcd& in, Eigen::VectorXcd& out,
                        Exec exec = Exec::omp);

// Compressed sparse rows, real entries. Pattern is fixed at construction.
struct CsrMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_ptr;  // size rows+1
  std::vector<int> col_idx;
  std::vector<double> values;

  std::size_t nonzeros() const { return values.size(); }
};

// Keeps exactly the entries that are != 0.0.
CsrMatrix csr_from_dense(const Eigen::MatrixXd& dense);

// y = A*x with complex x, y.
void csr_matvec(const CsrMatrix& a, const std::complex<double>* x,
                std::complex<double>* y, Exec exec = Exec::omp);

}  // namespace kernels
}  // namespace hcwalk
