#pragma once

namespace hcwalk::detail {

// OpenBLAS's own thread pool oversubscribes when its routines run inside an
// OpenMP region, so pin it to one thread around parallel ensembles. Resolved
// lazily via dlsym; everything degrades to a no-op under a plain LAPACK.
int blas_thread_count();       // 0 when not resolvable
void set_blas_threads(int n);  // ignored when not resolvable

struct BlasSingleThreadGuard {
  int saved;
  BlasSingleThreadGuard();
  ~BlasSingleThreadGuard();
};

}  // namespace hcwalk::detail
