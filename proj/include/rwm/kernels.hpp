#pragma once

#include <cstddef>
#include <string>

// Dense double-precision kernels behind all matrix/vector arithmetic.
// Every operation has a scalar reference implementation and, on x86-64
// with AVX2+FMA, a vectorized variant. The backend is picked once at
// runtime (overridable via the RWM_KERNELS env var or force_backend).
namespace rwm::kernels {

enum class Backend { scalar, avx2 };

// Backend selected for this process. Resolution order: force_backend()
// call, RWM_KERNELS env var ("scalar", "avx2", "auto"), CPU detection.
Backend active_backend();
const char* backend_name(Backend b);

// Test/benchmark hook. Throws ConfigError if the requested backend is not
// supported on this machine.
void force_backend(Backend b);

// ---- vector primitives ----
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n); // y += alpha*x
void scale(double alpha, double* x, std::size_t n);                 // x *= alpha
double sum_squares(const double* x, std::size_t n);

// ---- matrix primitives (row-major, no aliasing between inputs/outputs) ----
// A += alpha * x * y^T, A is m x n
void ger(double* a, double alpha, const double* x, const double* y,
         std::size_t m, std::size_t n);
// C = A * B        A: m x k, B: k x n, C: m x n
void gemm_nn(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
// C = A^T * B      A: k x m, B: k x n, C: m x n
void gemm_tn(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
// C = A * B^T      A: m x k, B: n x k, C: m x n
void gemm_nt(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
// y = A x          A: m x n, x: n, y: m
void gemv_n(const double* a, const double* x, double* y,
            std::size_t m, std::size_t n);
// y = A^T x        A: m x n, x: m, y: n
void gemv_t(const double* a, const double* x, double* y,
            std::size_t m, std::size_t n);

} // namespace rwm::kernels
