#pragma once

#include <cstddef>

// Per-backend entry points. Exposed so the equivalence tests can run the
// scalar reference and the SIMD variant side by side; library code goes
// through the dispatched functions in kernels.hpp instead.
namespace rwm::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
double sum_squares(const double* x, std::size_t n);
void ger(double* a, double alpha, const double* x, const double* y,
         std::size_t m, std::size_t n);
void gemm_nn(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
void gemm_tn(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
void gemm_nt(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
void gemv_n(const double* a, const double* x, double* y,
            std::size_t m, std::size_t n);
void gemv_t(const double* a, const double* x, double* y,
            std::size_t m, std::size_t n);

} // namespace rwm::kernels::scalar

#if defined(__x86_64__) || defined(_M_X64)
#define RWM_KERNELS_HAVE_AVX2 1
namespace rwm::kernels::avx2 {

double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
double sum_squares(const double* x, std::size_t n);
void ger(double* a, double alpha, const double* x, const double* y,
         std::size_t m, std::size_t n);
void gemm_nn(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
void gemm_tn(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
void gemm_nt(const double* a, const double* b, double* c,
             std::size_t m, std::size_t k, std::size_t n);
void gemv_n(const double* a, const double* x, double* y,
            std::size_t m, std::size_t n);
void gemv_t(const double* a, const double* x, double* y,
            std::size_t m, std::size_t n);

} // namespace rwm::kernels::avx2
#else
#define RWM_KERNELS_HAVE_AVX2 0
#endif
