// Copyright (c) 2026 the dme authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace dme::kernels {

// Serial reference implementations. These are the ground truth the OpenMP
// kernels are tested against, and they are what the benchmark compares.
namespace serial {

// C[m x n] = A[m x k] * B[k x n]          (accumulate: C += ...)
void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate);

// C[m x n] = A[m x k] * B[n x k]^T
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate);

// C[m x n] = A[k x m]^T * B[k x n]
void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate);

enum class Unary { Tanh, Sigmoid, Relu, Abs };
enum class Binary { Add, Sub, Mul };

void unary(Unary op, const double* x, double* out, std::size_t n);
void binary(Binary op, const double* a, const double* b, double* out, std::size_t n);

// out[c] = max over rows of x[s x c]; argmax[c] = first row attaining it.
void max_over_rows(const double* x, double* out, std::size_t* argmax,
                   std::size_t s, std::size_t c);

}  // namespace serial

// OpenMP-parallel kernels. Work is split only across independent output
// elements (rows of C, elements of pointwise maps); every element is still
// accumulated in the serial order, so results are bit-identical to the
// serial reference for any thread count.
void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate);
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate);
void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate);

void unary(serial::Unary op, const double* x, double* out, std::size_t n);
void binary(serial::Binary op, const double* a, const double* b, double* out,
            std::size_t n);

void max_over_rows(const double* x, double* out, std::size_t* argmax,
                   std::size_t s, std::size_t c);

}  // namespace dme::kernels
