// Copyright (c) 2026 the dme authors
// SPDX-License-Identifier: Apache-2.0

#include "dme/kernels.hpp"

#include <cmath>
#include <cstring>

namespace dme::kernels {

namespace serial {

void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c + i * n;
        if (!accumulate)
            for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
        const double* ai = a + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* bp = b + p * n;
            for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
        }
    }
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    for (std::size_t i = 0; i < m; ++i) {
        const double* ai = a + i * k;
        double* ci = c + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double* bj = b + j * k;
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += ai[p] * bj[p];
            ci[j] = accumulate ? ci[j] + acc : acc;
        }
    }
}

void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    // a is [k x m], c[i][j] = sum_p a[p][i] * b[p][j]
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += a[p * m + i] * b[p * n + j];
            ci[j] = accumulate ? ci[j] + acc : acc;
        }
    }
}

static inline double apply1(Unary op, double v) {
    switch (op) {
        case Unary::Tanh: return std::tanh(v);
        case Unary::Sigmoid: return 1.0 / (1.0 + std::exp(-v));
        case Unary::Relu: return v > 0.0 ? v : 0.0;
        case Unary::Abs: return std::fabs(v);
    }
    return 0.0;
}

static inline double apply2(Binary op, double x, double y) {
    switch (op) {
        case Binary::Add: return x + y;
        case Binary::Sub: return x - y;
        case Binary::Mul: return x * y;
    }
    return 0.0;
}

void unary(Unary op, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = apply1(op, x[i]);
}

void binary(Binary op, const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = apply2(op, a[i], b[i]);
}

void max_over_rows(const double* x, double* out, std::size_t* argmax,
                   std::size_t s, std::size_t c) {
    for (std::size_t j = 0; j < c; ++j) {
        double best = x[j];
        std::size_t at = 0;
        for (std::size_t r = 1; r < s; ++r) {
            double v = x[r * c + j];
            if (v > best) {
                best = v;
                at = r;
            }
        }
        out[j] = best;
        if (argmax) argmax[j] = at;
    }
}

}  // namespace serial

// Work below this many scalar ops is not worth a parallel region.
static constexpr std::size_t kGrain = 16384;

void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    const bool par = m > 1 && m * k * n >= kGrain;
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t i = 0; i < m; ++i)
        serial::matmul_nn(a + i * k, b, c + i * n, 1, k, n, accumulate);
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    const bool par = m > 1 && m * k * n >= kGrain;
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t i = 0; i < m; ++i)
        serial::matmul_nt(a + i * k, b, c + i * n, 1, k, n, accumulate);
}

void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n, bool accumulate) {
    // Rows of c are independent; each still scans column i of a serially.
    const bool par = m > 1 && m * k * n >= kGrain;
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += a[p * m + i] * b[p * n + j];
            ci[j] = accumulate ? ci[j] + acc : acc;
        }
    }
}

void unary(serial::Unary op, const double* x, double* out, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kGrain)
    for (std::size_t i = 0; i < n; ++i) out[i] = serial::apply1(op, x[i]);
}

void binary(serial::Binary op, const double* a, const double* b, double* out,
            std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kGrain)
    for (std::size_t i = 0; i < n; ++i) out[i] = serial::apply2(op, a[i], b[i]);
}

void max_over_rows(const double* x, double* out, std::size_t* argmax,
                   std::size_t s, std::size_t c) {
#pragma omp parallel for schedule(static) if (s * c >= kGrain)
    for (std::size_t j = 0; j < c; ++j) {
        double best = x[j];
        std::size_t at = 0;
        for (std::size_t r = 1; r < s; ++r) {
            double v = x[r * c + j];
            if (v > best) {
                best = v;
                at = r;
            }
        }
        out[j] = best;
        if (argmax) argmax[j] = at;
    }
}

}  // namespace dme::kernels
