// Copyright (c) 2026 the dme authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dme/error.hpp"

namespace dme {

// Dense row-major tensor of 64-bit reals. Rank 1 and 2 are what the model
// uses; the shape vector is kept general.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;

    Tensor(std::vector<std::size_t> s, std::vector<double> d)
        : shape(std::move(s)), data(std::move(d)) {
        if (count(shape) != data.size())
            throw DimensionError("tensor data length " + std::to_string(data.size()) +
                                 " does not match shape " + shape_str());
    }

    static std::size_t count(const std::vector<std::size_t>& s) {
        std::size_t n = 1;
        for (std::size_t d : s) n *= d;
        return s.empty() ? 0 : n;
    }

    static Tensor zeros(std::vector<std::size_t> s) {
        std::size_t n = count(s);
        return Tensor(std::move(s), std::vector<double>(n, 0.0));
    }

    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    static Tensor vector1d(std::vector<double> d) {
        std::size_t n = d.size();
        return Tensor({n}, std::move(d));
    }

    static Tensor matrix(std::size_t r, std::size_t c, std::vector<double> d) {
        return Tensor({r, c}, std::move(d));
    }

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
    std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    std::string shape_str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (i) os << 'x';
            os << shape[i];
        }
        os << ']';
        return os.str();
    }
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_str() +
                             " vs " + b.shape_str());
}

inline void require_finite(const Tensor& t, const char* what) {
    if (!t.all_finite())
        throw NumericError(std::string("non-finite value in ") + what);
}

}  // namespace dme
