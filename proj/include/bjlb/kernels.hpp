#pragma once

#include <cstddef>
#include <span>

#include "bjlb/scalar.hpp"

namespace bjlb::kernels {

// Weighted reductions over atom arrays. Each kernel has a serial reference
// implementation and an OpenMP one; the unsuffixed entry points dispatch by
// size so that small inputs stay on the serial path and produce the same
// bytes on every run.

std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t n);

// sum_i w_i v_i
double weighted_sum_serial(std::span<const double> w, std::span<const double> v);
double weighted_sum_parallel(std::span<const double> w, std::span<const double> v);
double weighted_sum(std::span<const double> w, std::span<const double> v);

// sum_i w_i v_i^p, v_i >= 0
double weighted_pow_sum_serial(std::span<const double> w, std::span<const double> v, double p);
double weighted_pow_sum_parallel(std::span<const double> w, std::span<const double> v, double p);
double weighted_pow_sum(std::span<const double> w, std::span<const double> v, double p);

// sum_i w_i z_i
cplx weighted_csum_serial(std::span<const double> w, std::span<const cplx> z);
cplx weighted_csum_parallel(std::span<const double> w, std::span<const cplx> z);
cplx weighted_csum(std::span<const double> w, std::span<const cplx> z);

} // namespace bjlb::kernels
