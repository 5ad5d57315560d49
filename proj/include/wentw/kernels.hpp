#pragma once

#include "wentw/matrix.hpp"

// Hot loops of the exact linear algebra. Each kernel comes as a serial
// reference and an OpenMP version; both must produce identical results.
namespace wentw::kernels {

Matrix multiply_serial(const Matrix& a, const Matrix& b);
Matrix multiply_parallel(const Matrix& a, const Matrix& b);

RrefResult rref_serial(const Matrix& m);
RrefResult rref_parallel(const Matrix& m);

/// Work size (rows * inner * cols) above which Matrix dispatches to the
/// parallel kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t(1) << 18;

}  // namespace wentw::kernels
