#pragma once

#include <Eigen/Dense>

#include "sps/types.hpp"

namespace sps {

/// Unnormalized 2-D DFT: x_hat(k,l) = sum_{a,b} x(a,b) exp(-2*pi*i*(k*a + l*b)/n).
/// Satisfies F^H F = N * Identity with N = n^2.
Spectrum dft2(const Image& image);

/// Real part of the unnormalized inverse transform F^H applied to a spectrum.
Image idft2_real(const Spectrum& spectrum);

/// A x = S F x: sample the unnormalized spectrum at the pattern indices.
Measurement forward(const SamplingPattern& pattern, const Image& image);

/// A^H y = Re(F^H S^T y): zero-fill the sampled values and back-transform.
/// Adjoint of `forward` under <z1,z2>_C = Re(z1^H z2) on measurements.
Image adjoint(const SamplingPattern& pattern, const Measurement& meas);

/// Circular convolution with the 5-point Laplacian stencil
/// [[0,1,0],[1,-4,1],[0,1,0]], periodic boundaries. Requires n >= 3.
Image laplacian_apply(const Image& image);

/// Symbol of the periodic 5-point Laplacian:
/// d_hat(k,l) = 2cos(2*pi*k/n) + 2cos(2*pi*l/n) - 4, as a flat n^2 grid.
Eigen::VectorXd laplacian_symbol(int n);

/// Dense real-linear materialization of A: 2L x N matrix D such that
/// D * vec(image) = [Re(forward); Im(forward)] (first L rows real parts,
/// last L rows imaginary parts). Oracle only; guarded to n <= 32.
Eigen::MatrixXd materialize_dense(const SamplingPattern& pattern);

/// True when the measurement respects conjugate symmetry: values at mirrored
/// index pairs are conjugates and self-mirrored entries are real.
bool hermitian_consistent(const SamplingPattern& pattern, const Measurement& meas,
                          double tol = 1e-9);

}  // namespace sps
