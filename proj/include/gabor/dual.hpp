#pragma once

#include "gabor/types.hpp"

namespace gabor {

// Dense L x L complex operator acting on windows.
class LinearOperator {
  public:
    LinearOperator(std::size_t dim, cvec row_major);

    static LinearOperator identity(std::size_t dim);
    static LinearOperator zero(std::size_t dim);
    static LinearOperator scaled_identity(std::size_t dim, cplx scale);

    std::size_t dim() const { return dim_; }
    const cplx& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    cplx& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const cvec& data() const { return data_; }

    cvec apply(const cvec& v) const;

  private:
    std::size_t dim_;
    cvec data_;
};

// Biorthogonality constraints as a linear system in the analysis window:
// row (q, r) applies
//
//   gamma -> (M/a) * sum_l gamma[l] * conj(p[(l - q*M) mod L]) * exp(-2*pi*i*r*l/a)
//
// and the target is 1 at (q, r) = (0, 0), 0 elsewhere. There are a*L/M
// rows against L unknowns, so oversampled lattices leave an affine family
// of solutions.
class WexlerRazSystem {
  public:
    WexlerRazSystem(const Window& p, const Lattice& lat);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const cplx& at(std::size_t row, std::size_t col) const { return matrix_[row * cols_ + col]; }
    const cvec& matrix() const { return matrix_; }
    const cvec& target() const { return target_; }

  private:
    std::size_t rows_;
    std::size_t cols_;
    cvec matrix_;
    cvec target_;
};

// Frame operator S = sum over all M*N atoms of atom * atom^H; Hermitian
// positive semidefinite, and positive definite exactly when the atom
// family spans.
LinearOperator frame_operator(const Window& p, const Lattice& lat);

// Canonical dual S^{-1} p via the frame operator. Kept as an independent
// route for cross-checking the constrained solvers; the solvers below
// never call it.
Window canonical_dual(const Window& p, const Lattice& lat);

// Least-Euclidean-norm solution of the biorthogonality constraints,
// computed by a pivoted orthogonal decomposition of the constraint rows
// (no normal equations). Coincides with the canonical dual whenever the
// frame operator is invertible.
Window min_norm_dual(const Window& p, const Lattice& lat);

// The gamma minimizing ||gamma - p|| subject to the constraints:
// the minimum-norm solution plus the projection of p onto the null space
// of the constraint rows. The projection term always vanishes -- p is
// itself (a multiple of the conjugate of) a constraint row -- so this
// equals min_norm_dual; both routes are kept and computed independently.
Window most_orthogonal_like_dual(const Window& p, const Lattice& lat);

// min ||gamma - A p|| subject to the constraints: the minimum-norm
// solution plus the null-space projection of A*p. For A = 0 and A = I
// this reproduces min_norm_dual exactly.
Window generalized_dual(const Window& p, const Lattice& lat, const LinearOperator& op);

}  // namespace gabor
