#include "gabor/dual.hpp"

#include <Eigen/Dense>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <string>
#include <utility>

#include "gabor/core.hpp"

namespace gabor {

namespace {

using Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix to_eigen(const cvec& row_major, std::size_t rows, std::size_t cols) {
    Matrix out(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out(static_cast<Index>(r), static_cast<Index>(c)) = row_major[r * cols + c];
        }
    }
    return out;
}

cvec from_eigen(const Vector& v) {
    cvec out(static_cast<std::size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i) {
        out[static_cast<std::size_t>(i)] = v(i);
    }
    return out;
}

// Same relative threshold as analysis_matrix_rank.
std::size_t numerical_rank(const Matrix& m) {
    Eigen::BDCSVD<Matrix> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0) {
        return 0;
    }
    const double cutoff = 1e-10 * sigma(0) * static_cast<double>(std::max(m.rows(), m.cols()));
    std::size_t rank = 0;
    for (Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

void check_reconstructing(const Lattice& lat) {
    if (!lat.reconstructing()) {
        throw UnsupportedLatticeError("lattice density " + std::to_string(lat.density()) +
                                      " > 1 has no dual windows");
    }
}

struct ConstraintSolver {
    Matrix rows;
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod;

    ConstraintSolver(const Window& p, const Lattice& lat) {
        check_reconstructing(lat);
        WexlerRazSystem system(p, lat);
        rows = to_eigen(system.matrix(), system.rows(), system.cols());
        if (numerical_rank(rows) < system.rows()) {
            throw SingularSystemError(
                "constraint rows are rank deficient; the atoms of this window do not span");
        }
        cod.compute(rows);
    }

    Vector min_norm() const {
        Vector target = Vector::Zero(rows.rows());
        target(0) = cplx(1.0, 0.0);
        return cod.solve(target);
    }

    // Orthogonal projection onto the null space of the constraint rows.
    Vector project_null(const Vector& v) const { return v - cod.solve(rows * v); }
};

}  // namespace

LinearOperator::LinearOperator(std::size_t dim, cvec row_major)
    : dim_(dim), data_(std::move(row_major)) {
    if (dim == 0) {
        throw DimensionError("operator dimension must be positive");
    }
    if (data_.size() != dim * dim) {
        throw DimensionError("operator data size " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    detail::require_finite(data_, "operator");
}

LinearOperator LinearOperator::identity(std::size_t dim) {
    return scaled_identity(dim, cplx(1.0, 0.0));
}

LinearOperator LinearOperator::zero(std::size_t dim) {
    return LinearOperator(dim, cvec(dim * dim, cplx(0.0, 0.0)));
}

LinearOperator LinearOperator::scaled_identity(std::size_t dim, cplx scale) {
    cvec data(dim * dim, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        data[i * dim + i] = scale;
    }
    return LinearOperator(dim, std::move(data));
}

cvec LinearOperator::apply(const cvec& v) const {
    if (v.size() != dim_) {
        throw DimensionError("operator dimension " + std::to_string(dim_) +
                             " does not match vector length " + std::to_string(v.size()));
    }
    cvec out(dim_, cplx(0.0, 0.0));
    for (std::size_t r = 0; r < dim_; ++r) {
        cplx acc(0.0, 0.0);
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += data_[r * dim_ + c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

WexlerRazSystem::WexlerRazSystem(const Window& p, const Lattice& lat) {
    if (p.length() != lat.L()) {
        throw DimensionError("window length " + std::to_string(p.length()) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
    const std::size_t L = lat.L();
    const std::size_t M = lat.M();
    const std::size_t a = lat.a();
    rows_ = a * (L / M);
    cols_ = L;
    matrix_.assign(rows_ * cols_, cplx(0.0, 0.0));
    target_.assign(rows_, cplx(0.0, 0.0));
    target_[0] = cplx(1.0, 0.0);

    const double scale = static_cast<double>(M) / static_cast<double>(a);
    for (std::size_t q = 0; q < L / M; ++q) {
        const std::size_t shift = (q * M) % L;
        for (std::size_t r = 0; r < a; ++r) {
            const std::size_t row = q * a + r;
            for (std::size_t l = 0; l < L; ++l) {
                const double angle =
                    -2.0 * M_PI * static_cast<double>((r * l) % a) / static_cast<double>(a);
                matrix_[row * cols_ + l] = scale * std::conj(p.values()[(l + L - shift) % L]) *
                                           cplx(std::cos(angle), std::sin(angle));
            }
        }
    }
}

LinearOperator frame_operator(const Window& p, const Lattice& lat) {
    if (p.length() != lat.L()) {
        throw DimensionError("window length " + std::to_string(p.length()) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
    const std::size_t L = lat.L();
    Matrix s = Matrix::Zero(static_cast<Index>(L), static_cast<Index>(L));
    for (std::size_t n = 0; n < lat.N(); ++n) {
        for (std::size_t m = 0; m < lat.M(); ++m) {
            const ComplexSignal atom = gabor_atom(p, lat, n, m);
            Vector v(static_cast<Index>(L));
            for (std::size_t l = 0; l < L; ++l) {
                v(static_cast<Index>(l)) = atom[l];
            }
            s.noalias() += v * v.adjoint();
        }
    }
    cvec data(L * L);
    for (std::size_t r = 0; r < L; ++r) {
        for (std::size_t c = 0; c < L; ++c) {
            data[r * L + c] = s(static_cast<Index>(r), static_cast<Index>(c));
        }
    }
    return LinearOperator(L, std::move(data));
}

Window canonical_dual(const Window& p, const Lattice& lat) {
    check_reconstructing(lat);
    const std::size_t L = lat.L();
    const LinearOperator s = frame_operator(p, lat);
    Matrix sm = to_eigen(s.data(), L, L);
    if (numerical_rank(sm) < L) {
        throw SingularSystemError("frame operator is singular; no canonical dual exists");
    }
    Vector pv(static_cast<Index>(L));
    for (std::size_t l = 0; l < L; ++l) {
        pv(static_cast<Index>(l)) = p.values()[l];
    }
    const Vector gamma = sm.ldlt().solve(pv);
    return Window(from_eigen(gamma), WindowRole::analysis);
}

Window min_norm_dual(const Window& p, const Lattice& lat) {
    ConstraintSolver solver(p, lat);
    return Window(from_eigen(solver.min_norm()), WindowRole::analysis);
}

Window most_orthogonal_like_dual(const Window& p, const Lattice& lat) {
    ConstraintSolver solver(p, lat);
    Vector pv(static_cast<Index>(p.length()));
    for (std::size_t l = 0; l < p.length(); ++l) {
        pv(static_cast<Index>(l)) = p.values()[l];
    }
    const Vector gamma = solver.min_norm() + solver.project_null(pv);
    return Window(from_eigen(gamma), WindowRole::analysis);
}

Window generalized_dual(const Window& p, const Lattice& lat, const LinearOperator& op) {
    if (op.dim() != lat.L()) {
        throw DimensionError("operator dimension " + std::to_string(op.dim()) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
    ConstraintSolver solver(p, lat);
    const cvec transformed = op.apply(p.values());
    Vector tv(static_cast<Index>(transformed.size()));
    for (std::size_t l = 0; l < transformed.size(); ++l) {
        tv(static_cast<Index>(l)) = transformed[l];
    }
    const Vector gamma = solver.min_norm() + solver.project_null(tv);
    return Window(from_eigen(gamma), WindowRole::analysis);
}

}  // namespace gabor
