#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

enum class MatrixKind { laplacian, signless, adjacency, a_alpha };

std::string_view matrix_kind_name(MatrixKind kind) noexcept;

/// Values within this distance of an optimum count as tied.
inline constexpr double tie_tolerance = 1e-9;

/// Dense symmetric matrix of order <= 64. Writes through set() keep both
/// triangles identical, so symmetry is exact.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order, MatrixKind kind = MatrixKind::adjacency, double alpha = 0.0);

    int order() const noexcept { return n_; }
    MatrixKind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }

    double operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    void set(int i, int j, double value) noexcept
    {
        data_[static_cast<std::size_t>(i * n_ + j)] = value;
        data_[static_cast<std::size_t>(j * n_ + i)] = value;
    }

    double trace() const noexcept;
    /// Largest absolute row sum; bounds the spectral radius.
    double row_sum_bound() const noexcept;

    std::span<const double> data() const noexcept { return data_; }

private:
    int n_;
    MatrixKind kind_;
    double alpha_;
    std::vector<double> data_;
};

struct Spectrum {
    std::vector<double> values;  // ascending
    MatrixKind kind = MatrixKind::adjacency;
    double alpha = 0.0;

    double largest() const { return values.back(); }
    double second_largest() const { return values[values.size() - 2]; }
};

/// L = D - A, Q = D + A, A, or A_alpha = alpha D + (1 - alpha) A.
/// Throws AlphaOutOfRange unless 0 <= alpha <= 1 (checked for a_alpha only).
SymmetricMatrix build_matrix(const Graph& g, MatrixKind kind, double alpha = 0.0);

/// All eigenvalues, ascending, by cyclic Jacobi rotation.
Spectrum eigenvalues(const SymmetricMatrix& m);

/// Low-level kernel: diagonalizes the row-major n x n symmetric matrix held
/// in `work` (destroyed) and writes ascending eigenvalues into `out`.
/// Throws NoConvergence after 64 sweeps.
void jacobi_eigenvalues(std::span<double> work, int n, std::span<double> out);

double algebraic_connectivity(const Graph& g);
double alpha_index(const Graph& g, double alpha);
double second_alpha_eigenvalue(const Graph& g, double alpha);

} // namespace kpath
