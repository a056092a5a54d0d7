#include "kpath/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kpath/error.hpp"

namespace kpath {

namespace {

constexpr int max_sweeps = 64;
constexpr double relative_off_tolerance = 1e-12;

void check_alpha(double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw Error(Errc::alpha_out_of_range, "alpha " + std::to_string(alpha) + " outside [0, 1]");
}

} // namespace

std::string_view matrix_kind_name(MatrixKind kind) noexcept
{
    switch (kind) {
    case MatrixKind::laplacian: return "laplacian";
    case MatrixKind::signless: return "signless";
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::a_alpha: return "a-alpha";
    }
    return "unknown";
}

SymmetricMatrix::SymmetricMatrix(int order, MatrixKind kind, double alpha)
    : n_(order), kind_(kind), alpha_(alpha), data_(static_cast<std::size_t>(order * order), 0.0)
{
    if (order < 0 || order > max_order)
        throw Error(Errc::order_too_large, "matrix order " + std::to_string(order) + " outside 0..64");
}

double SymmetricMatrix::trace() const noexcept
{
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::row_sum_bound() const noexcept
{
    double bound = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
        bound = std::max(bound, row);
    }
    return bound;
}

SymmetricMatrix build_matrix(const Graph& g, MatrixKind kind, double alpha)
{
    if (kind == MatrixKind::a_alpha)
        check_alpha(alpha);
    else
        alpha = 0.0;

    double diag_weight = 1.0;
    double off_weight = 1.0;
    switch (kind) {
    case MatrixKind::laplacian: off_weight = -1.0; break;
    case MatrixKind::signless: break;
    case MatrixKind::adjacency: diag_weight = 0.0; break;
    case MatrixKind::a_alpha:
        diag_weight = alpha;
        off_weight = 1.0 - alpha;
        break;
    }

    const int n = g.order();
    SymmetricMatrix m(n, kind, alpha);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, diag_weight * g.degree(i));
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) m.set(i, j, off_weight);
    }
    return m;
}

void jacobi_eigenvalues(std::span<double> work, int n, std::span<double> out)
{
    auto a = [&](int i, int j) -> double& { return work[static_cast<std::size_t>(i * n + j)]; };

    double total = 0.0;
    for (int i = 0; i < n * n; ++i) total += work[static_cast<std::size_t>(i)] * work[static_cast<std::size_t>(i)];
    const double threshold = relative_off_tolerance * std::sqrt(total);

    auto off_norm = [&] {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() > threshold) {
        if (++sweep > max_sweeps)
            throw Error(Errc::no_convergence, "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    const double new_rp = arp - s * (arq + tau * arp);
                    const double new_rq = arq + s * (arp - tau * arq);
                    a(r, p) = a(p, r) = new_rp;
                    a(r, q) = a(q, r) = new_rq;
                }
            }
        }
    }

    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a(i, i);
    std::sort(out.begin(), out.begin() + n);
}

Spectrum eigenvalues(const SymmetricMatrix& m)
{
    std::vector<double> work(m.data().begin(), m.data().end());
    Spectrum s;
    s.values.resize(static_cast<std::size_t>(m.order()));
    s.kind = m.kind();
    s.alpha = m.alpha();
    jacobi_eigenvalues(work, m.order(), s.values);
    return s;
}

double algebraic_connectivity(const Graph& g)
{
    if (g.order() < 2) throw Error(Errc::invalid_order, "algebraic connectivity needs at least 2 vertices");
    return eigenvalues(build_matrix(g, MatrixKind::laplacian)).values[1];
}

double alpha_index(const Graph& g, double alpha)
{
    if (g.order() < 1) throw Error(Errc::invalid_order, "empty graph");
    return eigenvalues(build_matrix(g, MatrixKind::a_alpha, alpha)).largest();
}

double second_alpha_eigenvalue(const Graph& g, double alpha)
{
    if (g.order() < 2) throw Error(Errc::invalid_order, "second eigenvalue needs at least 2 vertices");
    return eigenvalues(build_matrix(g, MatrixKind::a_alpha, alpha)).second_largest();
}

} // namespace kpath
