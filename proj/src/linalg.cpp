#include "fairucb/linalg.hpp"

#include <cmath>

namespace fairucb {

namespace detail {

void check_dim(int expected, std::size_t got, const char* what) {
    if (static_cast<std::size_t>(expected) != got) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch, expected " +
                                    std::to_string(expected) + ", got " + std::to_string(got));
    }
}

}  // namespace detail

double dot(std::span<const double> a, std::span<const double> b) {
    detail::check_dim(static_cast<int>(a.size()), b.size(), "dot");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double l2_norm(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

SpdMatrix SpdMatrix::scaled_identity(int dim, double lambda) {
    if (dim < 1) throw std::invalid_argument("scaled_identity: dim must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("scaled_identity: lambda must be > 0");
    std::vector<double> data(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) data[static_cast<std::size_t>(i) * dim + i] = lambda;
    return SpdMatrix(dim, std::move(data));
}

void SpdMatrix::add_outer(const Vector& x) {
    detail::check_dim(dim_, x.size(), "add_outer");
    for (int i = 0; i < dim_; ++i) {
        double* row_i = data_.data() + static_cast<std::size_t>(i) * dim_;
        const double xi = x[static_cast<std::size_t>(i)];
        for (int j = 0; j < dim_; ++j) row_i[j] += xi * x[static_cast<std::size_t>(j)];
    }
}

void SpdMatrix::subtract_scaled_outer(const Vector& x, double scale) {
    detail::check_dim(dim_, x.size(), "subtract_scaled_outer");
    for (int i = 0; i < dim_; ++i) {
        double* row_i = data_.data() + static_cast<std::size_t>(i) * dim_;
        const double si = scale * x[static_cast<std::size_t>(i)];
        for (int j = 0; j < dim_; ++j) row_i[j] -= si * x[static_cast<std::size_t>(j)];
    }
}

Vector SpdMatrix::mat_vec(const Vector& x) const {
    detail::check_dim(dim_, x.size(), "mat_vec");
    Vector y(static_cast<std::size_t>(dim_), 0.0);
    for (int i = 0; i < dim_; ++i) {
        const double* row_i = row(i);
        double acc = 0.0;
        for (int j = 0; j < dim_; ++j) acc += row_i[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

double SpdMatrix::quad_form(const Vector& x) const {
    detail::check_dim(dim_, x.size(), "quad_form");
    double acc = 0.0;
    for (int i = 0; i < dim_; ++i) {
        const double* row_i = row(i);
        double partial = 0.0;
        for (int j = 0; j < dim_; ++j) partial += row_i[j] * x[static_cast<std::size_t>(j)];
        acc += x[static_cast<std::size_t>(i)] * partial;
    }
    return acc;
}

double SpdMatrix::symmetry_error() const {
    double max_abs = 1.0;
    double max_gap = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            max_abs = std::max(max_abs, std::abs(at(i, j)));
            max_gap = std::max(max_gap, std::abs(at(i, j) - at(j, i)));
        }
    }
    return max_gap / max_abs;
}

SpdMatrix rank1_update(const SpdMatrix& a, const Vector& x) {
    SpdMatrix out = a;
    out.add_outer(x);
    return out;
}

CholeskyFactor::CholeskyFactor(const SpdMatrix& a)
    : dim_(a.dim()), lower_(static_cast<std::size_t>(a.dim()) * a.dim(), 0.0) {
    const int d = dim_;
    for (int j = 0; j < d; ++j) {
        double diag = a.at(j, j);
        const double* lj = lower_.data() + static_cast<std::size_t>(j) * d;
        for (int k = 0; k < j; ++k) diag -= lj[k] * lj[k];
        if (!(diag > 0.0)) {
            throw NumericalError("cholesky: non-positive pivot at column " + std::to_string(j));
        }
        const double ljj = std::sqrt(diag);
        lower_[static_cast<std::size_t>(j) * d + j] = ljj;
        for (int i = j + 1; i < d; ++i) {
            double acc = a.at(i, j);
            const double* li = lower_.data() + static_cast<std::size_t>(i) * d;
            for (int k = 0; k < j; ++k) acc -= li[k] * lj[k];
            lower_[static_cast<std::size_t>(i) * d + j] = acc / ljj;
        }
    }
}

Vector CholeskyFactor::solve(const Vector& b) const {
    detail::check_dim(dim_, b.size(), "cholesky solve");
    const int d = dim_;
    Vector y(b);
    // forward: L y = b
    for (int i = 0; i < d; ++i) {
        const double* li = lower_.data() + static_cast<std::size_t>(i) * d;
        double acc = y[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) acc -= li[k] * y[static_cast<std::size_t>(k)];
        y[static_cast<std::size_t>(i)] = acc / li[i];
    }
    // backward: L^T x = y
    for (int i = d - 1; i >= 0; --i) {
        double acc = y[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < d; ++k) {
            acc -= lower_[static_cast<std::size_t>(k) * d + i] * y[static_cast<std::size_t>(k)];
        }
        y[static_cast<std::size_t>(i)] = acc / lower_[static_cast<std::size_t>(i) * d + i];
    }
    return y;
}

double CholeskyFactor::inverse_quad_form(const Vector& x) const {
    detail::check_dim(dim_, x.size(), "inverse_quad_form");
    const int d = dim_;
    Vector y(x);
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        const double* li = lower_.data() + static_cast<std::size_t>(i) * d;
        double v = y[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) v -= li[k] * y[static_cast<std::size_t>(k)];
        v /= li[i];
        y[static_cast<std::size_t>(i)] = v;
        acc += v * v;
    }
    return acc;
}

Vector solve(const SpdMatrix& a, const Vector& b) { return CholeskyFactor(a).solve(b); }

double weighted_norm(const SpdMatrix& a, const Vector& x) {
    double q = CholeskyFactor(a).inverse_quad_form(x);
    return std::sqrt(std::max(0.0, q));
}

ShermanMorrisonInverse::ShermanMorrisonInverse(int dim, double lambda)
    : inverse_(SpdMatrix::scaled_identity(dim, 1.0 / lambda)) {
    if (!(lambda > 0.0)) throw std::invalid_argument("ShermanMorrisonInverse: lambda must be > 0");
}

void ShermanMorrisonInverse::add_outer(const Vector& x) {
    // (A + x x^T)^{-1} = A^{-1} - (A^{-1} x)(A^{-1} x)^T / (1 + x^T A^{-1} x)
    Vector mx = inverse_.mat_vec(x);
    const double denom = 1.0 + dot(x, mx);
    inverse_.subtract_scaled_outer(mx, 1.0 / denom);
}

}  // namespace fairucb
