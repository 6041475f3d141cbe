#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/matrix.hpp"
#include "hodgescreen/exact/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hodge {

enum class ClassicalKind { gl, sl, so, sp, gsp, go, diag_torus };

inline std::string_view to_string(ClassicalKind k) {
    switch (k) {
    case ClassicalKind::gl: return "gl";
    case ClassicalKind::sl: return "sl";
    case ClassicalKind::so: return "so";
    case ClassicalKind::sp: return "sp";
    case ClassicalKind::gsp: return "gsp";
    case ClassicalKind::go: return "go";
    case ClassicalKind::diag_torus: return "diag_torus";
    }
    return "?";
}

inline std::optional<ClassicalKind> parse_classical_kind(std::string_view s) {
    for (auto k : {ClassicalKind::gl, ClassicalKind::sl, ClassicalKind::so, ClassicalKind::sp, ClassicalKind::gsp,
                   ClassicalKind::go, ClassicalKind::diag_torus})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

inline QMatrix bracket(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

namespace detail {

inline Vec<Rational> flatten(const QMatrix& m) { return m.entries(); }

inline QMatrix unflatten(const Vec<Rational>& v, std::size_t n) { return QMatrix(n, n, v); }

} // namespace detail

// A Lie subalgebra of gl_N(Q), given by a basis of N x N matrices. The basis is
// linearly independent and closed under the commutator bracket; both are
// checked when the algebra is built.
class MatLieAlgebra {
public:
    // Validates independence and closure. Throws DomainError on a dependent
    // basis and NotClosedError naming the first offending pair.
    static MatLieAlgebra from_basis(std::vector<QMatrix> basis, std::size_t ambient_dim, std::string name = "custom") {
        for (const auto& b : basis)
            if (b.rows() != ambient_dim || b.cols() != ambient_dim)
                throw DomainError("basis matrix has shape " + std::to_string(b.rows()) + "x" +
                                  std::to_string(b.cols()) + ", expected " + std::to_string(ambient_dim) + "x" +
                                  std::to_string(ambient_dim));
        MatLieAlgebra g(std::move(basis), ambient_dim, std::move(name));
        if (g.data_->solver.size() != g.dim()) throw DomainError("basis of " + g.name() + " is linearly dependent");
        if (auto bad = g.closure_violation()) throw NotClosedError(bad->first, bad->second);
        return g;
    }

    std::size_t ambient_dim() const { return data_->ambient; }
    std::size_t dim() const { return data_->basis.size(); }
    const std::vector<QMatrix>& basis() const { return data_->basis; }
    const std::string& name() const { return data_->name; }

    // Coordinates of x in the basis, or nullopt when x is not in the algebra.
    std::optional<Vec<Rational>> coordinates(const QMatrix& x) const {
        if (x.rows() != ambient_dim() || x.cols() != ambient_dim()) return std::nullopt;
        return data_->solver.coordinates(detail::flatten(x));
    }

    bool contains(const QMatrix& x) const { return coordinates(x).has_value(); }

    QMatrix element(const Vec<Rational>& coords) const {
        QMatrix acc(ambient_dim(), ambient_dim());
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!hodge::is_zero(coords[i])) acc = acc + basis()[i].scaled(coords[i]);
        return acc;
    }

    // First pair (i, j), i < j, whose bracket leaves the span.
    std::optional<std::pair<std::size_t, std::size_t>> closure_violation() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j)
                if (!contains(bracket(basis()[i], basis()[j]))) return std::make_pair(i, j);
        return std::nullopt;
    }

private:
    struct Data {
        std::size_t ambient;
        std::vector<QMatrix> basis;
        std::string name;
        SpanSolver<Rational> solver;
    };

    MatLieAlgebra(std::vector<QMatrix> basis, std::size_t ambient, std::string name) {
        std::vector<Vec<Rational>> flat;
        flat.reserve(basis.size());
        for (const auto& b : basis) flat.push_back(detail::flatten(b));
        SpanSolver<Rational> solver(flat, ambient * ambient);
        data_ = std::make_shared<const Data>(Data{ambient, std::move(basis), std::move(name), std::move(solver)});
    }

    std::shared_ptr<const Data> data_;
};

// Default invariant forms: antidiagonal ones (symmetric) or antidiagonal
// +1 / -1 split at the middle (antisymmetric).
inline QMatrix default_form(ClassicalKind kind, std::size_t n) {
    QMatrix J(n, n);
    const bool alternating = kind == ClassicalKind::sp || kind == ClassicalKind::gsp;
    if (alternating && n % 2) throw DomainError("alternating form needs even dimension, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) J(i, n - 1 - i) = (alternating && i >= n / 2) ? Rational(-1) : Rational(1);
    return J;
}

namespace detail {

inline void check_form(ClassicalKind kind, const QMatrix& J, std::size_t n) {
    if (J.rows() != n || J.cols() != n)
        throw DomainError("form must be " + std::to_string(n) + "x" + std::to_string(n));
    const bool alternating = kind == ClassicalKind::sp || kind == ClassicalKind::gsp;
    const QMatrix Jt = J.transposed();
    if (alternating && !(Jt == J.scaled(Rational(-1))))
        throw DomainError(std::string(to_string(kind)) + " needs an antisymmetric form");
    if (!alternating && !(Jt == J)) throw DomainError(std::string(to_string(kind)) + " needs a symmetric form");
    if (hodge::is_zero(determinant(J))) throw DomainError("form is singular");
}

// Rows of the linear system X^T J + J X - c J = 0 in the unknowns
// (x_00, ..., x_{n-1,n-1}[, c]).
inline QMatrix form_equations(const QMatrix& J, bool similitude) {
    const std::size_t n = J.rows();
    const std::size_t unknowns = n * n + (similitude ? 1 : 0);
    QMatrix sys(n * n, unknowns);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t row = a * n + b;
            // (X^T J)_{ab} = sum_k x_{ka} J_{kb};  (J X)_{ab} = sum_k J_{ak} x_{kb}
            for (std::size_t k = 0; k < n; ++k) {
                sys(row, k * n + a) += J(k, b);
                sys(row, k * n + b) += J(a, k);
            }
            if (similitude) sys(row, n * n) = -J(a, b);
        }
    return sys;
}

} // namespace detail

// The classical algebra of the given kind inside gl_n(Q), computed as the
// solution space of its defining linear equations.
inline MatLieAlgebra make_classical(ClassicalKind kind, std::size_t n, std::optional<QMatrix> form = std::nullopt) {
    if (n == 0) throw DomainError("ambient dimension must be positive");
    const std::string name = std::string(to_string(kind)) + "_" + std::to_string(n);
    std::vector<QMatrix> basis;
    switch (kind) {
    case ClassicalKind::gl:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QMatrix e(n, n);
                e(i, j) = 1;
                basis.push_back(e);
            }
        break;
    case ClassicalKind::diag_torus:
        for (std::size_t i = 0; i < n; ++i) {
            QMatrix e(n, n);
            e(i, i) = 1;
            basis.push_back(e);
        }
        break;
    case ClassicalKind::sl: {
        QMatrix trace(1, n * n);
        for (std::size_t i = 0; i < n; ++i) trace(0, i * n + i) = 1;
        for (const auto& v : kernel_basis(trace)) basis.push_back(detail::unflatten(v, n));
        break;
    }
    case ClassicalKind::so:
    case ClassicalKind::sp:
    case ClassicalKind::go:
    case ClassicalKind::gsp: {
        const QMatrix J = form ? *form : default_form(kind, n);
        detail::check_form(kind, J, n);
        const bool similitude = kind == ClassicalKind::go || kind == ClassicalKind::gsp;
        for (auto v : kernel_basis(detail::form_equations(J, similitude))) {
            v.resize(n * n);
            basis.push_back(detail::unflatten(v, n));
        }
        break;
    }
    }
    return MatLieAlgebra::from_basis(std::move(basis), n, name);
}

// Block-diagonal sum: a acts on the first coordinates, b on the rest.
inline MatLieAlgebra direct_sum(const MatLieAlgebra& a, const MatLieAlgebra& b) {
    const std::size_t na = a.ambient_dim(), nb = b.ambient_dim(), n = na + nb;
    std::vector<QMatrix> basis;
    basis.reserve(a.dim() + b.dim());
    for (const auto& x : a.basis()) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) m(i, j) = x(i, j);
        basis.push_back(std::move(m));
    }
    for (const auto& x : b.basis()) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j) m(na + i, na + j) = x(i, j);
        basis.push_back(std::move(m));
    }
    return MatLieAlgebra::from_basis(std::move(basis), n, a.name() + "+" + b.name());
}

// ad X written in the basis of the algebra: column j holds the coordinates
// of [X, b_j].
struct AdjointOperator {
    MatLieAlgebra algebra;
    QMatrix matrix;
};

// ad X for any X normalizing g. Throws NormalizationError otherwise.
inline AdjointOperator adjoint(const MatLieAlgebra& g, const QMatrix& X) {
    QMatrix ad(g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        const auto c = g.coordinates(bracket(X, g.basis()[j]));
        if (!c) throw NormalizationError("bracket with basis element " + std::to_string(j) + " leaves " + g.name());
        for (std::size_t i = 0; i < g.dim(); ++i) ad(i, j) = (*c)[i];
    }
    return {g, std::move(ad)};
}

// ad(diag(lambda)). Uses [D, b]_{kl} = (lambda_k - lambda_l) b_{kl}.
inline AdjointOperator adjoint_of_diagonal(const MatLieAlgebra& g, const std::vector<long>& lambda) {
    const std::size_t n = g.ambient_dim();
    if (lambda.size() != n)
        throw NormalizationError("cocharacter has " + std::to_string(lambda.size()) + " weights but the algebra acts on dimension " +
                                 std::to_string(n));
    QMatrix ad(g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        const QMatrix& b = g.basis()[j];
        QMatrix c(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                if (!hodge::is_zero(b(k, l))) c(k, l) = b(k, l) * (lambda[k] - lambda[l]);
        const auto coords = g.coordinates(c);
        if (!coords)
            throw NormalizationError("diag(lambda) does not normalize " + g.name() + ": bracket with basis element " +
                                     std::to_string(j) + " leaves the algebra");
        for (std::size_t i = 0; i < g.dim(); ++i) ad(i, j) = (*coords)[i];
    }
    return {g, std::move(ad)};
}

} // namespace hodge
