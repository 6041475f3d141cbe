#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/matrix.hpp"
#include "hodgescreen/exact/number_field.hpp"
#include "hodgescreen/hodge/hodge_numbers.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

using NfVec = Vec<NfElem>;
using NfMatrix = ExactMatrix<NfElem>;

struct FiltrationStep {
    int p;
    std::vector<NfVec> basis;
};

// Unvalidated input: a descending filtration with entries in a field that
// carries complex conjugation. Steps may skip values of p; an unlisted F^p
// equals the nearest listed step above it, F^p is everything at or below the
// lowest Hodge level and zero above the highest.
struct HodgeCandidate {
    NumberField field;
    HodgeNumbers declared;
    std::vector<FiltrationStep> steps;
};

inline NfVec conj(const NfVec& v) {
    NfVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.conj());
    return out;
}

inline std::vector<NfVec> conj(const std::vector<NfVec>& vs) {
    std::vector<NfVec> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(conj(v));
    return out;
}

namespace detail {

inline std::size_t span_rank(const std::vector<NfVec>& vs, std::size_t d) {
    if (vs.empty()) return 0;
    return rank(NfMatrix::from_rows(vs, d));
}

// Basis of span(U) intersected with span(W), both given by independent rows.
inline std::vector<NfVec> intersect(const std::vector<NfVec>& U, const std::vector<NfVec>& W, std::size_t d) {
    if (U.empty() || W.empty()) return {};
    // columns u_1..u_r, -w_1..-w_s; kernel vectors (a, b) give sum a_i u_i
    NfMatrix m(d, U.size() + W.size());
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t r = 0; r < d; ++r) m(r, i) = U[i][r];
    for (std::size_t j = 0; j < W.size(); ++j)
        for (std::size_t r = 0; r < d; ++r) m(r, U.size() + j) = -W[j][r];
    std::vector<NfVec> out;
    for (const auto& k : kernel_basis(m)) {
        NfVec v(d, NfElem(0L));
        for (std::size_t i = 0; i < U.size(); ++i)
            if (!hodge::is_zero(k[i]))
                for (std::size_t r = 0; r < d; ++r) v[r] = v[r] + k[i] * U[i][r];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

// A Hodge structure realized by an explicit filtration, with its Hodge
// decomposition H^{p,q} = F^p ∩ σ(F^q) computed exactly.
class RealizedHodgeStructure {
public:
    const NumberField& field() const { return field_; }
    const HodgeNumbers& declared() const { return declared_; }
    int weight() const { return declared_.weight(); }
    std::size_t dim() const { return declared_.total_dim(); }

    // Basis of F^p for any integer p.
    const std::vector<NfVec>& filtration(int p) const {
        static const std::vector<NfVec> none;
        if (p < declared_.min_p()) return filtration_.at(declared_.min_p());
        const auto it = filtration_.find(p);
        return it == filtration_.end() ? none : it->second;
    }

    const std::map<Bidegree, std::vector<NfVec>>& pieces() const { return pieces_; }

    friend RealizedHodgeStructure realize_and_validate(const HodgeCandidate& c);

private:
    RealizedHodgeStructure(NumberField f, HodgeNumbers h) : field_(std::move(f)), declared_(std::move(h)) {}

    NumberField field_;
    HodgeNumbers declared_;
    std::map<int, std::vector<NfVec>> filtration_;  // p_min..p_max
    std::map<Bidegree, std::vector<NfVec>> pieces_;
};

// Checks nesting, the dimensions of every F^p, and recovers H^{p,q}.
// Throws NotAHodgeFiltration when the data is not a Hodge filtration of the
// declared type, DomainError on malformed input.
inline RealizedHodgeStructure realize_and_validate(const HodgeCandidate& c) {
    if (!c.field.has_conjugation())
        throw DomainError("field " + c.field.name() + " has no complex conjugation; realized structures need one");
    const HodgeNumbers& h = c.declared;
    if (h.empty()) throw DomainError("declared Hodge numbers are empty");
    const std::size_t d = h.total_dim();
    const int n = h.weight();

    std::map<int, std::vector<NfVec>> listed;
    for (const auto& step : c.steps) {
        if (listed.count(step.p)) throw DomainError("filtration step F^" + std::to_string(step.p) + " listed twice");
        for (const auto& v : step.basis)
            if (v.size() != d)
                throw DomainError("vector in F^" + std::to_string(step.p) + " has length " + std::to_string(v.size()) +
                                  ", expected " + std::to_string(d));
        if (detail::span_rank(step.basis, d) != step.basis.size())
            throw DomainError("basis of F^" + std::to_string(step.p) + " is linearly dependent");
        listed[step.p] = step.basis;
    }

    RealizedHodgeStructure out(c.field, h);
    std::vector<NfVec> everything;
    for (std::size_t i = 0; i < d; ++i) {
        NfVec e(d, NfElem(0L));
        e[i] = NfElem(1L);
        everything.push_back(std::move(e));
    }
    for (int p = h.min_p(); p <= h.max_p() + 1; ++p) {
        const auto it = listed.lower_bound(p);
        if (it != listed.end() && it->first == p)
            out.filtration_[p] = it->second;
        else if (p == h.min_p())
            out.filtration_[p] = everything;
        else if (it != listed.end())
            out.filtration_[p] = it->second;
        else
            out.filtration_[p] = {};
    }
    if (!listed.empty() && listed.begin()->first < h.min_p() && listed.begin()->second.size() != d)
        throw NotAHodgeFiltration("F^" + std::to_string(listed.begin()->first) + " must be the whole space");
    for (auto it = listed.upper_bound(h.max_p()); it != listed.end(); ++it)
        if (!it->second.empty())
            throw NotAHodgeFiltration("F^" + std::to_string(it->first) + " must be zero above the top Hodge level");

    // dimensions and nesting
    std::size_t expected = 0;
    for (int p = h.max_p() + 1; p-- > h.min_p();) {
        expected += h.at_p(p);
        const auto& F = out.filtration_.at(p);
        if (F.size() != expected)
            throw NotAHodgeFiltration("dim F^" + std::to_string(p) + " is " + std::to_string(F.size()) +
                                      ", Hodge numbers require " + std::to_string(expected));
        auto both = F;
        const auto& above = out.filtration_.at(p + 1);
        both.insert(both.end(), above.begin(), above.end());
        if (detail::span_rank(both, d) != F.size())
            throw NotAHodgeFiltration("F^" + std::to_string(p + 1) + " is not contained in F^" + std::to_string(p));
    }

    // H^{p,q} = F^p ∩ σ(F^q), and F^p ∩ σ(F^{q+1}) = 0
    std::vector<NfVec> all_pieces;
    for (int p = h.min_p(); p <= h.max_p(); ++p) {
        const int q = n - p;
        const auto& Fp = out.filtration(p);
        const auto piece = detail::intersect(Fp, conj(out.filtration(q)), d);
        if (piece.size() != h.at(p, q))
            throw NotAHodgeFiltration("F^" + std::to_string(p) + " ∩ conj(F^" + std::to_string(q) + ") has dimension " +
                                      std::to_string(piece.size()) + ", expected h^{" + std::to_string(p) + "," +
                                      std::to_string(q) + "} = " + std::to_string(h.at(p, q)));
        if (!detail::intersect(Fp, conj(out.filtration(q + 1)), d).empty())
            throw NotAHodgeFiltration("F^" + std::to_string(p) + " meets conj(F^" + std::to_string(q + 1) + ")");
        if (!piece.empty()) out.pieces_[{p, q}] = piece;
        all_pieces.insert(all_pieces.end(), piece.begin(), piece.end());
    }
    if (detail::span_rank(all_pieces, d) != d) throw NotAHodgeFiltration("the pieces H^{p,q} do not span H");
    return out;
}

// Bilinear form S on H with S^T = (-1)^weight S.
class PolarizationForm {
public:
    PolarizationForm(QMatrix matrix, int weight) : matrix_(std::move(matrix)), weight_(weight) {
        if (!matrix_.square()) throw DomainError("polarization matrix must be square");
        const QMatrix expect = (weight_ % 2) ? matrix_.scaled(Rational(-1)) : matrix_;
        if (!(matrix_.transposed() == expect))
            throw DomainError(std::string("polarization on weight ") + std::to_string(weight_) + " must be " +
                              ((weight_ % 2) ? "antisymmetric" : "symmetric"));
    }

    const QMatrix& matrix() const { return matrix_; }
    int weight() const { return weight_; }

    NfElem operator()(const NfVec& u, const NfVec& v) const {
        NfElem acc(0L);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (hodge::is_zero(u[i])) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!hodge::is_zero(matrix_(i, j)) && !hodge::is_zero(v[j]))
                    acc = acc + u[i] * NfElem(matrix_(i, j)) * v[j];
        }
        return acc;
    }

private:
    QMatrix matrix_;
    int weight_;
};

enum class PolarizationVerdict { valid, morphism_fails, positivity_fails };

inline const char* to_string(PolarizationVerdict v) {
    switch (v) {
    case PolarizationVerdict::valid: return "valid";
    case PolarizationVerdict::morphism_fails: return "morphism_fails";
    case PolarizationVerdict::positivity_fails: return "positivity_fails";
    }
    return "?";
}

struct PolarizationResult {
    PolarizationVerdict verdict;
    std::string detail;
};

namespace detail {

// Sign of the real number i^k x, or nullopt if i^k x is not real.
inline std::optional<int> sign_of_rotated(const NfElem& x, int k, std::optional<unsigned> budget) {
    k = ((k % 4) + 4) % 4;
    const NfElem c = x.conj();
    if (k % 2 == 0) {
        if (!(c == x)) return std::nullopt;
        const int s = sign_real_part(x, budget);
        return k == 0 ? s : -s;
    }
    if (!(c == -x)) return std::nullopt;
    const int s = sign_imag_part(x, budget);
    // i * (i b) = -b, -i * (i b) = b
    return k == 1 ? -s : s;
}

} // namespace detail

// Checks that S is a morphism H ⊗ H -> Q(-n) and that i^{p-q} S(v, σ(v)) is
// positive definite on every H^{p,q}. Signs are decided by interval
// refinement and may throw PrecisionExhausted.
inline PolarizationResult polarization_check(const RealizedHodgeStructure& h, const PolarizationForm& s,
                                             std::optional<unsigned> budget_bits = std::nullopt) {
    if (s.weight() != h.weight())
        throw DomainError("polarization weight " + std::to_string(s.weight()) + " differs from structure weight " +
                          std::to_string(h.weight()));
    if (s.matrix().rows() != h.dim())
        throw DomainError("polarization matrix has size " + std::to_string(s.matrix().rows()) + ", expected " +
                          std::to_string(h.dim()));
    const auto& pieces = h.pieces();
    for (const auto& [a, va] : pieces)
        for (const auto& [b, vb] : pieces) {
            if (b.first == a.second && b.second == a.first) continue;
            for (const auto& u : va)
                for (const auto& v : vb)
                    if (!hodge::is_zero(s(u, v)))
                        return {PolarizationVerdict::morphism_fails,
                                "S pairs H^{" + std::to_string(a.first) + "," + std::to_string(a.second) + "} with H^{" +
                                    std::to_string(b.first) + "," + std::to_string(b.second) + "}"};
        }
    for (const auto& [pq, vs] : pieces) {
        const std::size_t m = vs.size();
        const auto cv = conj(vs);
        NfMatrix Y(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) Y(a, b) = s(vs[a], cv[b]);
        const std::string where = "H^{" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "}";
        // Gaussian elimination without pivoting: positive definite iff
        // every pivot is positive.
        for (std::size_t j = 0; j < m; ++j) {
            const NfElem pivot = Y(j, j);
            const auto sign = hodge::is_zero(pivot) ? std::optional<int>(0)
                                                    : detail::sign_of_rotated(pivot, pq.first - pq.second, budget_bits);
            if (!sign) return {PolarizationVerdict::morphism_fails, "hermitian form on " + where + " is not hermitian"};
            if (*sign <= 0)
                return {PolarizationVerdict::positivity_fails,
                        "hermitian form on " + where + " is not positive definite (pivot " + std::to_string(j + 1) +
                            " has sign " + std::to_string(*sign) + ")"};
            const NfElem inv = pivot.inverse();
            for (std::size_t r = j + 1; r < m; ++r) {
                const NfElem f = Y(r, j) * inv;
                if (hodge::is_zero(f)) continue;
                for (std::size_t col = j; col < m; ++col) Y(r, col) = Y(r, col) - f * Y(j, col);
            }
        }
    }
    return {PolarizationVerdict::valid, "polarization is valid"};
}

} // namespace hodge
