#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/matrix.hpp"
#include "hodgescreen/exact/number_field.hpp"
#include "hodgescreen/exact/ratfunc.hpp"
#include "hodgescreen/invariants/cocharacter.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hodge {

// Scalars of Q(theta)(t_1, ..., t_k).
using FnElem = RatFunc<NfElem>;
using FnVec = Vec<FnElem>;

struct FlagStep {
    int p;
    std::vector<FnVec> basis;
};

// A filtration of Q(theta)(t)^d. Steps are kept sorted by increasing p, so
// their dimensions strictly decrease along the list.
class FlagPoint {
public:
    // Throws DomainError if a basis is dependent or has the wrong length,
    // if two steps share p, or if the steps are not nested with strictly
    // decreasing dimension.
    FlagPoint(std::size_t ambient_dim, std::vector<std::string> params, std::vector<FlagStep> steps)
        : d_(ambient_dim), params_(std::move(params)), steps_(std::move(steps)) {
        std::sort(steps_.begin(), steps_.end(), [](const FlagStep& a, const FlagStep& b) { return a.p < b.p; });
        for (std::size_t s = 0; s < steps_.size(); ++s) {
            const auto& st = steps_[s];
            if (s && steps_[s - 1].p == st.p) throw DomainError("flag step F^" + std::to_string(st.p) + " listed twice");
            for (const auto& v : st.basis)
                if (v.size() != d_)
                    throw DomainError("vector in F^" + std::to_string(st.p) + " has length " + std::to_string(v.size()) +
                                      ", expected " + std::to_string(d_));
            if (st.basis.empty()) continue;
            if (rank(ExactMatrix<FnElem>::from_rows(st.basis)) != st.basis.size())
                throw DomainError("basis of F^" + std::to_string(st.p) + " is linearly dependent");
        }
        for (std::size_t s = 1; s < steps_.size(); ++s) {
            const auto& lower = steps_[s - 1];
            const auto& upper = steps_[s];
            if (upper.basis.size() >= lower.basis.size())
                throw DomainError("dim F^" + std::to_string(upper.p) + " must be smaller than dim F^" +
                                  std::to_string(lower.p));
            if (upper.basis.empty()) continue;
            auto both = lower.basis;
            both.insert(both.end(), upper.basis.begin(), upper.basis.end());
            if (rank(ExactMatrix<FnElem>::from_rows(both)) != lower.basis.size())
                throw DomainError("F^" + std::to_string(upper.p) + " is not contained in F^" + std::to_string(lower.p));
        }
    }

    std::size_t ambient_dim() const { return d_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<FlagStep>& steps() const { return steps_; }

private:
    std::size_t d_;
    std::vector<std::string> params_;
    std::vector<FlagStep> steps_;
};

// Affine chart coordinates: each step's basis in reduced row echelon form
// (pivots on the lexicographically first nonsingular maximal minor); the
// entries off the pivot columns, row by row. Independent of the chosen
// bases.
inline std::vector<FnElem> normalize_chart(const FlagPoint& f) {
    std::vector<FnElem> coords;
    for (const auto& st : f.steps()) {
        if (st.basis.empty() || st.basis.size() == f.ambient_dim()) continue;
        const auto ech = rref(ExactMatrix<FnElem>::from_rows(st.basis));
        std::vector<bool> is_pivot(f.ambient_dim(), false);
        for (auto c : ech.pivots) is_pivot[c] = true;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            for (std::size_t c = 0; c < f.ambient_dim(); ++c)
                if (!is_pivot[c]) coords.push_back(ech.reduced(r, c));
    }
    return coords;
}

struct TrdegOptions {
    bool fast_path = true;
    std::uint64_t seed = 1;
    unsigned max_retries = 16;
};

struct TrdegResult {
    std::size_t value = 0;
    std::vector<FnElem> chart_coordinates;
    // Set when the value was certified at a random rational point.
    std::optional<std::vector<Rational>> evaluation_point;
    std::optional<std::uint64_t> seed;
    bool symbolic = false;
};

namespace detail {

inline bool is_constant_fn(const FnElem& x) { return x.is_constant(); }

} // namespace detail

// Transcendence degree over Q-bar of the field generated by the chart
// coordinates: the rank of their Jacobian with respect to the parameters.
// The fast path evaluates the Jacobian at a seeded random point and accepts
// the result only when it reaches the largest possible rank; otherwise the
// rank is computed symbolically.
inline TrdegResult trdeg(const FlagPoint& f, const TrdegOptions& opt = {}) {
    TrdegResult res;
    res.chart_coordinates = normalize_chart(f);
    const std::size_t k = f.params().size();
    std::vector<FnElem> moving;
    for (const auto& c : res.chart_coordinates)
        if (!detail::is_constant_fn(c)) moving.push_back(c);
    if (moving.empty() || k == 0) {
        res.symbolic = true;
        return res;
    }

    ExactMatrix<FnElem> jac(moving.size(), k);
    for (std::size_t i = 0; i < moving.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) jac(i, j) = moving[i].derivative(j);
    const std::size_t ceiling = std::min(moving.size(), k);

    if (opt.fast_path) {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<long> dist(-1000, 1000);
        for (unsigned attempt = 0; attempt < opt.max_retries; ++attempt) {
            std::vector<Rational> point(k);
            std::vector<NfElem> at(k);
            for (std::size_t j = 0; j < k; ++j) {
                point[j] = dist(rng);
                at[j] = NfElem(point[j]);
            }
            try {
                ExactMatrix<NfElem> num(moving.size(), k);
                for (std::size_t i = 0; i < moving.size(); ++i)
                    for (std::size_t j = 0; j < k; ++j) num(i, j) = jac(i, j).evaluate(at);
                // coordinates must be defined at the point as well
                for (const auto& c : moving) (void)c.evaluate(at);
                if (rank(num) == ceiling) {
                    res.value = ceiling;
                    res.evaluation_point = std::move(point);
                    res.seed = opt.seed;
                    return res;
                }
                break;
            } catch (const DenominatorVanishes&) {
                continue;
            }
        }
    }
    res.value = rank(jac);
    res.symbolic = true;
    return res;
}

inline bool is_maximal_transcendence(const TrdegResult& t, const CocharGrading& gr) {
    return t.value == flag_dimension(gr);
}

} // namespace hodge
