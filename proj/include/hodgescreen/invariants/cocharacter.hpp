#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/hodge/hodge_numbers.hpp"
#include "hodgescreen/lie/mat_lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hodge {

// The Hodge cocharacter as its weight on each basis vector of H (the p of
// the H^{p,q} containing it).
class HodgeCocharacter {
public:
    explicit HodgeCocharacter(std::vector<long> lambda, std::optional<HodgeNumbers> declared = std::nullopt)
        : lambda_(std::move(lambda)), declared_(std::move(declared)) {
        if (!declared_) return;
        std::vector<long> expect;
        for (const auto& [pq, h] : declared_->dims()) expect.insert(expect.end(), h, pq.first);
        std::vector<long> got = lambda_;
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        if (got != expect)
            throw DomainError("cocharacter weights do not match the p-values of the declared Hodge numbers " +
                              declared_->to_string());
    }

    const std::vector<long>& lambda() const { return lambda_; }
    const std::optional<HodgeNumbers>& declared() const { return declared_; }

    HodgeCocharacter shifted(long c) const {
        std::vector<long> l = lambda_;
        for (auto& x : l) x += c;
        return HodgeCocharacter(std::move(l));
    }

private:
    std::vector<long> lambda_;
    std::optional<HodgeNumbers> declared_;
};

// Dimensions of the eigenspaces g^{k,-k} of ad(mu); only nonzero levels are stored.
struct CocharGrading {
    std::size_t algebra_dim = 0;
    std::map<long, std::size_t> levels;

    std::size_t level(long k) const {
        const auto it = levels.find(k);
        return it == levels.end() ? 0 : it->second;
    }
};

// Eigenvalues of ad(diag(lambda)) on gl_N are the differences lambda_i -
// lambda_j, so only those values need an eigenspace computation.
inline CocharGrading grade(const MatLieAlgebra& g, const HodgeCocharacter& mu) {
    const auto ad = adjoint_of_diagonal(g, mu.lambda());
    std::set<long> candidates;
    for (long a : mu.lambda())
        for (long b : mu.lambda()) candidates.insert(a - b);
    CocharGrading gr;
    gr.algebra_dim = g.dim();
    std::size_t total = 0;
    for (long k : candidates) {
        const std::size_t d = g.dim() - rank(ad.matrix - QMatrix::identity(g.dim()).scaled(Rational(k)));
        if (d) gr.levels[k] = d;
        total += d;
    }
    if (total != g.dim())
        throw IncompleteGrading("eigenspaces of ad(mu) on " + g.name() + " have total dimension " +
                                std::to_string(total) + ", algebra has dimension " + std::to_string(g.dim()));
    return gr;
}

inline std::size_t flag_dimension(const CocharGrading& gr) {
    std::size_t s = 0;
    for (const auto& [k, d] : gr.levels)
        if (k < 0) s += d;
    return s;
}

inline std::size_t hcodim(const CocharGrading& gr) {
    std::size_t s = 0;
    for (const auto& [k, d] : gr.levels)
        if (k <= -2) s += d;
    return s;
}

inline bool is_shimura_type(const CocharGrading& gr) {
    return std::all_of(gr.levels.begin(), gr.levels.end(), [](const auto& kv) { return kv.first >= -1 && kv.first <= 1; });
}

inline bool is_symmetric(const CocharGrading& gr) {
    return std::all_of(gr.levels.begin(), gr.levels.end(), [&](const auto& kv) { return gr.level(-kv.first) == kv.second; });
}

struct InvariantReport {
    std::size_t dim_g = 0;
    std::size_t flag_dim = 0;
    std::size_t hcodim = 0;
    std::size_t g_minus_one_dim = 0;
    bool shimura_type = false;
    bool symmetric_grading = false;
    CocharGrading grading;
};

inline InvariantReport report(const MatLieAlgebra& g, const HodgeCocharacter& mu) {
    InvariantReport r;
    r.grading = grade(g, mu);
    r.dim_g = g.dim();
    r.flag_dim = flag_dimension(r.grading);
    r.hcodim = hcodim(r.grading);
    r.g_minus_one_dim = r.grading.level(-1);
    r.shimura_type = is_shimura_type(r.grading);
    r.symmetric_grading = is_symmetric(r.grading);
    return r;
}

} // namespace hodge
