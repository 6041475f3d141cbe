#pragma once

#include "hodgescreen/errors.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

using Bidegree = std::pair<int, int>;

// Hodge numbers h^{p,q} of a pure structure of a given weight. Zero entries
// are dropped; every key has p + q = weight and h^{p,q} = h^{q,p}.
class HodgeNumbers {
public:
    HodgeNumbers() : weight_(0) {}

    HodgeNumbers(int weight, std::map<Bidegree, std::size_t> dims) : weight_(weight) {
        for (const auto& [pq, h] : dims) {
            if (h == 0) continue;
            if (pq.first + pq.second != weight)
                throw DomainError("Hodge number at (" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                                  ") does not have weight " + std::to_string(weight));
            dims_[pq] = h;
        }
        for (const auto& [pq, h] : dims_) {
            const auto mirror = dims_.find({pq.second, pq.first});
            if (mirror == dims_.end() || mirror->second != h)
                throw DomainError("Hodge numbers are not conjugation symmetric at (" + std::to_string(pq.first) + "," +
                                  std::to_string(pq.second) + ")");
        }
    }

    // Q(0): one-dimensional of type (0, 0).
    static HodgeNumbers unit() { return HodgeNumbers(0, {{{0, 0}, 1}}); }

    int weight() const { return weight_; }
    const std::map<Bidegree, std::size_t>& dims() const { return dims_; }

    std::size_t at(int p, int q) const {
        const auto it = dims_.find({p, q});
        return it == dims_.end() ? 0 : it->second;
    }
    std::size_t at_p(int p) const { return at(p, weight_ - p); }

    std::size_t total_dim() const {
        std::size_t d = 0;
        for (const auto& [pq, h] : dims_) d += h;
        return d;
    }

    bool empty() const { return dims_.empty(); }
    int min_p() const { return dims_.empty() ? 0 : dims_.begin()->first.first; }
    int max_p() const { return dims_.empty() ? 0 : dims_.rbegin()->first.first; }

    friend bool operator==(const HodgeNumbers& a, const HodgeNumbers& b) {
        return a.weight_ == b.weight_ && a.dims_ == b.dims_;
    }
    friend bool operator!=(const HodgeNumbers& a, const HodgeNumbers& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "weight " + std::to_string(weight_) + " {";
        bool first = true;
        for (auto it = dims_.rbegin(); it != dims_.rend(); ++it) {
            if (!first) s += ", ";
            first = false;
            s += "(" + std::to_string(it->first.first) + "," + std::to_string(it->first.second) +
                 "):" + std::to_string(it->second);
        }
        return s + "}";
    }

private:
    int weight_;
    std::map<Bidegree, std::size_t> dims_;
};

inline HodgeNumbers tate_twist(const HodgeNumbers& h, int m) {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [pq, d] : h.dims()) out[{pq.first - m, pq.second - m}] = d;
    return HodgeNumbers(h.weight() - 2 * m, out);
}

inline HodgeNumbers tensor(const HodgeNumbers& a, const HodgeNumbers& b) {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [pa, da] : a.dims())
        for (const auto& [pb, db] : b.dims()) out[{pa.first + pb.first, pa.second + pb.second}] += da * db;
    return HodgeNumbers(a.weight() + b.weight(), out);
}

inline HodgeNumbers dual(const HodgeNumbers& h) {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [pq, d] : h.dims()) out[{-pq.first, -pq.second}] = d;
    return HodgeNumbers(-h.weight(), out);
}

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// k-th exterior (alternating) or symmetric power. Picks j_s elements from
// each (p,q)-slot s with sum j_s = k; a slot of size h contributes C(h, j)
// resp. C(h + j - 1, j) choices, all of Hodge type (j p, j q).
inline HodgeNumbers power(const HodgeNumbers& h, std::size_t k, bool alternating) {
    // state: (elements chosen, sum of p) -> count
    std::map<std::pair<std::size_t, long>, std::size_t> states{{{0, 0}, 1}};
    for (const auto& [pq, d] : h.dims()) {
        std::map<std::pair<std::size_t, long>, std::size_t> next;
        for (const auto& [st, count] : states) {
            for (std::size_t j = 0; st.first + j <= k; ++j) {
                const std::size_t ways = alternating ? binomial(d, j) : binomial(d + j - 1, j);
                if (ways == 0) break;
                next[{st.first + j, st.second + static_cast<long>(j) * pq.first}] += count * ways;
            }
        }
        states = std::move(next);
    }
    const int weight = static_cast<int>(k) * h.weight();
    std::map<Bidegree, std::size_t> out;
    for (const auto& [st, count] : states)
        if (st.first == k) out[{static_cast<int>(st.second), weight - static_cast<int>(st.second)}] += count;
    return HodgeNumbers(weight, out);
}

} // namespace detail

inline HodgeNumbers wedge(const HodgeNumbers& h, std::size_t k) { return detail::power(h, k, true); }
inline HodgeNumbers sym(const HodgeNumbers& h, std::size_t k) { return detail::power(h, k, false); }

// (p, dim F^p) for p from the top Hodge level down to the bottom one.
inline std::vector<std::pair<int, std::size_t>> filtration_dims(const HodgeNumbers& h) {
    std::vector<std::pair<int, std::size_t>> out;
    if (h.empty()) return out;
    std::size_t acc = 0;
    for (int p = h.max_p(); p >= h.min_p(); --p) {
        acc += h.at_p(p);
        out.emplace_back(p, acc);
    }
    return out;
}

} // namespace hodge
