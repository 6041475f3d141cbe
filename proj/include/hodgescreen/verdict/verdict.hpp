#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/invariants/cocharacter.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

// Assumptions a conclusion may rest on. All default to off; a conditional
// conclusion is only drawn when its assumptions are switched on explicitly.
struct ConjectureSet {
    bool motivated = false;  // Hodge cycles are motivated
    bool gpc = false;        // Grothendieck period conjecture
    bool ggpc = false;       // generalized Grothendieck period conjecture
};

namespace labels {
inline const std::string motivated = "motivated-hodge-cycles";
inline const std::string gpc = "grothendieck-period-conjecture";
inline const std::string ggpc = "generalized-period-conjecture";
} // namespace labels

enum class VerdictKind { not_from_geometry, consistent, shimura_violation, maximal_transcendence, bound };

inline std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::not_from_geometry: return "not_from_geometry";
    case VerdictKind::consistent: return "consistent";
    case VerdictKind::shimura_violation: return "shimura_violation";
    case VerdictKind::maximal_transcendence: return "maximal_transcendence";
    case VerdictKind::bound: return "bound";
    }
    return "?";
}

struct Verdict {
    std::string rule;  // which check produced it
    VerdictKind kind = VerdictKind::consistent;
    std::map<std::string, long long> payload;
    std::vector<std::string> conditional_on;
    std::string narrative;  // one line

    // True for outcomes that screen the structure out.
    bool screens_out() const {
        return kind == VerdictKind::not_from_geometry || kind == VerdictKind::shimura_violation;
    }
};

namespace detail {

inline std::string join_labels(const std::vector<std::string>& ls) {
    std::string s;
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? ", " : "") + ls[i];
    return s;
}

// Every conditional narrative ends with its labels on the same line.
inline std::string with_labels(std::string text, const std::vector<std::string>& ls) {
    if (ls.empty()) return text;
    return text + " (conditional on: " + join_labels(ls) + ")";
}

inline long long ll(std::size_t x) { return static_cast<long long>(x); }

} // namespace detail

// trdeg H < hcodim H rules out geometric origin, provided Hodge cycles are
// motivated and the generalized period conjecture holds.
inline Verdict screen(std::size_t trdeg, const InvariantReport& r, const ConjectureSet& conj) {
    Verdict v;
    v.rule = "screen";
    v.payload = {{"trdeg", detail::ll(trdeg)}, {"hcodim", detail::ll(r.hcodim)}};
    v.conditional_on = {labels::motivated, labels::ggpc};
    const std::string inequality = "trdeg H = " + std::to_string(trdeg);
    if (trdeg >= r.hcodim) {
        v.kind = VerdictKind::consistent;
        v.narrative = detail::with_labels(
            "consistent: " + inequality + " >= hcodim H = " + std::to_string(r.hcodim), v.conditional_on);
    } else if (conj.motivated && conj.ggpc) {
        v.kind = VerdictKind::not_from_geometry;
        v.narrative = detail::with_labels(
            "not from geometry: " + inequality + " < hcodim H = " + std::to_string(r.hcodim), v.conditional_on);
    } else {
        v.kind = VerdictKind::bound;
        v.narrative = detail::with_labels("inequality violated, conditional conclusion unavailable: " + inequality +
                                              " < hcodim H = " + std::to_string(r.hcodim) +
                                              "; enable both assumptions to conclude",
                                          v.conditional_on);
    }
    return v;
}

// A filtration defined over Q-bar forces Shimura type, under the same
// assumptions as screen.
inline Verdict shimura_necessity(std::size_t trdeg, const InvariantReport& r, const ConjectureSet& conj) {
    Verdict v;
    v.rule = "shimura_necessity";
    v.payload = {{"trdeg", detail::ll(trdeg)}, {"shimura_type", r.shimura_type ? 1 : 0}};
    v.conditional_on = {labels::motivated, labels::ggpc};
    if (trdeg != 0) {
        v.kind = VerdictKind::consistent;
        v.narrative = detail::with_labels("consistent: trdeg H = " + std::to_string(trdeg) +
                                              " > 0, Shimura-type criterion does not apply",
                                          v.conditional_on);
    } else if (r.shimura_type) {
        v.kind = VerdictKind::consistent;
        v.narrative = detail::with_labels("consistent: filtration over Q-bar and classifying space of Shimura type",
                                          v.conditional_on);
    } else if (conj.motivated && conj.ggpc) {
        v.kind = VerdictKind::shimura_violation;
        v.narrative = detail::with_labels(
            "not from geometry: filtration over Q-bar but not of Shimura type (hcodim H = " +
                std::to_string(r.hcodim) + ")",
            v.conditional_on);
    } else {
        v.kind = VerdictKind::bound;
        v.narrative = detail::with_labels(
            "Shimura-type criterion violated, conditional conclusion unavailable: filtration over Q-bar, hcodim H = " +
                std::to_string(r.hcodim) + "; enable both assumptions to conclude",
            v.conditional_on);
    }
    return v;
}

// trdeg H >= dim F - trdeg K for a structure realized over a field K.
inline std::size_t period_lower_bound(std::size_t flag_dim, std::size_t trdeg_field) {
    return flag_dim > trdeg_field ? flag_dim - trdeg_field : 0;
}

inline Verdict period_lower_bound_verdict(std::size_t flag_dim, std::size_t trdeg_field, const std::string& side = "G") {
    Verdict v;
    v.rule = side == "G" ? "period_lower_bound" : "period_lower_bound_" + side;
    v.kind = VerdictKind::bound;
    const std::size_t b = period_lower_bound(flag_dim, trdeg_field);
    v.payload = {{"flag_dim", detail::ll(flag_dim)}, {"trdeg_field", detail::ll(trdeg_field)}, {"bound", detail::ll(b)}};
    v.conditional_on = {labels::ggpc};
    const std::string f = side == "G" ? "dim F" : "dim F(" + side + ")";
    v.narrative = detail::with_labels("trdeg H >= " + f + " - trdeg K = " + std::to_string(flag_dim) + " - " +
                                          std::to_string(trdeg_field) + " -> " + std::to_string(b),
                                      v.conditional_on);
    return v;
}

// Upper bound dim F^{-1}g - dim F^0 g = dim g^{-1,1} for the transcendence
// degree of a field of definition.
inline std::size_t descent_bound(const CocharGrading& gr) { return gr.level(-1); }

inline Verdict descent_bound_verdict(const CocharGrading& gr) {
    Verdict v;
    v.rule = "descent_bound";
    v.kind = VerdictKind::bound;
    const std::size_t b = descent_bound(gr);
    v.payload = {{"bound", detail::ll(b)}};
    v.conditional_on = {labels::motivated};
    v.narrative = detail::with_labels("trdeg K <= dim F^-1 g - dim F^0 g = " + std::to_string(b), v.conditional_on);
    return v;
}

struct ChainIdentity {
    std::size_t flag_dim = 0;
    std::size_t descent = 0;
    std::size_t hcodim = 0;
};

// dim F - dim g^{-1,1} = hcodim; holds for every grading, so a failure means
// the grading is corrupt.
inline ChainIdentity horizontal_chain(const CocharGrading& gr) {
    ChainIdentity c{flag_dimension(gr), descent_bound(gr), hcodim(gr)};
    if (c.flag_dim < c.descent || c.flag_dim - c.descent != c.hcodim)
        throw IdentityViolation("dim F = " + std::to_string(c.flag_dim) + ", dim g^{-1,1} = " +
                                std::to_string(c.descent) + ", hcodim = " + std::to_string(c.hcodim));
    return c;
}

inline Verdict horizontal_chain_verdict(const CocharGrading& gr) {
    const auto c = horizontal_chain(gr);
    Verdict v;
    v.rule = "horizontal_chain";
    v.kind = VerdictKind::bound;
    v.payload = {{"flag_dim", detail::ll(c.flag_dim)}, {"descent", detail::ll(c.descent)}, {"hcodim", detail::ll(c.hcodim)}};
    v.narrative = "dim F - dim g^{-1,1} = " + std::to_string(c.flag_dim) + " - " + std::to_string(c.descent) + " = " +
                  std::to_string(c.hcodim) + " = hcodim H";
    return v;
}

// Unconditional: the filtration point is generic in the flag variety.
inline Verdict maximal_transcendence(std::size_t trdeg, const InvariantReport& r) {
    Verdict v;
    v.rule = "maximal_transcendence";
    v.payload = {{"trdeg", detail::ll(trdeg)}, {"flag_dim", detail::ll(r.flag_dim)}};
    v.kind = trdeg == r.flag_dim ? VerdictKind::maximal_transcendence : VerdictKind::bound;
    v.narrative = trdeg == r.flag_dim
                      ? "maximal transcendence degree: trdeg H = dim F = " + std::to_string(trdeg)
                      : "not of maximal transcendence degree: trdeg H = " + std::to_string(trdeg) + " < dim F = " +
                            std::to_string(r.flag_dim);
    return v;
}

struct ScreenInputs {
    std::size_t trdeg = 0;
    InvariantReport invariants;
    ConjectureSet conjectures;
    std::optional<std::size_t> trdeg_field;           // of a known field of definition
    std::optional<InvariantReport> larger_group;      // a declared group containing G
};

// Every verdict that applies, in a fixed order.
inline std::vector<Verdict> screen_all(const ScreenInputs& in) {
    std::vector<Verdict> out;
    out.push_back(screen(in.trdeg, in.invariants, in.conjectures));
    out.push_back(shimura_necessity(in.trdeg, in.invariants, in.conjectures));
    out.push_back(maximal_transcendence(in.trdeg, in.invariants));
    out.push_back(horizontal_chain_verdict(in.invariants.grading));
    out.push_back(descent_bound_verdict(in.invariants.grading));
    if (in.trdeg_field) {
        out.push_back(period_lower_bound_verdict(in.invariants.flag_dim, *in.trdeg_field));
        if (in.larger_group) out.push_back(period_lower_bound_verdict(in.larger_group->flag_dim, *in.trdeg_field, "GAnd"));
    }
    return out;
}

// 10 when some verdict screens the structure out, otherwise 0.
inline int exit_status(const std::vector<Verdict>& vs) {
    return std::any_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.screens_out(); }) ? 10 : 0;
}

} // namespace hodge
