#pragma once

#include "hodgescreen/hodge/hodge_numbers.hpp"
#include "hodgescreen/hodge/realized.hpp"
#include "hodgescreen/invariants/cocharacter.hpp"
#include "hodgescreen/verdict/verdict.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hodge::cli {

struct GroupSummary {
    std::string name;
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
};

struct TrdegSection {
    std::size_t value = 0;
    std::string method;  // "evaluation", "symbolic" or "declared"
    std::size_t params = 0;
    std::size_t chart_coordinates = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<Rational>> evaluation_point;
};

struct PolarizationSection {
    std::string verdict;
    std::string detail;
};

struct Report {
    std::string command;
    std::string name;
    std::optional<GroupSummary> group;
    std::optional<InvariantReport> invariants;
    std::optional<GroupSummary> gand_group;
    std::optional<InvariantReport> gand_invariants;
    std::optional<TrdegSection> trdeg;
    std::optional<PolarizationSection> polarization;
    std::optional<HodgeNumbers> hodge_numbers;
    std::vector<Verdict> verdicts;
    std::vector<std::string> warnings;
};

namespace detail {

inline nlohmann::json group_json(const GroupSummary& g) {
    return {{"name", g.name}, {"ambient_dim", g.ambient_dim}, {"dim", g.dim}};
}

inline nlohmann::json invariants_json(const InvariantReport& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& [k, d] : r.grading.levels) levels.push_back({k, d});
    return {{"dim_g", r.dim_g},
            {"flag_dim", r.flag_dim},
            {"hcodim", r.hcodim},
            {"g_minus_one_dim", r.g_minus_one_dim},
            {"shimura_type", r.shimura_type},
            {"symmetric_grading", r.symmetric_grading},
            {"levels", levels}};
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void write_invariants(std::ostringstream& os, const InvariantReport& r, const std::string& indent) {
    os << indent << "dim g: " << r.dim_g << "\n";
    os << indent << "dim F: " << r.flag_dim << "\n";
    os << indent << "hcodim: " << r.hcodim << "\n";
    os << indent << "dim g^{-1,1}: " << r.g_minus_one_dim << "\n";
    os << indent << "Shimura type: " << yes_no(r.shimura_type) << "\n";
    os << indent << "symmetric grading: " << yes_no(r.symmetric_grading) << "\n";
    os << indent << "levels (k: dim g^{k,-k}):\n";
    for (const auto& [k, d] : r.grading.levels) os << indent << "  " << k << ": " << d << "\n";
}

} // namespace detail

inline nlohmann::json hodge_numbers_json(const HodgeNumbers& h) {
    nlohmann::json dims = nlohmann::json::array();
    for (auto it = h.dims().rbegin(); it != h.dims().rend(); ++it)
        dims.push_back({it->first.first, it->first.second, it->second});
    return {{"weight", h.weight()}, {"dims", dims}};
}

inline nlohmann::json verdict_json(const Verdict& v) {
    return {{"rule", v.rule},
            {"kind", to_string(v.kind)},
            {"payload", v.payload},
            {"conditional_on", v.conditional_on},
            {"narrative", v.narrative}};
}

// Keys are sorted; numbers are integers or exact rationals written as
// strings.
inline nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    if (!r.name.empty()) j["name"] = r.name;
    if (r.group) j["group"] = detail::group_json(*r.group);
    if (r.invariants) j["invariants"] = detail::invariants_json(*r.invariants);
    if (r.gand_group) j["gand_group"] = detail::group_json(*r.gand_group);
    if (r.gand_invariants) j["gand_invariants"] = detail::invariants_json(*r.gand_invariants);
    if (r.trdeg) {
        nlohmann::json t{{"value", r.trdeg->value},
                         {"method", r.trdeg->method},
                         {"params", r.trdeg->params},
                         {"chart_coordinates", r.trdeg->chart_coordinates}};
        if (r.trdeg->seed) t["seed"] = *r.trdeg->seed;
        if (r.trdeg->evaluation_point) {
            nlohmann::json pt = nlohmann::json::array();
            for (const auto& x : *r.trdeg->evaluation_point) pt.push_back(x.get_str());
            t["evaluation_point"] = pt;
        }
        j["trdeg"] = t;
    }
    if (r.polarization) j["polarization"] = {{"verdict", r.polarization->verdict}, {"detail", r.polarization->detail}};
    if (r.hodge_numbers) j["hodge_numbers"] = hodge_numbers_json(*r.hodge_numbers);
    if (r.command == "screen" || !r.verdicts.empty()) {
        j["verdicts"] = nlohmann::json::array();
        for (const auto& v : r.verdicts) j["verdicts"].push_back(verdict_json(v));
    }
    j["warnings"] = r.warnings;
    return j;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string render_text(const Report& r) {
    std::ostringstream os;
    os << r.command;
    if (!r.name.empty()) os << ": " << r.name;
    os << "\n";
    if (r.group)
        os << "group: " << r.group->name << " (dim " << r.group->dim << " in gl_" << r.group->ambient_dim << ")\n";
    if (r.invariants) detail::write_invariants(os, *r.invariants, "");
    if (r.gand_group) {
        os << "larger group: " << r.gand_group->name << " (dim " << r.gand_group->dim << ")\n";
        if (r.gand_invariants) detail::write_invariants(os, *r.gand_invariants, "  ");
    }
    if (r.trdeg) {
        os << "trdeg: " << r.trdeg->value << " (" << r.trdeg->method << ", " << r.trdeg->params << " parameters, "
           << r.trdeg->chart_coordinates << " chart coordinates";
        if (r.trdeg->seed) os << ", seed " << *r.trdeg->seed;
        os << ")\n";
        if (r.trdeg->evaluation_point) {
            os << "evaluation point:";
            for (const auto& x : *r.trdeg->evaluation_point) os << " " << x.get_str();
            os << "\n";
        }
    }
    if (r.polarization) os << "polarization: " << r.polarization->verdict << " (" << r.polarization->detail << ")\n";
    if (r.hodge_numbers) {
        os << "weight: " << r.hodge_numbers->weight() << "\n";
        os << "total dimension: " << r.hodge_numbers->total_dim() << "\n";
        for (auto it = r.hodge_numbers->dims().rbegin(); it != r.hodge_numbers->dims().rend(); ++it)
            os << "h^{" << it->first.first << "," << it->first.second << "} = " << it->second << "\n";
    }
    for (const auto& v : r.verdicts) os << "[" << to_string(v.kind) << "] " << v.rule << ": " << v.narrative << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

} // namespace hodge::cli
