#pragma once

#include "hodgescreen/cli/report.hpp"
#include "hodgescreen/cli/spec_document.hpp"
#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/expression.hpp"
#include "hodgescreen/flag/flag_point.hpp"
#include "hodgescreen/hodge/realized.hpp"
#include "hodgescreen/invariants/cocharacter.hpp"
#include "hodgescreen/lie/mat_lie_algebra.hpp"
#include "hodgescreen/verdict/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hodge::cli {

enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_schema = 2, exit_domain = 3, exit_screened_out = 10 };

struct Options {
    bool json = false;
    std::optional<std::uint64_t> seed;
};

struct CommandResult {
    int exit_code = exit_ok;
    std::string out;  // report
    std::string err;  // diagnostics
};

// ---- building library objects from a document ----

inline MatLieAlgebra build_group(const GroupSpec& g) {
    if (g.kind == "sum") {
        MatLieAlgebra acc = build_group(g.summands.front());
        for (std::size_t i = 1; i < g.summands.size(); ++i) acc = direct_sum(acc, build_group(g.summands[i]));
        return acc;
    }
    if (g.kind == "custom") return MatLieAlgebra::from_basis(g.basis, g.n, "custom_" + std::to_string(g.n));
    return make_classical(*parse_classical_kind(g.kind), g.n, g.form);
}

inline HodgeNumbers build_hodge_numbers(const SpecDocument& s) {
    return HodgeNumbers(s.hodge_numbers.weight, s.hodge_numbers.dims);
}

inline std::optional<NumberField> build_field(const SpecDocument& s) {
    if (!s.field) return std::nullopt;
    NumberField::Options opts;
    opts.conjugation = s.field->conjugation;
    return NumberField::create(s.field->minpoly, s.field->name, s.field->root, opts);
}

// Parses the flag point's entries and checks the step dimensions against the
// declared Hodge numbers: every listed F^p has the declared dimension and
// every proper nonzero dimension of the filtration is represented.
inline FlagPoint build_flag(const SpecDocument& s, const std::optional<NumberField>& field, const HodgeNumbers& h) {
    const auto& fs = *s.flag_point;
    ExpressionContext ctx{fs.params, field};
    std::vector<FlagStep> steps;
    for (std::size_t i = 0; i < fs.steps.size(); ++i) {
        FlagStep st{fs.steps[i].p, {}};
        for (std::size_t j = 0; j < fs.steps[i].basis.size(); ++j) {
            FnVec v;
            for (std::size_t c = 0; c < fs.steps[i].basis[j].size(); ++c) {
                try {
                    v.push_back(parse_expression(fs.steps[i].basis[j][c], ctx));
                } catch (const SchemaError& e) {
                    throw SchemaError("/flag_point/steps/" + std::to_string(i) + "/basis/" + std::to_string(j) + "/" +
                                      std::to_string(c) + ": " + e.what());
                }
            }
            st.basis.push_back(std::move(v));
        }
        steps.push_back(std::move(st));
    }
    const std::size_t n = h.total_dim();
    std::map<int, std::size_t> expect;
    for (const auto& [p, d] : filtration_dims(h)) expect[p] = d;
    auto dim_at = [&](int p) -> std::size_t {
        if (h.empty() || p <= h.min_p()) return n;
        if (p > h.max_p()) return 0;
        return expect.at(p);
    };
    std::set<std::size_t> listed;
    for (const auto& st : steps) {
        if (st.basis.size() != dim_at(st.p))
            throw DomainError("flag step F^" + std::to_string(st.p) + " has dimension " + std::to_string(st.basis.size()) +
                              ", the Hodge numbers require " + std::to_string(dim_at(st.p)));
        listed.insert(st.basis.size());
    }
    for (const auto& [p, d] : filtration_dims(h))
        if (d > 0 && d < n && !listed.count(d))
            throw DomainError("flag point does not list F^" + std::to_string(p) + " (dimension " + std::to_string(d) + ")");
    return FlagPoint(n, fs.params, std::move(steps));
}

namespace detail {

inline GroupSummary summarize(const MatLieAlgebra& g) { return {g.name(), g.ambient_dim(), g.dim()}; }

inline void check_contains(const MatLieAlgebra& big, const MatLieAlgebra& g) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!big.contains(g.basis()[i]))
            throw DomainError("basis element " + std::to_string(i) + " of " + g.name() + " is not in the larger group " +
                              big.name());
}

inline std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s;
}

inline void add_grading_warning(Report& r, const InvariantReport& inv, const std::string& group) {
    if (!inv.symmetric_grading)
        r.warnings.push_back("grading of " + group +
                             " is not symmetric under k -> -k; the group is not reductive or mu is not a Hodge "
                             "cocharacter of it");
}

struct Invariants {
    GroupSummary summary;
    InvariantReport report;
    std::optional<GroupSummary> gand_summary;
    std::optional<InvariantReport> gand_report;
};

inline Invariants compute_invariants(const SpecDocument& s, Report& r) {
    const auto h = build_hodge_numbers(s);
    const HodgeCocharacter mu(s.lambda, h);
    const auto g = build_group(s.group);
    Invariants out{summarize(g), report(g, mu), std::nullopt, std::nullopt};
    add_grading_warning(r, out.report, g.name());
    if (s.gand_group) {
        const auto big = build_group(*s.gand_group);
        check_contains(big, g);
        out.gand_summary = summarize(big);
        out.gand_report = report(big, mu);
        add_grading_warning(r, *out.gand_report, big.name());
    }
    return out;
}

inline TrdegSection compute_trdeg(const FlagPoint& f, const Options& opt) {
    TrdegOptions to;
    if (opt.seed) to.seed = *opt.seed;
    const auto t = trdeg(f, to);
    TrdegSection sec;
    sec.value = t.value;
    sec.method = t.symbolic ? "symbolic" : "evaluation";
    sec.params = f.params().size();
    sec.chart_coordinates = t.chart_coordinates.size();
    sec.seed = t.seed;
    sec.evaluation_point = t.evaluation_point;
    return sec;
}

inline void add_contract_warning(Report& r, const FlagPoint& f) {
    if (f.params().empty()) return;
    r.warnings.push_back("trdeg treats the parameters " + join(f.params()) +
                         " as algebraically independent over Q-bar; the value is the transcendence degree of the "
                         "filtration only under that contract");
}

inline std::string format_error(const std::string& kind, const std::string& what) { return "error: " + kind + ": " + what + "\n"; }

} // namespace detail

// Runs a command body and maps failures to exit codes.
inline CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const SchemaError& e) {
        return {exit_schema, "", detail::format_error("schema", e.what())};
    } catch (const NotClosedError& e) {
        return {exit_domain, "", detail::format_error("not closed", e.what())};
    } catch (const NormalizationError& e) {
        return {exit_domain, "", detail::format_error("normalization", e.what())};
    } catch (const DomainError& e) {
        return {exit_domain, "", detail::format_error("domain", e.what())};
    } catch (const std::exception& e) {
        return {exit_internal, "", detail::format_error("internal", e.what())};
    }
}

inline std::string render(const Report& r, const Options& opt) { return opt.json ? render_json(r) : render_text(r); }

inline CommandResult cmd_invariants(const std::string& path, const Options& opt = {}) {
    return guarded([&] {
        const auto s = load_spec(path);
        Report r;
        r.command = "invariants";
        r.name = s.name;
        const auto inv = detail::compute_invariants(s, r);
        r.group = inv.summary;
        r.invariants = inv.report;
        r.gand_group = inv.gand_summary;
        r.gand_invariants = inv.gand_report;
        return CommandResult{exit_ok, render(r, opt), ""};
    });
}

inline CommandResult cmd_trdeg(const std::string& path, const Options& opt = {}) {
    return guarded([&] {
        const auto s = load_spec(path);
        if (!s.flag_point) throw SchemaError(path + ": /: missing required key \"flag_point\"");
        Report r;
        r.command = "trdeg";
        r.name = s.name;
        const auto f = build_flag(s, build_field(s), build_hodge_numbers(s));
        r.trdeg = detail::compute_trdeg(f, opt);
        detail::add_contract_warning(r, f);
        return CommandResult{exit_ok, render(r, opt), ""};
    });
}

inline CommandResult cmd_screen(const std::string& path, const Options& opt = {}) {
    return guarded([&] {
        const auto s = load_spec(path);
        if (!s.flag_point && !s.trdeg)
            throw SchemaError(path + ": /: screening needs \"flag_point\" or an explicit \"trdeg\"");
        Report r;
        r.command = "screen";
        r.name = s.name;
        const auto inv = detail::compute_invariants(s, r);
        r.group = inv.summary;
        r.invariants = inv.report;
        r.gand_group = inv.gand_summary;
        r.gand_invariants = inv.gand_report;

        const auto h = build_hodge_numbers(s);
        const auto field = build_field(s);
        std::optional<FlagPoint> flag;
        if (s.flag_point) {
            flag = build_flag(s, field, h);
            r.trdeg = detail::compute_trdeg(*flag, opt);
            detail::add_contract_warning(r, *flag);
            if (r.trdeg->value > inv.report.flag_dim)
                throw DomainError("flag point has trdeg " + std::to_string(r.trdeg->value) + " > dim F = " +
                                  std::to_string(inv.report.flag_dim) + "; it does not lie in the flag variety of " +
                                  inv.summary.name);
        }
        if (s.trdeg) {
            if (r.trdeg && r.trdeg->value != *s.trdeg)
                r.warnings.push_back("declared trdeg " + std::to_string(*s.trdeg) + " overrides the computed value " +
                                     std::to_string(r.trdeg->value));
            if (*s.trdeg > inv.report.flag_dim)
                throw DomainError("declared trdeg " + std::to_string(*s.trdeg) + " exceeds dim F = " +
                                  std::to_string(inv.report.flag_dim));
            TrdegSection sec;
            sec.value = *s.trdeg;
            sec.method = "declared";
            if (flag) {
                sec.params = flag->params().size();
                sec.chart_coordinates = r.trdeg->chart_coordinates;
            }
            r.trdeg = sec;
        }

        ScreenInputs in;
        in.trdeg = r.trdeg->value;
        in.invariants = inv.report;
        in.conjectures = s.conjectures;
        in.trdeg_field = s.field_of_definition_trdeg;
        in.larger_group = inv.gand_report;
        r.verdicts = screen_all(in);
        if (s.gand_group && !s.field_of_definition_trdeg)
            r.warnings.push_back("the larger group only enters the bound that needs field_of_definition_trdeg");

        int code = exit_status(r.verdicts);
        std::string err;
        if (s.polarization) {
            if (!field || !field->has_conjugation() || !flag || !flag->params().empty()) {
                r.warnings.push_back("polarization check skipped: it needs a field with conjugation and a flag point "
                                     "without parameters");
            } else {
                std::vector<FiltrationStep> steps;
                for (const auto& st : flag->steps()) {
                    FiltrationStep fs{st.p, {}};
                    for (const auto& v : st.basis) {
                        NfVec w;
                        for (const auto& x : v) w.push_back(x.constant_value());
                        fs.basis.push_back(std::move(w));
                    }
                    steps.push_back(std::move(fs));
                }
                const auto realized = realize_and_validate(HodgeCandidate{*field, h, steps});
                const auto res = polarization_check(realized, PolarizationForm(*s.polarization, h.weight()));
                r.polarization = PolarizationSection{to_string(res.verdict), res.detail};
                if (res.verdict != PolarizationVerdict::valid) {
                    code = exit_domain;
                    err = detail::format_error("domain", "declared polarization fails: " + res.detail);
                }
            }
        }
        return CommandResult{code, render(r, opt), err};
    });
}

inline CommandResult cmd_lie_check(const std::string& path, const Options& opt = {}) {
    return guarded([&] {
        const auto s = load_spec(path);
        Report r;
        r.command = "lie-check";
        r.name = s.name;
        r.group = detail::summarize(build_group(s.group));
        if (s.gand_group) {
            const auto big = build_group(*s.gand_group);
            detail::check_contains(big, build_group(s.group));
            r.gand_group = detail::summarize(big);
        }
        return CommandResult{exit_ok, render(r, opt), ""};
    });
}

// op is one of dual, tensor, wedge, sym, twist; k is the power or twist.
inline CommandResult cmd_hodge(const std::string& op, const std::vector<std::string>& paths, std::optional<long> k,
                               const Options& opt = {}) {
    return guarded([&] {
        std::vector<HodgeNumbers> hs;
        for (const auto& p : paths) hs.push_back(build_hodge_numbers(load_spec(p)));
        auto need_files = [&](std::size_t lo, std::size_t hi) {
            if (hs.size() < lo || hs.size() > hi)
                throw SchemaError("hodge " + op + " takes " +
                                  (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") + " spec file" +
                                  (hi > 1 ? "s" : ""));
        };
        HodgeNumbers out;
        if (op == "dual") {
            need_files(1, 1);
            out = dual(hs[0]);
        } else if (op == "tensor") {
            need_files(2, static_cast<std::size_t>(-1));
            out = hs[0];
            for (std::size_t i = 1; i < hs.size(); ++i) out = tensor(out, hs[i]);
        } else if (op == "wedge" || op == "sym" || op == "twist") {
            need_files(1, 1);
            if (!k) throw SchemaError("hodge " + op + " needs --k");
            if (op == "twist") {
                out = tate_twist(hs[0], static_cast<int>(*k));
            } else {
                if (*k < 0) throw SchemaError("--k must be non-negative for " + op);
                out = op == "wedge" ? wedge(hs[0], static_cast<std::size_t>(*k)) : sym(hs[0], static_cast<std::size_t>(*k));
            }
        } else {
            throw SchemaError("unknown hodge operation \"" + op + "\" (expected dual, tensor, wedge, sym or twist)");
        }
        Report r;
        r.command = "hodge " + op;
        r.hodge_numbers = out;
        return CommandResult{exit_ok, render(r, opt), ""};
    });
}

} // namespace hodge::cli
