#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/expression.hpp"
#include "hodgescreen/exact/matrix.hpp"
#include "hodgescreen/hodge/hodge_numbers.hpp"
#include "hodgescreen/verdict/verdict.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hodge::cli {

using nlohmann::json;

struct GroupSpec {
    std::string kind;
    std::size_t n = 0;
    std::optional<QMatrix> form;
    std::vector<GroupSpec> summands;
    std::vector<QMatrix> basis;
};

struct FieldSpec {
    std::string name;
    upoly::Poly minpoly;  // low to high degree
    ComplexBox root;
    std::optional<std::vector<Rational>> conjugation;
};

// Entries stay as text until the field and parameters are known.
struct StepSpec {
    int p = 0;
    std::vector<std::vector<std::string>> basis;
};

struct FlagSpec {
    std::vector<std::string> params;
    std::vector<StepSpec> steps;
};

struct HodgeTableSpec {
    int weight = 0;
    std::map<Bidegree, std::size_t> dims;
};

struct SpecDocument {
    std::string name;
    GroupSpec group;
    std::vector<long> lambda;
    HodgeTableSpec hodge_numbers;
    std::optional<FieldSpec> field;
    std::optional<FlagSpec> flag_point;
    std::optional<std::size_t> trdeg;
    std::optional<std::size_t> field_of_definition_trdeg;
    std::optional<QMatrix> polarization;
    ConjectureSet conjectures;
    std::optional<GroupSpec> gand_group;
};

namespace detail {

// A JSON value together with its location, for diagnostics.
class Node {
public:
    Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const std::string& path() const { return path_; }
    const json& raw() const { return *j_; }

    [[noreturn]] void fail(const std::string& what) const { throw SchemaError(where() + ": " + what); }

    std::string where() const { return path_.empty() ? "/" : path_; }

    void expect_object(std::initializer_list<const char*> allowed) const {
        if (!j_->is_object()) fail("expected an object");
        for (const auto& [k, v] : j_->items()) {
            bool ok = false;
            for (const char* a : allowed) ok = ok || k == a;
            if (!ok) {
                std::string list;
                for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
                Node(v, path_ + "/" + k).fail("unknown key (allowed: " + list + ")");
            }
        }
    }

    bool has(const char* key) const { return j_->contains(key); }

    Node at(const char* key) const {
        if (!j_->contains(key)) fail(std::string("missing required key \"") + key + "\"");
        return Node((*j_)[key], path_ + "/" + key);
    }

    std::optional<Node> opt(const char* key) const {
        if (!j_->contains(key)) return std::nullopt;
        return Node((*j_)[key], path_ + "/" + key);
    }

    std::vector<Node> array(std::optional<std::size_t> length = std::nullopt) const {
        if (!j_->is_array()) fail("expected an array");
        if (length && j_->size() != *length)
            fail("expected " + std::to_string(*length) + " entries, found " + std::to_string(j_->size()));
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "/" + std::to_string(i));
        return out;
    }

    long integer() const {
        if (!j_->is_number_integer()) fail("expected an integer");
        if (j_->is_number_unsigned() && j_->get<unsigned long long>() > 1000000000ULL) fail("integer out of range");
        const long v = j_->get<long>();
        if (v < -1000000000L || v > 1000000000L) fail("integer out of range");
        return v;
    }

    std::size_t count() const {
        const long v = integer();
        if (v < 0) fail("expected a non-negative integer");
        return static_cast<std::size_t>(v);
    }

    bool boolean() const {
        if (!j_->is_boolean()) fail("expected true or false");
        return j_->get<bool>();
    }

    std::string string() const {
        if (!j_->is_string()) fail("expected a string");
        return j_->get<std::string>();
    }

    // An integer, or a string holding an exact rational such as "-3/4".
    Rational rational() const {
        if (j_->is_number_integer()) return Rational(integer());
        if (j_->is_string()) {
            try {
                return parse_rational_expression(j_->get<std::string>());
            } catch (const SchemaError& e) {
                fail(e.what());
            }
        }
        fail("expected an integer or a rational string such as \"1/2\"");
    }

    // Integers are accepted as shorthand for expressions.
    std::string expression() const {
        if (j_->is_number_integer()) return std::to_string(integer());
        if (j_->is_string()) return j_->get<std::string>();
        fail("expected an expression string or an integer");
    }

    QMatrix matrix(std::size_t n) const {
        QMatrix m(n, n);
        const auto rows = array(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = rows[i].array(n);
            for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j].rational();
        }
        return m;
    }

private:
    const json* j_;
    std::string path_;
};

inline bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline GroupSpec read_group(const Node& node) {
    node.expect_object({"kind", "n", "form", "summands", "basis"});
    GroupSpec g;
    g.kind = node.at("kind").string();
    const bool classical = parse_classical_kind(g.kind).has_value();
    if (!classical && g.kind != "sum" && g.kind != "custom")
        node.at("kind").fail("unknown group kind \"" + g.kind + "\" (expected gl, sl, so, sp, gsp, go, diag_torus, sum or custom)");
    const bool with_form = g.kind == "so" || g.kind == "sp" || g.kind == "gsp" || g.kind == "go";
    if (node.has("form") && !with_form) node.at("form").fail("a form is only accepted for so, sp, gsp and go");
    if (node.has("summands") && g.kind != "sum") node.at("summands").fail("summands are only accepted for kind \"sum\"");
    if (node.has("basis") && g.kind != "custom") node.at("basis").fail("a basis is only accepted for kind \"custom\"");

    if (g.kind == "sum") {
        const auto parts = node.at("summands").array();
        if (parts.size() < 2) node.at("summands").fail("a sum needs at least two summands");
        for (const auto& p : parts) {
            g.summands.push_back(read_group(p));
            g.n += g.summands.back().n;
        }
        if (node.has("n") && node.at("n").count() != g.n)
            node.at("n").fail("ambient dimension " + std::to_string(node.at("n").count()) +
                              " differs from the sum of the summands, " + std::to_string(g.n));
        return g;
    }
    g.n = node.at("n").count();
    if (g.n == 0 || g.n > 64) node.at("n").fail("ambient dimension must be between 1 and 64");
    if (auto f = node.opt("form")) g.form = f->matrix(g.n);
    if (g.kind == "custom") {
        const auto mats = node.at("basis").array();
        for (const auto& m : mats) g.basis.push_back(m.matrix(g.n));
    }
    return g;
}

inline HodgeTableSpec read_hodge_table(const Node& node) {
    node.expect_object({"weight", "dims"});
    HodgeTableSpec h;
    h.weight = static_cast<int>(node.at("weight").integer());
    for (const auto& e : node.at("dims").array()) {
        const auto t = e.array(3);
        const int p = static_cast<int>(t[0].integer());
        const int q = static_cast<int>(t[1].integer());
        const std::size_t d = t[2].count();
        if (p + q != h.weight)
            e.fail("p + q = " + std::to_string(p + q) + " differs from the weight " + std::to_string(h.weight));
        if (h.dims.count({p, q})) e.fail("bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") listed twice");
        h.dims[{p, q}] = d;
    }
    return h;
}

inline FieldSpec read_field(const Node& node) {
    node.expect_object({"name", "minpoly", "root", "conjugation"});
    FieldSpec f;
    f.name = node.at("name").string();
    if (!is_identifier(f.name)) node.at("name").fail("field name must be an identifier");
    for (const auto& c : node.at("minpoly").array()) f.minpoly.push_back(c.rational());
    if (f.minpoly.size() < 2) node.at("minpoly").fail("minimal polynomial must have degree at least 1");
    const auto root = node.at("root");
    root.expect_object({"re", "im"});
    auto interval = [](const Node& n) {
        const auto ends = n.array(2);
        const Rational lo = ends[0].rational(), hi = ends[1].rational();
        if (lo > hi) n.fail("interval endpoints are out of order");
        return Interval{lo, hi};
    };
    f.root = ComplexBox{interval(root.at("re")), interval(root.at("im"))};
    if (auto c = node.opt("conjugation")) {
        std::vector<Rational> img;
        for (const auto& x : c->array()) img.push_back(x.rational());
        f.conjugation = std::move(img);
    }
    return f;
}

inline FlagSpec read_flag(const Node& node) {
    node.expect_object({"params", "steps"});
    FlagSpec f;
    for (const auto& p : node.at("params").array()) {
        f.params.push_back(p.string());
        if (!is_identifier(f.params.back())) p.fail("parameter names must be identifiers");
        if (std::count(f.params.begin(), f.params.end(), f.params.back()) > 1) p.fail("parameter listed twice");
    }
    for (const auto& s : node.at("steps").array()) {
        s.expect_object({"p", "basis"});
        StepSpec st;
        st.p = static_cast<int>(s.at("p").integer());
        for (const auto& v : s.at("basis").array()) {
            std::vector<std::string> entries;
            for (const auto& x : v.array()) entries.push_back(x.expression());
            st.basis.push_back(std::move(entries));
        }
        f.steps.push_back(std::move(st));
    }
    return f;
}

// Strict parse: syntax errors report line and column, duplicate keys are
// rejected.
inline json parse_strict(const std::string& text) {
    std::vector<std::set<std::string>> open;
    const json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
        switch (ev) {
        case json::parse_event_t::object_start: open.emplace_back(); break;
        case json::parse_event_t::object_end: open.pop_back(); break;
        case json::parse_event_t::key: {
            const auto k = parsed.get<std::string>();
            if (!open.back().insert(k).second) throw SchemaError("duplicate key \"" + k + "\"");
            break;
        }
        default: break;
        }
        return true;
    };
    try {
        return json::parse(text, cb, true, false);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        const auto cut = msg.find("] ");
        if (cut != std::string::npos) msg = msg.substr(cut + 2);
        throw SchemaError(msg);
    }
}

} // namespace detail

inline SpecDocument parse_spec(const std::string& text) {
    const json root = detail::parse_strict(text);
    const detail::Node doc(root, "");
    doc.expect_object({"name", "description", "group", "cocharacter", "hodge_numbers", "field", "flag_point", "trdeg",
                       "field_of_definition_trdeg", "polarization", "conjectures", "gand_group"});
    SpecDocument s;
    if (auto n = doc.opt("name")) s.name = n->string();
    if (auto d = doc.opt("description")) (void)d->string();
    s.group = detail::read_group(doc.at("group"));

    const auto cochar = doc.at("cocharacter");
    cochar.expect_object({"lambda"});
    for (const auto& x : cochar.at("lambda").array()) s.lambda.push_back(x.integer());
    if (s.lambda.size() != s.group.n)
        cochar.at("lambda").fail("has " + std::to_string(s.lambda.size()) + " weights but the group acts on dimension " +
                                 std::to_string(s.group.n));

    s.hodge_numbers = detail::read_hodge_table(doc.at("hodge_numbers"));
    std::size_t total = 0;
    for (const auto& [pq, h] : s.hodge_numbers.dims) total += h;
    if (total != s.group.n)
        doc.at("hodge_numbers").fail("Hodge numbers sum to " + std::to_string(total) + " but the group acts on dimension " +
                                     std::to_string(s.group.n));

    if (auto f = doc.opt("field")) s.field = detail::read_field(*f);
    if (auto f = doc.opt("flag_point")) {
        s.flag_point = detail::read_flag(*f);
        for (std::size_t i = 0; i < s.flag_point->steps.size(); ++i)
            for (std::size_t j = 0; j < s.flag_point->steps[i].basis.size(); ++j)
                if (s.flag_point->steps[i].basis[j].size() != s.group.n)
                    f->fail("vector steps/" + std::to_string(i) + "/basis/" + std::to_string(j) + " has length " +
                            std::to_string(s.flag_point->steps[i].basis[j].size()) + ", expected " +
                            std::to_string(s.group.n));
        if (s.field)
            for (const auto& p : s.flag_point->params)
                if (p == s.field->name) f->fail("parameter \"" + p + "\" clashes with the field generator");
    }
    if (auto t = doc.opt("trdeg")) s.trdeg = t->count();
    if (auto t = doc.opt("field_of_definition_trdeg")) s.field_of_definition_trdeg = t->count();
    if (auto p = doc.opt("polarization")) {
        p->expect_object({"matrix"});
        s.polarization = p->at("matrix").matrix(s.group.n);
    }
    const auto conj = doc.at("conjectures");
    conj.expect_object({"motivated", "gpc", "ggpc"});
    s.conjectures.motivated = conj.at("motivated").boolean();
    s.conjectures.gpc = conj.at("gpc").boolean();
    s.conjectures.ggpc = conj.at("ggpc").boolean();
    if (auto g = doc.opt("gand_group")) {
        s.gand_group = detail::read_group(*g);
        if (s.gand_group->n != s.group.n)
            g->fail("acts on dimension " + std::to_string(s.gand_group->n) + " but the group acts on dimension " +
                    std::to_string(s.group.n));
    }
    return s;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SpecDocument load_spec(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_spec(text);
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

} // namespace hodge::cli
