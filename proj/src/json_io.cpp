#include "lukra/json_io.hpp"

#include <fstream>

#include "lukra/errors.hpp"

namespace lukra {

json algebra_to_json(const FiniteAlgebra& a) {
    json imp = json::array();
    for (Elem x = 0; x < a.size(); ++x) {
        json row = json::array();
        for (Elem y = 0; y < a.size(); ++y) row.push_back(a.imp(x, y));
        imp.push_back(std::move(row));
    }
    json j;
    j["size"] = a.size();
    j["top"] = a.top();
    j["bottom"] = a.bottom() ? json(*a.bottom()) : json(nullptr);
    j["imp"] = std::move(imp);
    j["delta"] = a.delta_table() ? json(*a.delta_table()) : json(nullptr);
    j["label"] = a.label();
    return j;
}

namespace {

Elem as_index(const json& v, const char* what) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InvalidArgument(std::string(what) + " must be a nonnegative integer");
    return v.get<Elem>();
}

}  // namespace

FiniteAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw InvalidArgument("algebra must be a JSON object");
    for (const char* key : {"size", "top", "imp"})
        if (!j.contains(key)) throw InvalidArgument(std::string("algebra is missing '") + key + "'");
    const std::size_t n = as_index(j["size"], "size");
    const Elem top = as_index(j["top"], "top");
    const json& rows = j["imp"];
    if (!rows.is_array() || rows.size() != n) throw InvalidArgument("imp must have size rows");
    std::vector<Elem> imp;
    imp.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw InvalidArgument("imp rows must have size entries");
        for (const auto& v : row) imp.push_back(as_index(v, "imp entry"));
    }
    std::optional<std::vector<Elem>> delta;
    if (j.contains("delta") && !j["delta"].is_null()) {
        if (!j["delta"].is_array()) throw InvalidArgument("delta must be an array or null");
        delta.emplace();
        for (const auto& v : j["delta"]) delta->push_back(as_index(v, "delta entry"));
    }
    std::optional<Elem> bottom;
    if (j.contains("bottom") && !j["bottom"].is_null()) bottom = as_index(j["bottom"], "bottom");
    std::string label;
    if (j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
    return FiniteAlgebra(n, std::move(imp), top, std::move(delta), bottom, std::move(label));
}

json bigint_to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return json(v.convert_to<std::uint64_t>());
    if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min()))
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

json report_to_json(const CheckReport& r) {
    json vs = json::array();
    for (const auto& v : r.violations) vs.push_back({{"law", v.law}, {"witness", v.witness}});
    return {{"passed", r.passed()}, {"violations", std::move(vs)}};
}

json size_to_json(const SizeBreakdown& s) {
    json beta = json::array();
    for (std::size_t k = 0; k < s.beta.size(); ++k) {
        json row = json::object();
        for (std::size_t i = 0; i < s.beta[k].size(); ++i) row[std::to_string(i + 2)] = bigint_to_json(s.beta[k][i]);
        beta.push_back(std::move(row));
    }
    json nk = json::array(), terms = json::array();
    for (const auto& v : s.nk) nk.push_back(bigint_to_json(v));
    for (const auto& v : s.terms) terms.push_back(bigint_to_json(v));
    return {{"n", s.n},       {"m", s.m},         {"mode", mode_name(s.mode)},
            {"beta", beta},   {"N_k", nk},        {"terms", terms},
            {"total", bigint_to_json(s.total)}};
}

json counterexample_to_json(const Counterexample& c) {
    json val = json::object();
    for (std::size_t i = 0; i < c.vars.size(); ++i)
        val[c.vars[i]] = std::to_string(c.values[i]) + "/" + std::to_string(c.k - 1);
    return {{"k", c.k}, {"valuation", val}, {"indices", c.values}, {"value", c.value}};
}

namespace {

fo::Table table_from_json(const json& j, const std::string& name) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("table"))
        throw InvalidArgument("symbol " + name + " needs 'arity' and 'table'");
    fo::Table t;
    t.arity = as_index(j["arity"], "arity");
    if (!j["table"].is_array()) throw InvalidArgument("table of " + name + " must be an array");
    for (const auto& v : j["table"]) t.values.push_back(as_index(v, "table entry"));
    return t;
}

}  // namespace

fo::Structure structure_from_json(const json& j) {
    if (!j.is_object()) throw InvalidArgument("structure must be a JSON object");
    std::optional<FiniteAlgebra> a;
    if (j.contains("algebra")) a = algebra_from_json(j["algebra"]);
    else if (j.contains("chain")) a = make_chain(as_index(j["chain"], "chain"), true, true);
    else throw InvalidArgument("structure needs 'algebra' or 'chain'");
    fo::Structure s{*a, 1, {}, {}};
    if (j.contains("domain")) s.domain = as_index(j["domain"], "domain");
    if (j.contains("predicates"))
        for (const auto& [name, t] : j["predicates"].items()) s.predicates[name] = table_from_json(t, name);
    if (j.contains("functions"))
        for (const auto& [name, t] : j["functions"].items()) s.functions[name] = table_from_json(t, name);
    fo::validate(s);
    return s;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

}  // namespace lukra
