#include "dldeg/report.hpp"

#include <algorithm>
#include <sstream>

namespace dldeg {

using nlohmann::ordered_json;

ResultValue ResultValue::of(std::string name, const QPoly& p) {
    ResultValue v;
    v.name = std::move(name);
    v.kind = Kind::qpoly;
    v.poly = p;
    return v;
}

ResultValue ResultValue::of(std::string name, const BigInt& n) {
    ResultValue v;
    v.name = std::move(name);
    v.kind = Kind::integer;
    v.text = n.get_str();
    return v;
}

ResultValue ResultValue::of(std::string name, std::string text) {
    ResultValue v;
    v.name = std::move(name);
    v.kind = Kind::text;
    v.text = std::move(text);
    return v;
}

std::string ResultValue::rendering() const { return kind == Kind::qpoly ? poly.to_string() : text; }

Check::Check(std::string name_, std::string expected_, std::string actual_)
    : name(std::move(name_)), expected(std::move(expected_)), actual(std::move(actual_)), pass(expected == actual) {}

bool RunReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void RunReport::add_check(std::string name, std::string expected, std::string actual) {
    checks.emplace_back(std::move(name), std::move(expected), std::move(actual));
}

void RunReport::add_check(std::string name, const QPoly& expected, const QPoly& actual) {
    add_check(std::move(name), expected.to_string(), actual.to_string());
}

namespace {

const char* kind_name(ResultValue::Kind k) {
    switch (k) {
        case ResultValue::Kind::qpoly: return "qpoly";
        case ResultValue::Kind::integer: return "integer";
        case ResultValue::Kind::text: return "text";
    }
    return "text";
}

ResultValue::Kind kind_from(const std::string& s) {
    if (s == "qpoly") return ResultValue::Kind::qpoly;
    if (s == "integer") return ResultValue::Kind::integer;
    if (s == "text") return ResultValue::Kind::text;
    throw std::invalid_argument("unknown result type: " + s);
}

}  // namespace

ordered_json RunReport::to_json() const {
    ordered_json j;
    j["command"] = command;
    ordered_json in = ordered_json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    ordered_json res = ordered_json::array();
    for (const auto& r : results) {
        ordered_json e;
        e["name"] = r.name;
        e["type"] = kind_name(r.kind);
        if (r.kind == ResultValue::Kind::qpoly)
            e["value"] = r.poly.to_decimal_strings();
        else
            e["value"] = r.text;
        res.push_back(std::move(e));
    }
    j["results"] = res;
    ordered_json chk = ordered_json::array();
    for (const auto& c : checks)
        chk.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["checks"] = chk;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

RunReport RunReport::from_json(const ordered_json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
    for (const auto& e : j.at("results")) {
        ResultValue v;
        v.name = e.at("name").get<std::string>();
        v.kind = kind_from(e.at("type").get<std::string>());
        if (v.kind == ResultValue::Kind::qpoly)
            v.poly = QPoly::from_decimal_strings(e.at("value").get<std::vector<std::string>>());
        else
            v.text = e.at("value").get<std::string>();
        r.results.push_back(std::move(v));
    }
    for (const auto& c : j.at("checks")) {
        Check chk(c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                  c.at("actual").get<std::string>());
        if (chk.pass != c.at("pass").get<bool>()) throw std::invalid_argument("check '" + chk.name + "' has inconsistent pass flag");
        r.checks.push_back(std::move(chk));
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << '\n';
    for (const auto& [k, v] : inputs) os << "input " << k << " = " << v << '\n';
    for (const auto& r : results) os << r.name << ": " << r.rendering() << '\n';
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (c.pass)
            os << ": " << c.actual << '\n';
        else
            os << ": expected " << c.expected << ", got " << c.actual << '\n';
    }
    if (!checks.empty()) os << (all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
    os << "elapsed_ms: " << elapsed_ms << '\n';
    return os.str();
}

}  // namespace dldeg
