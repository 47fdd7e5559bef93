#pragma once

#include "dldeg/qpoly.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dldeg {

/// One named output value. QPoly values keep their coefficients so the JSON
/// form can carry them as decimal-string arrays.
struct ResultValue {
    enum class Kind { qpoly, integer, text };

    std::string name;
    Kind kind = Kind::text;
    QPoly poly;        // kind == qpoly
    std::string text;  // decimal digits for integer, rendering for text

    static ResultValue of(std::string name, const QPoly& p);
    static ResultValue of(std::string name, const BigInt& n);
    static ResultValue of(std::string name, std::string text);

    /// Human-readable form of the value.
    std::string rendering() const;
    friend bool operator==(const ResultValue&, const ResultValue&) = default;
};

struct Check {
    Check() = default;
    Check(std::string name, std::string expected, std::string actual);

    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    friend bool operator==(const Check&, const Check&) = default;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<ResultValue> results;
    std::vector<Check> checks;
    std::int64_t elapsed_ms = 0;

    bool all_pass() const;
    void add_check(std::string name, std::string expected, std::string actual);
    void add_check(std::string name, const QPoly& expected, const QPoly& actual);

    nlohmann::ordered_json to_json() const;
    static RunReport from_json(const nlohmann::ordered_json& j);
    std::string to_text() const;
    friend bool operator==(const RunReport&, const RunReport&) = default;
};

}  // namespace dldeg
