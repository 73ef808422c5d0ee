#pragma once

// Output records and their two wire formats.
//
// JSON lines: one complete object per line, every integer rendered as a
// decimal string so consumers with 53-bit number types cannot corrupt
// values. CSV: a header row, no padding, final row newline-terminated.
// Both directions are provided for JSON so records round-trip.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cattri/verify.hpp"

namespace cattri {

using ordered_json = nlohmann::ordered_json;

struct table_record {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const table_record&) const = default;
};

struct sequence_record {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;  // (index, value)

    bool operator==(const sequence_record&) const = default;
};

namespace detail {

inline ordered_json pairs_to_object(const named_values& pairs) {
    ordered_json obj = ordered_json::object();
    for (const auto& [k, v] : pairs) obj[k] = v;
    return obj;
}

inline named_values object_to_pairs(const ordered_json& obj) {
    named_values pairs;
    for (auto it = obj.begin(); it != obj.end(); ++it)
        pairs.emplace_back(it.key(), it.value().get<std::string>());
    return pairs;
}

inline std::string csv_join(const std::vector<std::string>& fields) {
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    return line + "\n";
}

}  // namespace detail

inline std::string to_json_line(const table_record& t) {
    ordered_json j;
    j["kind"] = "table";
    j["name"] = t.name;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j.dump();
}

inline std::string to_json_line(const sequence_record& s) {
    ordered_json j;
    j["kind"] = "sequence";
    j["name"] = s.name;
    j["entries"] = ordered_json::array();
    for (const auto& [index, value] : s.entries)
        j["entries"].push_back({{"index", index}, {"value", value}});
    return j.dump();
}

inline std::string to_json_line(const verification_report& r) {
    ordered_json j;
    j["kind"] = "report";
    j["claim"] = r.claim;
    j["description"] = r.description;
    j["ranges"] = detail::pairs_to_object(r.ranges);
    j["instances"] = std::to_string(r.instances);
    j["verdict"] = r.pass() ? "pass" : "fail";
    j["counterexamples"] = ordered_json::array();
    for (const auto& cx : r.counterexamples)
        j["counterexamples"].push_back({{"params", detail::pairs_to_object(cx.params)},
                                        {"expected", cx.expected},
                                        {"actual", cx.actual}});
    j["elapsed_ms"] = std::to_string(r.elapsed_ms);
    j["note"] = r.note;
    return j.dump();
}

inline table_record table_from_json(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    if (j.at("kind") != "table")
        throw std::invalid_argument("table_from_json: not a table record");
    table_record t;
    t.name = j.at("name").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return t;
}

inline sequence_record sequence_from_json(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    if (j.at("kind") != "sequence")
        throw std::invalid_argument("sequence_from_json: not a sequence record");
    sequence_record s;
    s.name = j.at("name").get<std::string>();
    for (const auto& e : j.at("entries"))
        s.entries.emplace_back(e.at("index").get<std::string>(),
                               e.at("value").get<std::string>());
    return s;
}

inline verification_report report_from_json(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    if (j.at("kind") != "report")
        throw std::invalid_argument("report_from_json: not a report record");
    verification_report r;
    r.claim = j.at("claim").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.ranges = detail::object_to_pairs(j.at("ranges"));
    r.instances = std::stoll(j.at("instances").get<std::string>());
    for (const auto& c : j.at("counterexamples")) {
        counterexample cx;
        cx.params = detail::object_to_pairs(c.at("params"));
        cx.expected = c.at("expected").get<std::string>();
        cx.actual = c.at("actual").get<std::string>();
        r.counterexamples.push_back(std::move(cx));
    }
    r.elapsed_ms = std::stoll(j.at("elapsed_ms").get<std::string>());
    r.note = j.at("note").get<std::string>();
    return r;
}

inline std::string to_csv(const table_record& t) {
    std::string out = detail::csv_join(t.columns);
    for (const auto& row : t.rows) out += detail::csv_join(row);
    return out;
}

inline std::string to_csv(const sequence_record& s) {
    std::string out = detail::csv_join({"index", "value"});
    for (const auto& [index, value] : s.entries)
        out += detail::csv_join({index, value});
    return out;
}

inline std::string report_csv_header() {
    return detail::csv_join(
        {"claim", "verdict", "instances", "counterexamples", "elapsed_ms"});
}

inline std::string to_csv_row(const verification_report& r) {
    return detail::csv_join({r.claim, r.pass() ? "pass" : "fail",
                             std::to_string(r.instances),
                             std::to_string(r.counterexamples.size()),
                             std::to_string(r.elapsed_ms)});
}

}  // namespace cattri
