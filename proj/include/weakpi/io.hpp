#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "weakpi/carray.hpp"
#include "weakpi/error.hpp"
#include "weakpi/straighten.hpp"
#include "weakpi/tableaux.hpp"

// Text and JSON formats.
//
//   tableau, text:  one row per line, entries separated by spaces
//   tableau, JSON:  {"rows": [[1, 3], [2, 4]]}
//   array, text:    two lines, top row then bottom row
//   array, JSON:    {"top": [2, 4], "bottom": [1, 3]}
//   combination:    [{"coeff": "p/q", "top": [...], "bottom": [...]}, ...]
//   one-line form:  rows joined by " / ", e.g. "2 4 / 1 3"

namespace weakpi::io {

using json = nlohmann::json;

namespace detail {

inline std::vector<int> parse_ints(const std::string& line) {
    std::istringstream in(line);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw argument_error("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw argument_error("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    return lines;
}

inline std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

inline bool looks_like_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (text[p] == '{' || text[p] == '[');
}

inline std::vector<int> int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw argument_error(std::string("JSON object lacks array '") + key + "'");
    std::vector<int> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer()) throw argument_error(std::string("non-integer in '") + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw argument_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace detail

inline Tableau parse_tableau_text(const std::string& text) {
    std::vector<Tableau::Row> rows;
    for (const auto& line : detail::nonblank_lines(text)) rows.push_back(detail::parse_ints(line));
    Tableau t(std::move(rows));
    (void)t.shape();
    weakpi::detail::require_positive_entries(t);
    return t;
}

inline std::string format_tableau_text(const Tableau& t) {
    std::string s;
    for (const auto& r : t.rows()) s += detail::join(r) + "\n";
    return s;
}

inline json tableau_to_json(const Tableau& t) { return json{{"rows", t.rows()}}; }

inline Tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
        throw argument_error("tableau JSON must be {\"rows\": [[...], ...]}");
    std::vector<Tableau::Row> rows;
    for (const auto& r : j.at("rows")) {
        if (!r.is_array()) throw argument_error("tableau rows must be arrays");
        Tableau::Row row;
        for (const auto& v : r) {
            if (!v.is_number_integer()) throw argument_error("tableau entries must be integers");
            row.push_back(v.get<int>());
        }
        rows.push_back(std::move(row));
    }
    Tableau t(std::move(rows));
    (void)t.shape();
    weakpi::detail::require_positive_entries(t);
    return t;
}

/// Accepts either format.
inline Tableau read_tableau(const std::string& text) {
    return detail::looks_like_json(text) ? tableau_from_json(detail::parse_json(text))
                                         : parse_tableau_text(text);
}

inline TwoRowArray parse_array_text(const std::string& text) {
    const auto lines = detail::nonblank_lines(text);
    if (lines.empty()) return {};
    if (lines.size() != 2)
        throw argument_error("an array needs exactly two lines (top row, bottom row)");
    return TwoRowArray(detail::parse_ints(lines[0]), detail::parse_ints(lines[1]));
}

inline std::string format_array_text(const TwoRowArray& s) {
    return detail::join(s.top()) + "\n" + detail::join(s.bottom()) + "\n";
}

inline json array_to_json(const TwoRowArray& s) {
    return json{{"top", s.top()}, {"bottom", s.bottom()}};
}

inline TwoRowArray array_from_json(const json& j) {
    if (!j.is_object()) throw argument_error("array JSON must be {\"top\": [...], \"bottom\": [...]}");
    return TwoRowArray(detail::int_array(j, "top"), detail::int_array(j, "bottom"));
}

inline TwoRowArray read_array(const std::string& text) {
    return detail::looks_like_json(text) ? array_from_json(detail::parse_json(text))
                                         : parse_array_text(text);
}

inline std::string one_line(const TwoRowArray& s) {
    return detail::join(s.top()) + " / " + detail::join(s.bottom());
}

inline std::string one_line(const Tableau& t) {
    std::string s;
    for (std::size_t i = 0; i < t.rows().size(); ++i) s += (i ? " / " : "") + detail::join(t.rows()[i]);
    return s;
}

inline json lincomb_to_json(const LinComb& l) {
    json out = json::array();
    for (const auto& [s, c] : l.terms())
        out.push_back(json{{"coeff", to_fraction_string(c)}, {"top", s.top()}, {"bottom", s.bottom()}});
    return out;
}

inline LinComb lincomb_from_json(const json& j) {
    if (!j.is_array()) throw argument_error("combination JSON must be an array");
    LinComb l;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.at("coeff").is_string())
            throw argument_error("combination terms need a string 'coeff'");
        l.add(array_from_json(term), parse_rational(term.at("coeff").get<std::string>()));
    }
    return l;
}

/// "1,1,2" -> Content{1, 1, 2}.
inline Content parse_content(const std::string& text) {
    std::vector<int> counts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        auto v = detail::parse_ints(tok);
        if (v.size() != 1) throw argument_error("malformed content list: '" + text + "'");
        counts.push_back(v[0]);
    }
    return Content(std::move(counts));
}

inline Shape parse_shape(const std::string& text) {
    auto c = parse_content(text);
    return Shape(c.counts());
}

}  // namespace weakpi::io
