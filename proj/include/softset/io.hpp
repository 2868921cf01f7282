#pragma once

// JSON document format for soft sets:
//
//   {
//     "universe": ["u1", "u2"],
//     "dim": 1,
//     "box": {"min": [0], "max": [4]},
//     "entries": [
//       {"point": [0], "set": ["u1"]}
//     ]
//   }
//
// Canonical form, which serialize_document always emits: top-level keys in
// the order above, entries sorted lexicographically by point, each set
// listed in universe order, two-space indentation, trailing newline.
// Parsing accepts any key order and entry order but rejects unknown keys,
// non-integer coordinates, unknown element names, out-of-box points and
// duplicate points. Entries with an empty set are dropped on parse, so
// parse-then-serialize canonicalizes and serialize-then-parse restores the
// same value.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "softset/core.hpp"

namespace softset {

/// Document rejection. Line and column are 1-based and refer to the input
/// text; both are 0 when the failure has no usable location (structural and
/// semantic errors after a successful JSON parse).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0,
                        std::size_t column = 0)
        : Error(with_location(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string with_location(const std::string& message, std::size_t line,
                                     std::size_t column) {
        if (line == 0) return message;
        std::ostringstream os;
        os << "line " << line << ", column " << column << ": " << message;
        return os.str();
    }

    std::size_t line_;
    std::size_t column_;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> offset_to_line_col(const std::string& text,
                                                              std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace detail

inline SoftSet parse_document(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // The exception's byte index points one past the offending byte.
        const auto [line, column] =
            detail::offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("invalid JSON", line, column);
    }

    if (!doc.is_object()) throw ParseError("top level must be an object");
    static constexpr std::array<const char*, 4> kKeys = {"universe", "dim", "box",
                                                         "entries"};
    for (const char* key : kKeys)
        if (!doc.contains(key)) throw ParseError(std::string("missing key: ") + key);
    for (const auto& item : doc.items()) {
        const auto& key = item.key();
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
            throw ParseError("unknown key: " + key);
    }

    const auto& juniverse = doc["universe"];
    if (!juniverse.is_array())
        throw ParseError("universe must be an array of element names");
    std::vector<std::string> names;
    for (const auto& jname : juniverse) {
        if (!jname.is_string())
            throw ParseError("universe must be an array of element names");
        names.push_back(jname.get<std::string>());
    }
    std::optional<Universe> universe;
    try {
        universe.emplace(std::move(names));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }

    const auto& jdim = doc["dim"];
    if (!jdim.is_number_integer() || jdim.get<std::int64_t>() < 1)
        throw ParseError("dim must be an integer of at least 1");
    const std::size_t dim = jdim.get<std::size_t>();

    const auto& jbox = doc["box"];
    if (!jbox.is_object() || jbox.size() != 2 || !jbox.contains("min") ||
        !jbox.contains("max"))
        throw ParseError("box must be an object with exactly the keys min and max");

    auto read_point = [dim](const nlohmann::ordered_json& jpoint,
                            const std::string& what) {
        if (!jpoint.is_array())
            throw ParseError(what + " must be an array of integer coordinates");
        if (jpoint.size() != dim) {
            std::ostringstream os;
            os << what << " has " << jpoint.size() << " coordinates, dim is " << dim;
            throw ParseError(os.str());
        }
        LatticePoint point;
        for (const auto& jcoord : jpoint) {
            if (!jcoord.is_number_integer())
                throw ParseError(what + " must be an array of integer coordinates");
            point.coords.push_back(jcoord.get<std::int64_t>());
        }
        return point;
    };

    const LatticePoint box_min = read_point(jbox["min"], "box.min");
    const LatticePoint box_max = read_point(jbox["max"], "box.max");
    std::optional<GridBox> box;
    try {
        box.emplace(box_min, box_max);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }

    const auto& jentries = doc["entries"];
    if (!jentries.is_array()) throw ParseError("entries must be an array");
    std::vector<std::pair<LatticePoint, ElemSubset>> pairs;
    std::set<LatticePoint> seen;
    for (const auto& jentry : jentries) {
        if (!jentry.is_object() || jentry.size() != 2 || !jentry.contains("point") ||
            !jentry.contains("set"))
            throw ParseError(
                "each entry must be an object with exactly the keys point and set");
        const LatticePoint point = read_point(jentry["point"], "entry point");
        if (!box->contains(point))
            throw ParseError("point " + to_string(point) + " outside box " +
                             to_string(*box));
        if (!seen.insert(point).second)
            throw ParseError("duplicate point " + to_string(point));
        const auto& jset = jentry["set"];
        if (!jset.is_array())
            throw ParseError("set at " + to_string(point) +
                             " must be an array of element names");
        ElemSubset value(universe->size());
        for (const auto& jname : jset) {
            if (!jname.is_string())
                throw ParseError("set at " + to_string(point) +
                                 " must be an array of element names");
            const std::string name = jname.get<std::string>();
            const auto index = universe->index_of(name);
            if (!index)
                throw ParseError("unknown element \"" + name + "\" at " +
                                 to_string(point));
            value.set(*index);
        }
        if (value.none()) continue;  // normal form: empty values are not stored
        pairs.emplace_back(point, value);
    }

    return SoftSet(*universe, *box, pairs);
}

inline std::string serialize_document(const SoftSet& s) {
    nlohmann::ordered_json doc;
    doc["universe"] = s.universe().names();
    doc["dim"] = s.dim();
    nlohmann::ordered_json jbox;
    jbox["min"] = s.box().min().coords;
    jbox["max"] = s.box().max().coords;
    doc["box"] = std::move(jbox);
    nlohmann::ordered_json jentries = nlohmann::ordered_json::array();
    for (const auto& [point, value] : s.entries()) {
        nlohmann::ordered_json jentry;
        jentry["point"] = point.coords;
        std::vector<std::string> element_names;
        for (std::size_t u : value.indices())
            element_names.push_back(s.universe().name(u));
        jentry["set"] = std::move(element_names);
        jentries.push_back(std::move(jentry));
    }
    doc["entries"] = std::move(jentries);
    return doc.dump(2) + "\n";
}

}  // namespace softset
