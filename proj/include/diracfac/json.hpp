#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diracfac/matrix.hpp"

namespace diracfac {

/// Minimal JSON document builder.  Keys keep insertion order and every
/// number is serialized with 17 significant digits, so identical inputs
/// produce byte-identical output (round-trip-safe doubles included).
class JsonValue {
public:
    using Array = std::vector<JsonValue>;
    using Object = std::vector<std::pair<std::string, JsonValue>>;

    JsonValue() : value_(nullptr) {}
    JsonValue(std::nullptr_t) : value_(nullptr) {}
    JsonValue(bool b) : value_(b) {}
    JsonValue(int v) : value_(static_cast<long long>(v)) {}
    JsonValue(unsigned v) : value_(static_cast<long long>(v)) {}
    JsonValue(long v) : value_(static_cast<long long>(v)) {}
    JsonValue(long long v) : value_(v) {}
    JsonValue(std::size_t v) : value_(static_cast<long long>(v)) {}
    JsonValue(double v) : value_(v) {}
    JsonValue(const char* s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(Array a) : value_(std::move(a)) {}

    static JsonValue array() { return JsonValue(Array{}); }
    static JsonValue object() {
        JsonValue v;
        v.value_ = Object{};
        return v;
    }

    JsonValue& push_back(JsonValue v) {
        std::get<Array>(value_).push_back(std::move(v));
        return *this;
    }

    JsonValue& set(std::string key, JsonValue v) {
        std::get<Object>(value_).emplace_back(std::move(key), std::move(v));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    static std::string format_double(double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    static void write_string(const std::string& s, std::string& out) {
        out += '"';
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default: out += c;
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        if (std::holds_alternative<std::nullptr_t>(value_)) {
            out += "null";
        } else if (auto* b = std::get_if<bool>(&value_)) {
            out += *b ? "true" : "false";
        } else if (auto* i = std::get_if<long long>(&value_)) {
            out += std::to_string(*i);
        } else if (auto* d = std::get_if<double>(&value_)) {
            out += format_double(*d);
        } else if (auto* s = std::get_if<std::string>(&value_)) {
            write_string(*s, out);
        } else if (auto* a = std::get_if<Array>(&value_)) {
            out += '[';
            for (std::size_t i = 0; i < a->size(); ++i) {
                if (i) out += ',';
                (*a)[i].write(out);
            }
            out += ']';
        } else {
            const Object& o = std::get<Object>(value_);
            out += '{';
            for (std::size_t i = 0; i < o.size(); ++i) {
                if (i) out += ',';
                write_string(o[i].first, out);
                out += ':';
                o[i].second.write(out);
            }
            out += '}';
        }
    }

    std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object> value_;
};

/// The matrix wire schema shared by every CLI subcommand:
/// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
inline JsonValue matrix_to_json(const CMatrix& m) {
    JsonValue entries = JsonValue::array();
    for (Cx z : m.entries()) {
        JsonValue pair = JsonValue::array();
        pair.push_back(z.real());
        pair.push_back(z.imag());
        entries.push_back(std::move(pair));
    }
    JsonValue v = JsonValue::object();
    v.set("rows", m.rows());
    v.set("cols", m.cols());
    v.set("entries", std::move(entries));
    return v;
}

} // namespace diracfac
