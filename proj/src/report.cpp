#include "jb/report.hpp"

#include <cmath>
#include <cstdio>

namespace jb {

Json Json::object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
}
Json Json::array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
}
Json Json::number(double v) {
    Json j;
    j.kind_ = Kind::Number;
    j.num_ = v;
    return j;
}
Json Json::integer(long long v) {
    Json j;
    j.kind_ = Kind::Integer;
    j.int_ = v;
    return j;
}
Json Json::string(std::string v) {
    Json j;
    j.kind_ = Kind::String;
    j.str_ = std::move(v);
    return j;
}
Json Json::boolean(bool v) {
    Json j;
    j.kind_ = Kind::Bool;
    j.bool_ = v;
    return j;
}

Json& Json::set(const std::string& key, Json v) {
    members_.emplace_back(key, std::move(v));
    return *this;
}

Json& Json::push(Json v) {
    elements_.push_back(std::move(v));
    return *this;
}

std::string format_double_full(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e9999" : "-1e9999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_double_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if ((unsigned char)ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

void Json::write(std::string& out, int indent, int depth) const {
    auto pad = [&](int d) {
        if (indent > 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent) * d, ' ');
        }
    };
    switch (kind_) {
        case Kind::Number: out += format_double_full(num_); break;
        case Kind::Integer: out += std::to_string(int_); break;
        case Kind::String:
            out += '"';
            out += json_escape(str_);
            out += '"';
            break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::Object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : members_) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                out += '"';
                out += json_escape(k);
                out += "\":";
                if (indent > 0) out += ' ';
                v.write(out, indent, depth + 1);
            }
            if (!members_.empty()) pad(depth);
            out += '}';
            break;
        }
        case Kind::Array: {
            out += '[';
            bool first = true;
            for (const auto& v : elements_) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                v.write(out, indent, depth + 1);
            }
            if (!elements_.empty()) pad(depth);
            out += ']';
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    if (indent > 0) out += '\n';
    return out;
}

}  // namespace jb
