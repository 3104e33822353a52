#include "genrest/json_writer.hpp"

#include <cstdio>

namespace genrest {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void JsonWriter::comma() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!need_comma_.empty()) {
        if (need_comma_.back()) buf_ += ',';
        need_comma_.back() = true;
    }
}

void JsonWriter::raw(const std::string& s) {
    comma();
    buf_ += s;
}

void JsonWriter::begin_object() {
    raw("{");
    need_comma_.push_back(false);
}

void JsonWriter::end_object() {
    buf_ += '}';
    need_comma_.pop_back();
}

void JsonWriter::begin_array() {
    raw("[");
    need_comma_.push_back(false);
}

void JsonWriter::end_array() {
    buf_ += ']';
    need_comma_.pop_back();
}

void JsonWriter::key(const std::string& k) {
    raw("\"" + json_escape(k) + "\":");
    after_key_ = true;
}

void JsonWriter::value(const std::string& v) { raw("\"" + json_escape(v) + "\""); }
void JsonWriter::value(const char* v) { value(std::string(v)); }
void JsonWriter::value(long long v) { raw(std::to_string(v)); }
void JsonWriter::value(unsigned long long v) { raw(std::to_string(v)); }
void JsonWriter::value(double v) { raw(format_double(v)); }
void JsonWriter::value(bool v) { raw(v ? "true" : "false"); }

} // namespace genrest
