#pragma once

#include <string>
#include <vector>

namespace genrest {

/// Minimal canonical JSON writer. Keys are emitted in call order, floats with
/// 12 significant digits, no insignificant whitespace; identical inputs give
/// byte-identical output.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& k);
    void value(const std::string& v);
    void value(const char* v);
    void value(long long v);
    void value(int v) { value(static_cast<long long>(v)); }
    void value(unsigned long long v);
    void value(double v);
    void value(bool v);

    const std::string& str() const { return buf_; }

private:
    void comma();
    void raw(const std::string& s);

    std::string buf_;
    std::vector<bool> need_comma_; // per open container
    bool after_key_ = false;
};

std::string json_escape(const std::string& s);
/// %.12g rendering used for every floating-point value we serialize.
std::string format_double(double v);

} // namespace genrest
