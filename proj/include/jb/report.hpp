// Report data model and serialization.  JSON is written by hand so float
// formatting (17 significant digits) and key order are bit-stable across
// runs; no external serializer gets a say.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jb {

// One JSON value with insertion-ordered object keys.
class Json {
  public:
    static Json object();
    static Json array();
    static Json number(double v);
    static Json integer(long long v);
    static Json string(std::string v);
    static Json boolean(bool v);

    Json& set(const std::string& key, Json v);  // object only
    Json& push(Json v);                         // array only

    std::string dump(int indent = 0) const;

  private:
    enum class Kind { Object, Array, Number, Integer, String, Bool };
    Kind kind_ = Kind::Object;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<std::pair<std::string, Json>> members_;
    std::vector<Json> elements_;
    void write(std::string& out, int indent, int depth) const;
};

// %.17g, round-trip exact for doubles
std::string format_double_full(double v);
// 12 significant digits, for human-facing text output
std::string format_double_text(double v);
std::string json_escape(const std::string& s);

}  // namespace jb
