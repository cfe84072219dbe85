#ifndef EVSNORM_JSON_WRITER_HPP
#define EVSNORM_JSON_WRITER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evsnorm {

/// Minimal streaming JSON emitter with insertion-ordered keys and a fixed
/// float rendering (%.17g). Reports must be byte-identical across runs, so
/// nothing here depends on locale, hashing or pointer order.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();

  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();

  /// Pre-rendered JSON fragment inserted verbatim (used for nested reports).
  JsonWriter& raw(std::string_view fragment);

  const std::string& str() const { return out_; }

  static std::string escape(std::string_view s);

 private:
  void comma();

  std::string out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

}  // namespace evsnorm

#endif
