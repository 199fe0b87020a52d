#include "tcalc/json_out.hpp"

#include <cstdio>

namespace tcalc {

std::string format_double15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

namespace {

void emit(const nlohmann::ordered_json& j, std::string& out) {
  using value_t = nlohmann::ordered_json::value_t;
  switch (j.type()) {
    case value_t::null: out += "null"; break;
    case value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case value_t::number_integer:
    case value_t::number_unsigned: out += j.dump(); break;
    case value_t::number_float: out += format_double15(j.get<double>()); break;
    case value_t::string: out += nlohmann::ordered_json(j.get<std::string>()).dump(); break;
    case value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        emit(e, out);
      }
      out += ']';
      break;
    }
    case value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::ordered_json(it.key()).dump();
        out += ':';
        emit(it.value(), out);
      }
      out += '}';
      break;
    }
    default: out += j.dump(); break;
  }
}

}  // namespace

std::string canonical_json(const nlohmann::ordered_json& j) {
  std::string out;
  emit(j, out);
  return out;
}

}  // namespace tcalc
