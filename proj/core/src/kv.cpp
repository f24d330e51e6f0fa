#include "charcrf/kv.hpp"

#include <charconv>
#include <sstream>

#include "charcrf/error.hpp"
#include "charcrf/text.hpp"

namespace charcrf {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

KeyValueMap parse_kv(const std::string& text) {
  KeyValueMap kv;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw Error(errkind::bad_format,
                  "line " + std::to_string(lineno) + ": expected 'key = value', got '" +
                      stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    if (key.empty()) {
      throw Error(errkind::bad_format, "line " + std::to_string(lineno) + ": empty key");
    }
    kv[key] = trim(stripped.substr(eq + 1));
  }
  return kv;
}

KeyValueMap load_kv_file(const std::string& path) {
  try {
    return parse_kv(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == errkind::bad_format) {
      throw Error(errkind::bad_format, path + ": " + e.what());
    }
    throw;
  }
}

std::string dump_kv(const KeyValueMap& kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace charcrf
