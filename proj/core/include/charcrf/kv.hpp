#pragma once

#include <map>
#include <string>

namespace charcrf {

// Flat configuration: "key = value" per line, '#' comments, blank lines
// ignored. Keys and values are trimmed; later duplicates win.
using KeyValueMap = std::map<std::string, std::string>;

KeyValueMap parse_kv(const std::string& text);
KeyValueMap load_kv_file(const std::string& path);
std::string dump_kv(const KeyValueMap& kv);

// Shortest decimal form that parses back to the same 64-bit float.
std::string format_double(double v);

}  // namespace charcrf
