#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "charcrf/error.hpp"
#include "charcrf/text.hpp"
#include "charcrf/unicode.hpp"

namespace charcrf {

using nlohmann::json;

AnnotatedDocument document_from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(errkind::bad_format, std::string("bad JSONL line: ") + e.what());
  }
  if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
    throw Error(errkind::bad_format, "JSONL object needs a string \"text\" field");
  }
  AnnotatedDocument doc;
  doc.text = decode_utf8(j["text"].get<std::string>());
  if (j.contains("entities")) {
    if (!j["entities"].is_array()) {
      throw Error(errkind::bad_format, "\"entities\" must be an array");
    }
    for (const auto& e : j["entities"]) {
      if (!e.is_object() || !e.contains("start") || !e.contains("end") ||
          !e.contains("type")) {
        throw Error(errkind::bad_format, "entity needs start, end, type fields");
      }
      doc.entities.push_back({e["start"].get<int>(), e["end"].get<int>(),
                              e["type"].get<std::string>()});
    }
  }
  validate_document(doc);
  return doc;
}

std::string document_to_json_line(const AnnotatedDocument& doc) {
  json entities = json::array();
  for (const auto& s : doc.entities) {
    entities.push_back({{"start", s.start}, {"end", s.end}, {"type", s.type}});
  }
  json j{{"text", encode_utf8(doc.text)}, {"entities", entities}};
  return j.dump();
}

std::vector<AnnotatedDocument> load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errkind::resource_not_found, "cannot open " + path);
  }
  std::vector<AnnotatedDocument> docs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      docs.push_back(document_from_json_line(line));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return docs;
}

void save_jsonl(const std::vector<AnnotatedDocument>& docs, const std::string& path) {
  std::ostringstream out;
  for (const auto& d : docs) out << document_to_json_line(d) << '\n';
  write_file_atomic(path, out.str());
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.parent_path();
  fs::path tmp = (dir.empty() ? fs::path(".") : dir) /
                 (target.filename().string() + ".tmp." +
                  std::to_string(static_cast<unsigned long>(::getpid())));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      throw Error(errkind::io_error, "cannot write " + tmp.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      throw Error(errkind::io_error, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(errkind::io_error, "cannot rename into " + path + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errkind::resource_not_found, "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace charcrf
