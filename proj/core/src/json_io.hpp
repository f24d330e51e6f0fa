#pragma once

// JSON helpers shared by the model and language-model file formats.
// Tensors travel as base64 of little-endian 64-bit floats. Internal to the
// library; not installed.

#include <string>
#include <vector>

#include "charcrf/align.hpp"
#include "charcrf/lm.hpp"
#include "charcrf/nn.hpp"
#include "json.hpp"

namespace charcrf::detail {

using Json = nlohmann::json;

std::string encode_doubles(const std::vector<double>& values);
std::vector<double> decode_doubles(const std::string& text, const std::string& what);

// Field access that reports the missing key and which file section it
// belongs to.
const Json& need(const Json& j, const char* key, const std::string& what);

Json to_json(const nn::Matrix& m);
nn::Matrix matrix_from_json(const Json& j, const std::string& what);

Json to_json(const nn::Linear& l);
nn::Linear linear_from_json(const Json& j, const std::string& what, const std::string& name);

Json to_json(const nn::LSTMParams& p);
nn::LSTMParams lstm_from_json(const Json& j, const std::string& what, const std::string& name);

Json to_json(const nn::BiLSTM& b);
nn::BiLSTM bilstm_from_json(const Json& j, const std::string& what, const std::string& name);

Json to_json(const nn::Optimizer::State& s);
nn::Optimizer::State optimizer_state_from_json(const Json& j, const std::string& what);

Json to_json(const lm::CharEncoder& e);
lm::CharEncoder encoder_from_json(const Json& j, const std::string& what);

Json to_json(const lm::CharLM& m);
lm::CharLM lm_from_json(const Json& j, const std::string& what);

Json to_json(const align::EmbeddingTable& t);
align::EmbeddingTable embeddings_from_json(const Json& j, const std::string& what);

Json to_json(const align::IDFDictionary& d);
align::IDFDictionary idf_from_json(const Json& j, const std::string& what);

// Parses file content, or throws a bad-format error naming the path.
Json parse_json_file(const std::string& path);

}  // namespace charcrf::detail
