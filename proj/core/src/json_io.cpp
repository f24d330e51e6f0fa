#include "json_io.hpp"

#include <cstdint>
#include <cstring>

#include "charcrf/error.hpp"
#include "charcrf/text.hpp"

namespace charcrf::detail {

namespace {

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int base64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= bytes.size(); i += 3) {
    const unsigned v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back(kAlphabet[v & 63]);
  }
  const std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    const unsigned v = bytes[i] << 16;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back('=');
    out.push_back('=');
  } else if (rest == 2) {
    const unsigned v = (bytes[i] << 16) | (bytes[i + 1] << 8);
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text, const std::string& what) {
  if (text.size() % 4 != 0) {
    throw Error(errkind::bad_format, what + ": base64 length not a multiple of 4");
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      const char c = text[i + k];
      if (c == '=') {
        if (i + 4 != text.size() || k < 2) {
          throw Error(errkind::bad_format, what + ": misplaced base64 padding");
        }
        vals[k] = 0;
        ++pad;
      } else {
        if (pad > 0) {
          throw Error(errkind::bad_format, what + ": misplaced base64 padding");
        }
        vals[k] = base64_value(c);
        if (vals[k] < 0) {
          throw Error(errkind::bad_format, what + ": invalid base64 character");
        }
      }
    }
    const unsigned v = (vals[0] << 18) | (vals[1] << 12) | (vals[2] << 6) | vals[3];
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(v & 0xff));
  }
  return out;
}

}  // namespace

std::string encode_doubles(const std::vector<double>& values) {
  std::vector<std::uint8_t> bytes(values.size() * 8);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t u;
    std::memcpy(&u, &values[i], 8);
    for (int b = 0; b < 8; ++b) {
      bytes[i * 8 + b] = static_cast<std::uint8_t>((u >> (8 * b)) & 0xff);
    }
  }
  return base64_encode(bytes);
}

std::vector<double> decode_doubles(const std::string& text, const std::string& what) {
  const std::vector<std::uint8_t> bytes = base64_decode(text, what);
  if (bytes.size() % 8 != 0) {
    throw Error(errkind::bad_format, what + ": tensor byte count not a multiple of 8");
  }
  std::vector<double> out(bytes.size() / 8);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t u = 0;
    for (int b = 0; b < 8; ++b) {
      u |= static_cast<std::uint64_t>(bytes[i * 8 + b]) << (8 * b);
    }
    std::memcpy(&out[i], &u, 8);
  }
  return out;
}

const Json& need(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(errkind::bad_format, what + ": missing field '" + key + "'");
  }
  return j.at(key);
}

Json to_json(const nn::Matrix& m) {
  std::vector<double> flat(m.data(), m.data() + m.size());
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", encode_doubles(flat)}};
}

nn::Matrix matrix_from_json(const Json& j, const std::string& what) {
  const int rows = need(j, "rows", what).get<int>();
  const int cols = need(j, "cols", what).get<int>();
  if (rows < 0 || cols < 0) {
    throw Error(errkind::bad_format, what + ": negative tensor shape");
  }
  const std::vector<double> flat =
      decode_doubles(need(j, "data", what).get<std::string>(), what);
  if (flat.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(errkind::bad_format,
                what + ": tensor holds " + std::to_string(flat.size()) + " values, shape says " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  nn::Matrix m(rows, cols);
  std::memcpy(m.data(), flat.data(), flat.size() * sizeof(double));
  return m;
}

namespace {

nn::Parameter parameter_from_json(const Json& j, const std::string& what, std::string name) {
  nn::Parameter p;
  p.value = matrix_from_json(j, what);
  p.grad = nn::Matrix(p.value.rows(), p.value.cols());
  p.name = std::move(name);
  return p;
}

}  // namespace

Json to_json(const nn::Linear& l) {
  return Json{{"weight", to_json(l.weight.value)}, {"bias", to_json(l.bias.value)}};
}

nn::Linear linear_from_json(const Json& j, const std::string& what, const std::string& name) {
  nn::Linear l;
  l.weight = parameter_from_json(need(j, "weight", what), what + ".weight", name + ".weight");
  l.bias = parameter_from_json(need(j, "bias", what), what + ".bias", name + ".bias");
  if (l.bias.value.rows() != l.weight.value.rows() || l.bias.value.cols() != 1) {
    throw Error(errkind::bad_format, what + ": bias shape does not match the weight matrix");
  }
  return l;
}

Json to_json(const nn::LSTMParams& p) {
  return Json{{"w_input", to_json(p.w_input.value)},
              {"w_hidden", to_json(p.w_hidden.value)},
              {"bias", to_json(p.bias.value)}};
}

nn::LSTMParams lstm_from_json(const Json& j, const std::string& what, const std::string& name) {
  nn::LSTMParams p;
  p.w_input = parameter_from_json(need(j, "w_input", what), what + ".w_input", name + ".w_input");
  p.w_hidden =
      parameter_from_json(need(j, "w_hidden", what), what + ".w_hidden", name + ".w_hidden");
  p.bias = parameter_from_json(need(j, "bias", what), what + ".bias", name + ".bias");
  const int four_h = p.w_input.value.rows();
  if (four_h % 4 != 0 || four_h == 0 || p.w_hidden.value.rows() != four_h ||
      p.w_hidden.value.cols() != four_h / 4 || p.bias.value.rows() != four_h ||
      p.bias.value.cols() != 1) {
    throw Error(errkind::bad_format, what + ": inconsistent recurrent weight shapes");
  }
  p.hidden = four_h / 4;
  p.input = p.w_input.value.cols();
  return p;
}

Json to_json(const nn::BiLSTM& b) {
  return Json{{"fwd", to_json(b.fwd)}, {"bwd", to_json(b.bwd)}};
}

nn::BiLSTM bilstm_from_json(const Json& j, const std::string& what, const std::string& name) {
  nn::BiLSTM b;
  b.fwd = lstm_from_json(need(j, "fwd", what), what + ".fwd", name + ".fwd");
  b.bwd = lstm_from_json(need(j, "bwd", what), what + ".bwd", name + ".bwd");
  if (b.fwd.hidden != b.bwd.hidden || b.fwd.input != b.bwd.input) {
    throw Error(errkind::bad_format, what + ": forward and backward halves disagree on shape");
  }
  return b;
}

Json to_json(const nn::Optimizer::State& s) {
  Json m = Json::array();
  Json v = Json::array();
  for (const nn::Matrix& x : s.m) m.push_back(to_json(x));
  for (const nn::Matrix& x : s.v) v.push_back(to_json(x));
  return Json{{"step_count", s.step_count}, {"m", m}, {"v", v}};
}

nn::Optimizer::State optimizer_state_from_json(const Json& j, const std::string& what) {
  nn::Optimizer::State s;
  s.step_count = need(j, "step_count", what).get<long>();
  const Json& m = need(j, "m", what);
  const Json& v = need(j, "v", what);
  if (!m.is_array() || !v.is_array() || m.size() != v.size()) {
    throw Error(errkind::bad_format, what + ": malformed optimizer moments");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    s.m.push_back(matrix_from_json(m[i], what + ".m"));
    s.v.push_back(matrix_from_json(v[i], what + ".v"));
  }
  return s;
}

Json to_json(const lm::CharEncoder& e) {
  Json vocab = Json::array();
  for (char32_t c : e.vocab) vocab.push_back(static_cast<std::uint32_t>(c));
  return Json{{"vocab", vocab},
              {"chars", to_json(e.char_table.value)},
              {"types", to_json(e.type_table.value)}};
}

lm::CharEncoder encoder_from_json(const Json& j, const std::string& what) {
  lm::CharEncoder e;
  const Json& vocab = need(j, "vocab", what);
  if (!vocab.is_array()) {
    throw Error(errkind::bad_format, what + ": vocab must be an array");
  }
  e.vocab.reserve(vocab.size());
  for (const Json& c : vocab) e.vocab.push_back(static_cast<char32_t>(c.get<std::uint32_t>()));
  for (std::size_t i = 1; i < e.vocab.size(); ++i) {
    if (e.vocab[i - 1] >= e.vocab[i]) {
      throw Error(errkind::bad_format, what + ": vocab not sorted and unique");
    }
  }
  e.char_table = parameter_from_json(need(j, "chars", what), what + ".chars", "encoder.chars");
  e.type_table = parameter_from_json(need(j, "types", what), what + ".types", "encoder.types");
  if (e.char_table.value.rows() != static_cast<int>(e.vocab.size()) + 1) {
    throw Error(errkind::bad_format,
                what + ": char table rows do not cover the vocabulary plus the unseen slot");
  }
  if (e.type_table.value.rows() != kCharCategoryCount) {
    throw Error(errkind::bad_format, what + ": type table must have one row per char category");
  }
  return e;
}

Json to_json(const lm::CharLM& m) {
  return Json{{"direction", to_string(m.direction)},
              {"encoder", to_json(m.encoder)},
              {"bos", to_json(m.bos.value)},
              {"lstm", to_json(m.lstm)},
              {"proj", to_json(m.proj)}};
}

lm::CharLM lm_from_json(const Json& j, const std::string& what) {
  lm::CharLM m;
  m.direction = lm::lm_direction_from_string(need(j, "direction", what).get<std::string>());
  m.encoder = encoder_from_json(need(j, "encoder", what), what + ".encoder");
  m.bos = parameter_from_json(need(j, "bos", what), what + ".bos", "lm.bos");
  m.lstm = lstm_from_json(need(j, "lstm", what), what + ".lstm", "lm.lstm");
  m.proj = linear_from_json(need(j, "proj", what), what + ".proj", "lm.proj");
  if (m.bos.value.rows() != 1 || m.bos.value.cols() != m.encoder.encoding_dim()) {
    throw Error(errkind::bad_format, what + ": begin-of-sequence row width mismatch");
  }
  if (m.lstm.input != m.encoder.encoding_dim()) {
    throw Error(errkind::bad_format,
                what + ": recurrent input width does not match the encoder output");
  }
  if (m.proj.in_dim() != m.lstm.hidden || m.proj.out_dim() != m.encoder.vocab_size() + 1) {
    throw Error(errkind::bad_format, what + ": output projection shape mismatch");
  }
  return m;
}

Json to_json(const align::EmbeddingTable& t) {
  Json words = Json::object();
  for (const auto& [word, vec] : t.entries()) words[word] = encode_doubles(vec);
  return Json{{"dimension", t.dimension()},
              {"unk", encode_doubles(t.unk_vector())},
              {"whitespace", encode_doubles(t.whitespace_vector())},
              {"words", std::move(words)}};
}

align::EmbeddingTable embeddings_from_json(const Json& j, const std::string& what) {
  const int dim = need(j, "dimension", what).get<int>();
  if (dim <= 0) {
    throw Error(errkind::bad_format, what + ": embedding dimension must be positive");
  }
  auto vec = [&](const Json& v, const std::string& where) {
    std::vector<double> d = decode_doubles(v.get<std::string>(), where);
    if (static_cast<int>(d.size()) != dim) {
      throw Error(errkind::bad_format, where + ": vector width mismatch");
    }
    return d;
  };
  align::EmbeddingTable t(dim, vec(need(j, "unk", what), what + ".unk"),
                          vec(need(j, "whitespace", what), what + ".whitespace"));
  const Json& words = need(j, "words", what);
  if (!words.is_object()) {
    throw Error(errkind::bad_format, what + ": words must be an object");
  }
  for (const auto& [word, v] : words.items()) {
    t.add(word, vec(v, what + ".words." + word));
  }
  return t;
}

Json to_json(const align::IDFDictionary& d) {
  Json entries = Json::object();
  for (const auto& [word, idf] : d.entries) entries[word] = idf;
  return Json{{"document_count", d.document_count}, {"entries", std::move(entries)}};
}

align::IDFDictionary idf_from_json(const Json& j, const std::string& what) {
  align::IDFDictionary d;
  d.document_count = need(j, "document_count", what).get<long>();
  const Json& entries = need(j, "entries", what);
  if (!entries.is_object()) {
    throw Error(errkind::bad_format, what + ": entries must be an object");
  }
  for (const auto& [word, v] : entries.items()) d.set(word, v.get<double>());
  return d;
}

Json parse_json_file(const std::string& path) {
  const std::string raw = read_file(path);
  Json j = Json::parse(raw, nullptr, false);
  if (j.is_discarded()) {
    throw Error(errkind::bad_format, path + ": unparseable or truncated JSON");
  }
  return j;
}

}  // namespace charcrf::detail
