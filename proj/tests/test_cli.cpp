#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "charcrf/kv.hpp"
#include "charcrf/text.hpp"
#include "doctest.h"

// CHARCRF_CLI is the binary path, injected by the build.

namespace fs = std::filesystem;
using charcrf::format_double;
using charcrf::read_file;
using charcrf::write_file_atomic;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("charcrf_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }

  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& contents) const {
    const std::string p = file(name);
    write_file_atomic(p, contents);
    return p;
  }
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

CliResult run_cli(const TempDir& dir, const std::vector<std::string>& args) {
  const std::string out_path = dir.file("cli_stdout.txt");
  const std::string err_path = dir.file("cli_stderr.txt");
  std::string command = shell_quote(CHARCRF_CLI);
  for (const std::string& a : args) command += " " + shell_quote(a);
  command += " > " + shell_quote(out_path) + " 2> " + shell_quote(err_path);
  const int status = std::system(command.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = read_file(out_path);
  res.err = read_file(err_path);
  return res;
}

const char* kCharConfig =
    "entity_types = T\n"
    "alignment_mode = none\n"
    "use_context = false\n"
    "use_char_encoding = true\n"
    "char_dim = 8\n"
    "type_dim = 4\n"
    "hidden_dim = 8\n"
    "dropout = 0\n"
    "rep_dropout = 0\n"
    "lr = 0.02\n"
    "epochs = 80\n"
    "seed = 1\n";

const char* kXCorpusJsonl =
    "{\"text\":\"aXa\",\"entities\":[{\"start\":1,\"end\":2,\"type\":\"T\"}]}\n"
    "{\"text\":\"XXb\",\"entities\":[{\"start\":0,\"end\":2,\"type\":\"T\"}]}\n"
    "{\"text\":\"abX\",\"entities\":[{\"start\":2,\"end\":3,\"type\":\"T\"}]}\n"
    "{\"text\":\"aaa\",\"entities\":[]}\n"
    "{\"text\":\"Xab\",\"entities\":[{\"start\":0,\"end\":1,\"type\":\"T\"}]}\n"
    "{\"text\":\"bXXa\",\"entities\":[{\"start\":1,\"end\":3,\"type\":\"T\"}]}\n"
    "{\"text\":\"aXXb\",\"entities\":[{\"start\":1,\"end\":3,\"type\":\"T\"}]}\n"
    "{\"text\":\"bbXa\",\"entities\":[{\"start\":2,\"end\":3,\"type\":\"T\"}]}\n";

}  // namespace

TEST_CASE("cli help and argument errors") {
  TempDir dir;
  const CliResult help = run_cli(dir, {"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("build-dict") != std::string::npos);
  CHECK(help.out.find("lm-train") != std::string::npos);
  CHECK(help.out.find("convert") != std::string::npos);

  const CliResult none = run_cli(dir, {});
  CHECK(none.exit_code == 1);
  CHECK(none.err.find("error: bad-arguments:") != std::string::npos);

  const CliResult unknown = run_cli(dir, {"frobnicate"});
  CHECK(unknown.exit_code == 1);

  const CliResult missing = run_cli(dir, {"build-dict", "--corpus", "x.txt"});
  CHECK(missing.exit_code == 1);  // --out is required
}

TEST_CASE("build-dict computes document frequencies") {
  TempDir dir;
  const std::string corpus = dir.write("corpus.txt", "a b\nb c\nb\n");
  const std::string out = dir.file("dict.tsv");

  const CliResult res = run_cli(dir, {"build-dict", "--corpus", corpus, "--out", out});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("wrote 1 words") != std::string::npos);
  CHECK(read_file(out) == "b\t1\n");

  const CliResult all =
      run_cli(dir, {"build-dict", "--corpus", corpus, "--min-df", "1", "--out", out, "--quiet"});
  CHECK(all.exit_code == 0);
  CHECK(all.out.empty());
  const std::string hapax = format_double(std::log(2.0) + 1.0);
  CHECK(read_file(out) == "a\t" + hapax + "\nb\t1\nc\t" + hapax + "\n");
}

TEST_CASE("build-dict restricted to an embedding vocabulary") {
  TempDir dir;
  const std::string corpus = dir.write("corpus.txt", "a b\nb c\n");
  const std::string vecs = dir.write("vecs.txt", "1 2\nb 0.5 0.5\n");
  const std::string out = dir.file("dict.tsv");
  const CliResult res = run_cli(
      dir, {"build-dict", "--corpus", corpus, "--embeddings", vecs, "--min-df", "1", "--out", out});
  CHECK(res.exit_code == 0);
  CHECK(read_file(out) == "b\t1\n");
}

TEST_CASE("build-dict rejects an empty corpus") {
  TempDir dir;
  const std::string corpus = dir.write("empty.txt", "");
  const CliResult res =
      run_cli(dir, {"build-dict", "--corpus", corpus, "--out", dir.file("d.tsv")});
  CHECK(res.exit_code == 1);
  CHECK(res.err.find("error: invalid-argument:") != std::string::npos);
}

TEST_CASE("missing input files are reported with their path") {
  TempDir dir;
  const CliResult res =
      run_cli(dir, {"build-dict", "--corpus", dir.file("absent.txt"), "--out", dir.file("d.tsv")});
  CHECK(res.exit_code == 1);
  CHECK(res.err.find("error: resource-not-found: cannot open") != std::string::npos);
  CHECK(res.err.find("absent.txt") != std::string::npos);
}

TEST_CASE("lm-train loss falls and both directions mirror each other") {
  TempDir dir;
  std::string lines, reversed;
  for (int i = 0; i < 20; ++i) {
    lines += "the cat sat on the mat\n";
    reversed += "tam eht no tas tac eht\n";
  }
  const std::string corpus = dir.write("corpus.txt", lines);
  const std::string rev_corpus = dir.write("rev.txt", reversed);

  const std::vector<std::string> common = {"--set", "lm_epochs=3", "--set", "lm_hidden=8",
                                           "--set", "proj_dim=4", "--set", "char_dim=6",
                                           "--set", "type_dim=3", "--seed", "7"};
  std::vector<std::string> fwd_args = {"lm-train", "--corpus", corpus, "--direction", "forward",
                                       "--out", dir.file("fwd.json")};
  fwd_args.insert(fwd_args.end(), common.begin(), common.end());
  const CliResult fwd = run_cli(dir, fwd_args);
  CHECK(fwd.exit_code == 0);

  // epoch log lines carry falling losses
  std::vector<double> losses;
  std::istringstream out(fwd.out);
  std::string line;
  while (std::getline(out, line)) {
    CHECK(line.find("epoch=") == 0);
    const auto at = line.find("loss=");
    REQUIRE(at != std::string::npos);
    losses.push_back(std::strtod(line.c_str() + at + 5, nullptr));
    CHECK(line.find("ppl=") != std::string::npos);
  }
  REQUIRE(losses.size() == 3);
  CHECK(losses.back() < losses.front());

  // a backward model over reversed text is the same computation
  std::vector<std::string> bwd_args = {"lm-train", "--corpus", rev_corpus, "--direction",
                                       "backward", "--out", dir.file("bwd.json")};
  bwd_args.insert(bwd_args.end(), common.begin(), common.end());
  const CliResult bwd = run_cli(dir, bwd_args);
  CHECK(bwd.exit_code == 0);
  CHECK(bwd.out == fwd.out);
}

TEST_CASE("lm-train resume reproduces an uninterrupted run") {
  TempDir dir;
  std::string lines;
  for (int i = 0; i < 10; ++i) lines += "abcabcabc\n";
  const std::string corpus = dir.write("corpus.txt", lines);
  const std::vector<std::string> shape = {"--set", "lm_hidden=6", "--set", "proj_dim=4",
                                          "--set", "char_dim=4", "--set", "type_dim=2",
                                          "--seed", "3"};

  auto train = [&](const std::string& out, const std::string& epochs, bool resume) {
    std::vector<std::string> args = {"lm-train", "--corpus", corpus, "--direction", "forward",
                                     "--out", out, "--set", "lm_epochs=" + epochs, "--quiet"};
    if (resume) args.push_back("--resume");
    args.insert(args.end(), shape.begin(), shape.end());
    return run_cli(dir, args);
  };

  CHECK(train(dir.file("full.json"), "3", false).exit_code == 0);
  CHECK(train(dir.file("step.json"), "1", false).exit_code == 0);
  CHECK(train(dir.file("step.json"), "3", true).exit_code == 0);
  CHECK(read_file(dir.file("step.json")) == read_file(dir.file("full.json")));

  // direction mismatch on resume is caught
  const CliResult wrong = run_cli(dir, {"lm-train", "--corpus", corpus, "--direction", "backward",
                                        "--resume", "--out", dir.file("full.json")});
  CHECK(wrong.exit_code == 1);
  CHECK(wrong.err.find("error: invalid-argument:") != std::string::npos);
}

TEST_CASE("align dump in match mode") {
  TempDir dir;
  const std::string idf = dir.write("dict.tsv", "Finals\t1.5\nNBA\t2\n");
  const CliResult res =
      run_cli(dir, {"align", "--text", "NBA Finals", "--mode", "match", "--idf", idf});
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "0\tN\tword\tNBA\n"
        "1\tB\tword\tNBA\n"
        "2\tA\tword\tNBA\n"
        "3\t \tws\n"
        "4\tF\tword\tFinals\n"
        "5\ti\tword\tFinals\n"
        "6\tn\tword\tFinals\n"
        "7\ta\tword\tFinals\n"
        "8\tl\tword\tFinals\n"
        "9\ts\tword\tFinals\n");
}

TEST_CASE("align dump in tokenize mode keeps hyphenated tokens whole") {
  TempDir dir;
  const std::string vecs =
      dir.write("vecs.txt", "2 3\nLakers-Raptors 0.1 0.2 0.3\ngame 1 1 1\n");
  const CliResult res = run_cli(dir, {"align", "--text", "Lakers-Raptors game!", "--mode",
                                      "tokenize", "--embeddings", vecs});
  CHECK(res.exit_code == 0);
  std::istringstream out(res.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(out, line)) rows.push_back(line);
  REQUIRE(rows.size() == 20);
  for (int i = 0; i < 14; ++i) {
    CHECK(rows[i].find("word\tLakers-Raptors") != std::string::npos);
  }
  CHECK(rows[14] == "14\t \tws");
  for (int i = 15; i < 19; ++i) CHECK(rows[i].find("word\tgame") != std::string::npos);
  CHECK(rows[19] == "19\t!\tunk");  // the split-off bang is not in the table
}

TEST_CASE("align errors") {
  TempDir dir;
  const CliResult no_idf = run_cli(dir, {"align", "--text", "x", "--mode", "match"});
  CHECK(no_idf.exit_code == 1);
  CHECK(no_idf.err.find("error: bad-arguments:") != std::string::npos);

  const CliResult missing =
      run_cli(dir, {"align", "--text", "x", "--mode", "match", "--idf", dir.file("no.tsv")});
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("error: resource-not-found:") != std::string::npos);

  const CliResult bad_mode = run_cli(dir, {"align", "--text", "x", "--mode", "sideways"});
  CHECK(bad_mode.exit_code == 1);
}

TEST_CASE("train, tag and eval round trip") {
  TempDir dir;
  const std::string config = dir.write("model.cfg", kCharConfig);
  const std::string train_path = dir.write("train.jsonl", kXCorpusJsonl);
  const std::string model_path = dir.file("model.json");

  const CliResult trained = run_cli(dir, {"train", "--train", train_path, "--out", model_path,
                                          "--config", config, "--quiet"});
  CHECK(trained.exit_code == 0);
  CHECK(fs::exists(model_path));

  // raw-line input
  const std::string raw = dir.write("input.txt", "aXa\nqXXq\n");
  const std::string pred_path = dir.file("pred.jsonl");
  const CliResult tagged =
      run_cli(dir, {"tag", "--model", model_path, "--input", raw, "--out", pred_path});
  CHECK(tagged.exit_code == 0);
  const auto pred = charcrf::load_jsonl(pred_path);
  REQUIRE(pred.size() == 2);
  CHECK(pred[0].text == U"aXa");
  CHECK(pred[0].entities == std::vector<charcrf::EntitySpan>{{1, 2, "T"}});

  // tagging twice produces identical bytes
  const std::string pred2_path = dir.file("pred2.jsonl");
  run_cli(dir, {"tag", "--model", model_path, "--input", raw, "--out", pred2_path});
  CHECK(read_file(pred2_path) == read_file(pred_path));

  // jsonl input: stored entities are replaced by predictions
  const std::string tagged_train = dir.file("train_pred.jsonl");
  const CliResult retag = run_cli(dir, {"tag", "--model", model_path, "--input", train_path,
                                        "--jsonl", "--out", tagged_train});
  CHECK(retag.exit_code == 0);

  // the model fits its own training data, so eval against gold is perfect
  const std::string report_path = dir.file("report.json");
  const CliResult scored = run_cli(dir, {"eval", "--gold", train_path, "--pred", tagged_train,
                                         "--json", report_path});
  CHECK(scored.exit_code == 0);
  CHECK(scored.out.find("overall") != std::string::npos);
  CHECK(scored.out.find("1.0000  1.0000  1.0000") != std::string::npos);
  CHECK(read_file(report_path).find("\"f1\": 1.0") != std::string::npos);

  // self-comparison is trivially perfect too
  const CliResult self = run_cli(dir, {"eval", "--gold", train_path, "--pred", train_path});
  CHECK(self.exit_code == 0);
  CHECK(self.out.find("1.0000  1.0000  1.0000") != std::string::npos);
}

TEST_CASE("train argument validation") {
  TempDir dir;
  const std::string train_path = dir.write("train.jsonl", kXCorpusJsonl);
  // default config enables match alignment, which needs resources
  const CliResult res =
      run_cli(dir, {"train", "--train", train_path, "--out", dir.file("m.json")});
  CHECK(res.exit_code == 1);
  CHECK(res.err.find("error: bad-arguments:") != std::string::npos);
  CHECK(res.err.find("--embeddings") != std::string::npos);

  const CliResult bad_set = run_cli(dir, {"train", "--train", train_path, "--out",
                                          dir.file("m.json"), "--set", "epochs"});
  CHECK(bad_set.exit_code == 1);
  CHECK(bad_set.err.find("KEY=VALUE") != std::string::npos);

  const CliResult bad_key = run_cli(dir, {"train", "--train", train_path, "--out",
                                          dir.file("m.json"), "--set", "warp_speed=9"});
  CHECK(bad_key.exit_code == 1);
  CHECK(bad_key.err.find("error: invalid-argument:") != std::string::npos);
}

TEST_CASE("convert projects word labels onto raw text") {
  TempDir dir;
  const std::string conll = dir.write("sentences.conll",
                                      "a\tO\n"
                                      "-LRB-\tO\n"
                                      "b\tS-PER\n"
                                      "-RRB-\tO\n"
                                      "\n"
                                      "Times\tB-LOC\n"
                                      "Square\tE-LOC\n");
  const std::string raw = dir.write("raw.txt", "a (b)\nTimes Square\n");
  const std::string out = dir.file("docs.jsonl");
  const CliResult res =
      run_cli(dir, {"convert", "--conll", conll, "--raw", raw, "--out", out, "--quiet"});
  CHECK(res.exit_code == 0);
  CHECK(read_file(out) ==
        "{\"entities\":[{\"end\":4,\"start\":3,\"type\":\"PER\"}],\"text\":\"a (b)\"}\n"
        "{\"entities\":[{\"end\":12,\"start\":0,\"type\":\"LOC\"}],\"text\":\"Times Square\"}\n");

  // sentence counts must line up, and failures name the sentence
  const std::string short_raw = dir.write("short.txt", "a (b)\n");
  const CliResult counts =
      run_cli(dir, {"convert", "--conll", conll, "--raw", short_raw, "--out", out});
  CHECK(counts.exit_code == 1);
  CHECK(counts.err.find("error: bad-format:") != std::string::npos);

  const std::string bad_raw = dir.write("bad.txt", "a (b)\nTimes Circle\n");
  const CliResult failed =
      run_cli(dir, {"convert", "--conll", conll, "--raw", bad_raw, "--out", out});
  CHECK(failed.exit_code == 1);
  CHECK(failed.err.find("error: alignment-failed: sentence 2:") != std::string::npos);
  CHECK(failed.err.find("Square") != std::string::npos);
}
