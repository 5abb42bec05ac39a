// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hanpiece/cli.h"
#include "hanpiece/corpus.h"
#include "hanpiece/error.h"
#include "hanpiece/hangul.h"
#include "hanpiece/metrics.h"
#include "hanpiece/morph.h"
#include "hanpiece/pipeline.h"
#include "hanpiece/wordpiece.h"
#include "oracles.h"
#include "test_util.h"

using namespace hanpiece;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome HangulRoundTrip() {
  const auto start = Clock::now();
  int bad = 0;
  for (char32_t s = kSyllableBase; s <= kSyllableLast; ++s) {
    if (ComposeJamo(DecomposeSyllable(s)) != s) ++bad;
  }
  const double t = Seconds(start);
  return {bad == 0 && t < 1.0, Fmt("%d mismatches, %.3fs (limit 1s)", bad, t)};
}

Outcome NfdOracle() {
  const auto start = Clock::now();
  int bad = 0;
  for (char32_t s = kSyllableBase; s <= kSyllableLast; ++s) {
    if (DecomposeSyllable(s).ToU32String() != oracle::IcuNfd(std::u32string(1, s))) ++bad;
  }
  const double t = Seconds(start);
  return {bad == 0 && t < 5.0, Fmt("%d of %d disagree, %.3fs (limit 5s)", bad, kSyllableCount, t)};
}

Outcome RamyeonRows() {
  const auto s = testing::LoadFixture("ramyeon_gold.tsv").at(0);
  const std::vector<std::pair<PipelineMode, std::string>> rows = {
      {PipelineMode::kMorWp, "나 이 라면 해물 라면 을 먹 었 을걸 ."},
      {PipelineMode::kMorWpSd, "ㄴㅏ ㅇㅣ ㄹㅏㅁㅕㄴ ㅎㅐㅁㅜㄹ ㄹㅏㅁㅕㄴ ㅇㅡㄹ ㅁㅓㄱ ㅇㅓㅆ ㅇㅡㄹㄱㅓㄹ ."},
      {PipelineMode::kMorWpMd, "ㄴㅏ 이 라면 ㅎㅐㅁㅜㄹ ㄹㅏㅁㅕㄴ 을 ㅁㅓㄱ 었 을걸 ."},
  };
  int ok = 0;
  std::string detail;
  for (const auto& [mode, expected] : rows) {
    const std::string got = testing::DisplayRow(Pretokenize(s, mode));
    if (got == expected) {
      ++ok;
    } else {
      detail += std::string(" ") + std::string(ModeName(mode)) + " got [" + got + "]";
    }
  }
  return {ok == 3, Fmt("%d/3 rows exact", ok) + detail};
}

Outcome FusedSyllable() {
  const std::vector<MorphemeSpec> specs = {{"가", "VV"}, {"았", "EP"}, {"다", "EF"}};
  const auto e = AlignSurface("갔다", specs, ClassificationTable::Default());
  std::string joined;
  for (const auto& m : e.morphemes) joined += m.surface;
  const bool concat = DecomposeText(joined) == DecomposeText(std::string("갔다")) &&
                      DecomposeText(joined) == oracle::IcuNfdUtf8("갔다");
  const bool trail = e.morphemes.size() == 3 && e.morphemes[1].surface == "ᆻ";
  const bool pass = !e.alignment_failed && concat && trail;
  std::string frags;
  for (const auto& m : e.morphemes) frags += " " + ToDisplayJamo(std::string_view(m.surface));
  return {pass, "fragments" + frags};
}

Outcome TrainerOracle() {
  const auto start = Clock::now();
  std::mt19937 rng(2023);
  const std::vector<std::string> letters = {"나", "라", "면", "해", "물", "을", "ᄆ", "ᅥ", "ᆨ"};
  std::uniform_int_distribution<int> letter(0, static_cast<int>(letters.size()) - 1);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> count(1, 20);
  int corpora = 0;
  int merges = 0;
  std::string failure;
  for (; corpora < 25 && failure.empty(); ++corpora) {
    const TrainConfig config{static_cast<size_t>(25 + 4 * corpora), 2, 100};
    WordPieceTrainer trainer(config);
    for (int w = 0; w < 50; ++w) {
      std::string word;
      for (int k = len(rng); k > 0; --k) word += letters[letter(rng)];
      trainer.Feed(PreToken{word, false}, count(rng));
    }
    const auto got = trainer.Train();
    const auto want = oracle::SimulateWordPiece(trainer.word_counts(), config.vocab_size,
                                                config.min_frequency, config.max_token_length);
    if (got.merges.size() != want.merges.size()) {
      failure = Fmt("corpus %d: %zu vs %zu merges", corpora, got.merges.size(),
                    want.merges.size());
    }
    for (size_t i = 0; failure.empty() && i < got.merges.size(); ++i) {
      const auto& g = got.merges[i];
      const auto& o = want.merges[i];
      if (g.left != o.left || g.right != o.right || g.pair_frequency != o.freq) {
        failure = Fmt("corpus %d: step %zu differs", corpora, i);
      }
    }
    if (failure.empty() && got.vocab.entries() != want.vocab) {
      failure = Fmt("corpus %d: vocab differs", corpora);
    }
    merges += static_cast<int>(got.merges.size());
  }
  const double t = Seconds(start);
  if (!failure.empty()) return {false, failure};
  return {t < 10.0, Fmt("%d corpora of 50 words, %d merges identical, %.2fs", corpora, merges, t)};
}

Outcome GreedyProperty() {
  std::mt19937 rng(99);
  const std::vector<std::string> letters = {"가", "나", "다", "ᄀ", "ᅡ", "ᆻ", "a", "."};
  std::uniform_int_distribution<int> letter(0, static_cast<int>(letters.size()) - 1);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> word_len(1, 10);
  std::bernoulli_distribution coin(0.5);
  const int cases = 20000;
  int violations = 0;
  int tokens = 0;
  int covered = 0;
  for (int c = 0; c < cases; ++c) {
    std::vector<std::string> entries(kSpecialTokens.begin(), kSpecialTokens.end());
    // Most cases get every single letter so words are coverable.
    if (c % 4 != 0) {
      for (const auto& l : letters) {
        entries.push_back(l);
        entries.push_back("##" + l);
      }
    }
    for (int i = 0; i < 16; ++i) {
      std::string piece = coin(rng) ? "##" : "";
      for (int k = len(rng); k > 0; --k) piece += letters[letter(rng)];
      if (std::find(entries.begin(), entries.end(), piece) == entries.end()) {
        entries.push_back(piece);
      }
    }
    const Vocabulary vocab(entries);
    std::string word;
    for (int k = word_len(rng); k > 0; --k) word += letters[letter(rng)];
    const PreToken token{word, coin(rng)};
    TokenSequence out;
    EncodePreToken(token, vocab, &out);
    if (out == TokenSequence{"[UNK]"}) continue;
    ++covered;
    const auto scalars = oracle::Scalars(word);
    size_t pos = 0;
    for (size_t i = 0; i < out.size(); ++i) {
      ++tokens;
      const bool prefixed = i > 0 || token.continuation;
      const std::string prefix = prefixed ? "##" : "";
      if (!out[i].starts_with(prefix) || !vocab.Contains(out[i])) {
        ++violations;
        break;
      }
      const size_t n = oracle::Scalars(out[i].substr(prefix.size())).size();
      for (size_t longer = n + 1; pos + longer <= scalars.size(); ++longer) {
        std::string candidate = prefix;
        for (size_t k = pos; k < pos + longer; ++k) candidate += scalars[k];
        if (vocab.Contains(candidate)) ++violations;
      }
      pos += n;
    }
    if (pos != scalars.size()) ++violations;
  }
  return {violations == 0 && covered >= 10000,
          Fmt("%d cases (%d without [UNK]), %d tokens checked, %d violations", cases, covered,
              tokens, violations)};
}

Outcome MetricsOracle() {
  std::vector<std::vector<TokenSequence>> corpora;
  corpora.push_back({{"나", "##라", "[UNK]", "집"}});
  corpora.push_back({{"나"}, {"나"}});
  corpora.push_back({{"나", "라"}, {"나", "##라"}});

  // Fixture corpora encoded with vocabularies trained on themselves.
  std::vector<Vocabulary> vocabs;
  std::ifstream in(testing::DataPath("mini_corpus.tsv"));
  const auto table = ClassificationTable::Default();
  const auto sentences = ParseTaggedCorpus(in, table);
  for (auto mode : kAllModes) {
    WordPieceTrainer trainer(TrainConfig{500, 2, 100});
    std::vector<std::vector<PreToken>> pre;
    for (size_t i = 0; i < sentences.size(); i += 3) {
      pre.push_back(IsMorphemeMode(mode) ? Pretokenize(sentences[i], mode)
                                         : Pretokenize(SentenceSurface(sentences[i]), mode));
      trainer.Feed(pre.back());
    }
    vocabs.push_back(trainer.Train().vocab);
    std::vector<TokenSequence> encoded;
    // Half of the sentences were not in training, so [UNK] can appear.
    for (size_t i = 0; i < sentences.size(); i += 2) {
      const auto p = IsMorphemeMode(mode) ? Pretokenize(sentences[i], mode)
                                          : Pretokenize(SentenceSurface(sentences[i]), mode);
      encoded.push_back(Encode(p, vocabs.back()));
    }
    corpora.push_back(std::move(encoded));
  }

  int checked = 0;
  double worst = 0;
  auto track = [&](double a, double b) {
    ++checked;
    const double scale = std::max(std::fabs(a), std::fabs(b));
    const double rel = scale == 0 ? 0 : std::fabs(a - b) / scale;
    worst = std::max(worst, rel);
  };
  for (const auto& c : corpora) {
    const auto r = CorpusMetrics(c);
    const auto o = oracle::RecountMetrics(c);
    track(r.oov_rate, o.oov_rate);
    track(r.wsr, o.wsr);
    track(r.wsr_sentence_mean, o.mean);
    // A std of exactly zero in one and ~1e-15 in the other is not a
    // relative-error question.
    if (std::max(r.wsr_sentence_std, o.stddev) > 1e-9) track(r.wsr_sentence_std, o.stddev);
  }
  for (const auto& v : vocabs) track(VocabWser(v), oracle::WserRecount(v.entries()));
  return {worst <= 1e-9, Fmt("%d quantities, worst relative error %.2e (limit 1e-9)", checked,
                             worst)};
}

Outcome Cleaning() {
  const CleanConfig config;
  int ok = 0;
  ok += CleanLine("나는 집에 갔다", config) == std::optional<std::string>("나는 집에 갔다");
  ok += !CleanLine("나는 갔다", config).has_value();
  ok += CleanLine("나는 ★집에★ 갔다", config) == std::optional<std::string>("나는 집에 갔다");
  ok += CleanLine("日本 나는 集 집에 갔다 ☆", config) ==
        std::optional<std::string>("나는 집에 갔다");

  std::string input;
  std::mt19937 rng(1);
  const std::vector<std::string> parts = {"나는", " ", "★", "집에", "abc", "漢", "  ", "갔다", "\t"};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(parts.size()) - 1);
  for (int line = 0; line < 5000; ++line) {
    for (int k = 0; k < 9; ++k) input += parts[pick(rng)];
    input += '\n';
  }
  std::istringstream in(input);
  std::ostringstream once;
  CleanCorpus(in, once, config, 4);
  std::istringstream again_in(once.str());
  std::ostringstream twice;
  CleanCorpus(again_in, twice, config, 4);
  const bool idempotent = once.str() == twice.str();
  return {ok == 4 && idempotent,
          Fmt("%d/4 fixtures, idempotent on 5000 lines: %s", ok, idempotent ? "yes" : "no")};
}

Outcome Directional() {
  const auto start = Clock::now();
  std::istringstream none;
  std::ostringstream out, err;
  const int code = RunCli({"compare", "--tagged", testing::DataPath("mini_corpus.tsv").string(),
                           "--modes", "wp,wp-sd,morwp,morwp-sd,morwp-md", "--vocab-sizes",
                           "1000,2000", "--jobs", "4"},
                          none, out, err);
  const double t = Seconds(start);
  if (code != 0) return {false, "compare failed: " + err.str()};
  std::map<std::pair<std::string, std::string>, double> wsr;
  std::istringstream rows(out.str());
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    std::istringstream cells(line);
    std::string mode, size, oov, w;
    std::getline(cells, mode, '\t');
    std::getline(cells, size, '\t');
    std::getline(cells, oov, '\t');
    std::getline(cells, w, '\t');
    wsr[{mode, size}] = std::stod(w);
  }
  bool pass = t < 120.0 && wsr.size() == 10;
  std::string detail;
  for (const std::string size : {"1000", "2000"}) {
    const double wp = wsr[{"wp", size}];
    detail += " @" + size + " wp=" + Fmt("%.2f", wp);
    for (const std::string mode : {"morwp", "morwp-sd", "morwp-md"}) {
      const double m = wsr[{mode, size}];
      pass = pass && m < wp;
      detail += " " + mode + "=" + Fmt("%.2f", m);
    }
  }
  return {pass, Fmt("%.2fs;", t) + detail};
}

Outcome Determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "hanpiece_acceptance";
  std::filesystem::create_directories(dir);
  const std::string tagged = testing::DataPath("mini_corpus.tsv").string();
  std::vector<std::string> vocab_bytes, token_bytes;
  for (int run = 0; run < 2; ++run) {
    const auto vocab = dir / ("vocab" + std::to_string(run) + ".txt");
    const auto tokens = dir / ("tokens" + std::to_string(run) + ".txt");
    std::istringstream none;
    std::ostringstream out, err;
    const int a = RunCli({"train-vocab", "--mode", "morwp-md", "--tagged", tagged,
                          "--vocab-size", "1500", "--vocab", vocab.string(), "--jobs",
                          run == 0 ? "1" : "4"},
                         none, out, err);
    const int b = RunCli({"tokenize", "--mode", "morwp-md", "--tagged", tagged, "--vocab",
                          vocab.string(), "-o", tokens.string(), "--jobs", run == 0 ? "1" : "4"},
                         none, out, err);
    if (a != 0 || b != 0) return {false, "CLI failed: " + err.str()};
    vocab_bytes.push_back(testing::Slurp(vocab));
    token_bytes.push_back(testing::Slurp(tokens));
  }
  std::filesystem::remove_all(dir);
  const bool same = vocab_bytes[0] == vocab_bytes[1] && token_bytes[0] == token_bytes[1] &&
                    !vocab_bytes[0].empty() && !token_bytes[0].empty();
  return {same, Fmt("vocab %zu bytes, tokenized %zu bytes, identical: %s", vocab_bytes[0].size(),
                    token_bytes[0].size(), same ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"hangul round trip", HangulRoundTrip},
      {"NFD oracle", NfdOracle},
      {"gold morpheme rows", RamyeonRows},
      {"fused syllable 갔다", FusedSyllable},
      {"trainer oracle", TrainerOracle},
      {"encoder greedy property", GreedyProperty},
      {"metrics oracle", MetricsOracle},
      {"cleaning", Cleaning},
      {"directional WSR", Directional},
      {"end-to-end determinism", Determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  %-26s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
