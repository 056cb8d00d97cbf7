#include "lrc/golden.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <set>

#include "lrc/commutor.hpp"
#include "lrc/io.hpp"
#include "lrc/knuth.hpp"

#ifndef LRC_FIXTURE_DIR
#define LRC_FIXTURE_DIR "fixtures/golden"
#endif

namespace lrc::golden {

namespace {

using io::json;
namespace fs = std::filesystem;

constexpr int kFixtureVersion = 1;

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

class Checker {
 public:
  explicit Checker(CaseResult& r) : r_(r) {}

  void eq(const std::string& label, const std::string& expected, const std::string& actual) {
    ++r_.assertions;
    if (expected == actual) return;
    if (expected.find('\n') != std::string::npos || actual.find('\n') != std::string::npos)
      r_.mismatches.push_back(label + ":\n" + frame_diff(expected, actual));
    else
      r_.mismatches.push_back(label + ": expected " + expected + ", got " + actual);
  }

  void truth(const std::string& label, bool ok, const std::string& detail = "") {
    ++r_.assertions;
    if (!ok) r_.mismatches.push_back(label + (detail.empty() ? "" : ": " + detail));
  }

 private:
  CaseResult& r_;
};

std::string str(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw Error(std::string("fixture field \"") + key + "\" missing");
  return j.at(key).get<std::string>();
}

std::string key_of(const TwoColorTableau& t) { return io::to_json(t).dump(); }

// Breadth-first search over admissible switches (of one U group when set).
bool reachable(const TwoColorTableau& from, const TwoColorTableau& to, std::optional<int> group) {
  constexpr std::size_t kLimit = 200000;
  const std::string target = key_of(to);
  std::set<std::string> seen{key_of(from)};
  std::deque<TwoColorTableau> queue{from};
  while (!queue.empty() && seen.size() < kLimit) {
    TwoColorTableau t = std::move(queue.front());
    queue.pop_front();
    if (key_of(t) == target) return true;
    for (const auto& s : switch_sites(t, group)) {
      TwoColorTableau next = apply_switch(t, s);
      if (seen.insert(key_of(next)).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

void companion_word_case(const json& f, Checker& c) {
  for (const auto& item : f.at("tableaux")) {
    const SkewTableau u = io::parse_tableau(str(item, "u"));
    c.eq("standardisation", str(item, "std"), io::to_text(standardize(u)));
    c.eq("companion word", str(item, "companion"), companion_word(u).to_string());
    c.eq("companion word of the standardisation", str(item, "companion"),
         companion_word(standardize(u)).to_string());
  }
}

void ballot_case(const json& f, Checker& c) {
  for (const auto& item : f.at("tableaux")) {
    const SkewTableau t = io::parse_tableau(str(item, "t"));
    const Word w = reading_word(t);
    c.eq("reading word", str(item, "reading"), w.to_string());
    c.eq("ballot verdict for " + w.to_string(), item.at("ballot").get<bool>() ? "true" : "false",
         is_ballot(w) ? "true" : "false");
  }
}

void switch_sequence_case(const json& f, Checker& c) {
  std::vector<std::string> texts;
  std::vector<TwoColorTableau> frames;
  for (const auto& fr : f.at("frames")) {
    texts.push_back(fr.get<std::string>());
    frames.push_back(io::two_color_from_text(texts.back()));
    c.eq("frame " + std::to_string(texts.size()) + " rendering", texts.back(), io::to_text(frames.back()));
    c.truth("frame " + std::to_string(texts.size()) + " satisfies both filling conditions", frames.back().is_valid());
  }
  for (std::size_t k = 0; k + 1 < frames.size(); ++k)
    c.truth("frame " + std::to_string(k + 2) + " reachable from frame " + std::to_string(k + 1) + " by switches",
            reachable(frames[k], frames[k + 1], std::nullopt));
  for (auto strategy : {SwitchStrategy::greedy, SwitchStrategy::infusion}) {
    const TwoColorTableau end = switch_to_end(frames.front(), {strategy, 0});
    c.eq(std::string("terminal frame (") + (strategy == SwitchStrategy::greedy ? "greedy" : "infusion") + ")",
         texts.back(), io::to_text(end));
  }
  c.truth("terminal frame is fully switched", frames.back().is_fully_switched());
}

void staged_case(const json& f, Checker& c) {
  const GluedPair p = io::parse_glued(str(f, "pair"));
  std::vector<TwoColorTableau> computed;
  const StagedDecomposition sd = staged_decomposition(p, &computed);
  std::vector<std::string> texts;
  for (const auto& fr : f.at("frames")) texts.push_back(fr.get<std::string>());
  c.eq("first frame", texts.front(), io::to_text(computed.front()));
  c.eq("last frame", texts.back(), io::to_text(sd.final_state));
  for (std::size_t k = 0; k + 1 < texts.size(); ++k) {
    const auto a = io::two_color_from_text(texts[k], TwoColorTableau::Grouping::by_value);
    const auto b = io::two_color_from_text(texts[k + 1], TwoColorTableau::Grouping::by_value);
    c.truth("frame " + std::to_string(k + 2) + " reachable from frame " + std::to_string(k + 1) +
                " by switches of the letters " + std::to_string(sd.d),
            reachable(a, b, sd.d));
  }
  c.eq("d", std::to_string(f.at("d").get<int>()), std::to_string(sd.d));
  c.eq("F", str(f, "f"), sd.f.to_string());
  c.eq("F hat", str(f, "f_hat"), sd.f_hat.to_string());
  c.eq("D", str(f, "d_word"), sd.d_word.to_string());
  c.eq("S", str(f, "s"), io::to_text(sd.s));
  c.eq("Q", str(f, "q"), io::to_text(sd.q));

  if (f.contains("extends")) {
    // The pair is the first rows of a larger instance: its F hat is the
    // larger S restricted to that row, and its D gains the letters X of the
    // larger Q in that row.
    const json& e = f.at("extends");
    const StagedDecomposition big = staged_decomposition(io::parse_glued(str(e, "pair")));
    const int row = p.num_rows();
    const Word g_hat = row_subword_below(big.s, row);
    const Word x(big.q.row(row));
    c.eq("G hat", str(e, "g_hat"), g_hat.to_string());
    c.eq("X", str(e, "x"), x.to_string());
    c.eq("F hat = G hat", g_hat.to_string(), sd.f_hat.to_string());
    c.eq("D = D' X", (big.d_word + x).to_string(), sd.d_word.to_string());
  }
}

void order_word_case(const json& f, Checker& c) {
  const SkewTableau t = io::parse_tableau(str(f, "t"));
  const std::string result = str(f, "result");
  std::vector<Word> words;
  for (const auto& item : f.at("recordings")) {
    const SkewTableau u = io::parse_tableau(str(item, "u"));
    const Word w = companion_word(u);
    c.eq("companion word", str(item, "companion"), w.to_string());
    c.eq("phi_" + w.to_string() + " T", result, io::to_text(apply_order_word(t, w)));
    c.eq("skew RSK insertion tableau for U = " + w.to_string(), result, io::to_text(skew_rsk_forward(t, u).first));
    words.push_back(w);
  }
  for (std::size_t k = 1; k < words.size(); ++k)
    c.truth(words[0].to_string() + " knuth-equivalent to " + words[k].to_string(),
            knuth_equivalent(words[0], words[k]));
}

void commutor_frames_case(const json& f, Checker& c) {
  const GluedPair p = io::parse_glued(str(f, "pair"));
  const SkewTableau& t = p.skew();
  c.eq("weight", io::parse_partition(str(f, "nu")).trimmed().to_string(),
       Partition(content(t).counts).trimmed().to_string());
  c.eq("nu hat", io::parse_partition(str(f, "nu_hat")).trimmed().to_string(), nu_hat(t).trimmed().to_string());
  c.eq("Gelfand-Tsetlin order word", str(f, "order_word"), gt_order_word(t).to_string());
  c.eq("companion word of the Gelfand-Tsetlin tableau", str(f, "order_word"),
       companion_word(io::parse_tableau(str(f, "gt_tableau"))).to_string());

  const InternalRun run = rho1_internal_traced(p);
  const json& levels = f.at("levels");
  c.eq("number of levels", std::to_string(levels.size()), std::to_string(run.levels.size()));
  for (std::size_t k = 0; k < std::min<std::size_t>(levels.size(), run.levels.size()); ++k) {
    const auto& expected = levels[k].at("frames");
    const auto& got = run.levels[k].frames;
    const std::string lv = "level " + std::to_string(k + 1);
    c.eq(lv + " frame count", std::to_string(expected.size()), std::to_string(got.size()));
    for (std::size_t m = 0; m < std::min(expected.size(), got.size()); ++m)
      c.eq(lv + " frame " + std::to_string(m + 1), expected[m].get<std::string>(), io::to_text(got[m]));
  }
  c.truth("V_n routes pairwise disjoint and ending in row n", !check_route_claim(run));

  for (const auto& sw : f.at("switching")) {
    const GluedPair in = io::parse_glued(str(sw, "input"));
    c.eq("switching of the first " + std::to_string(in.num_rows()) + " rows", str(sw, "output"),
         io::to_text(rho1_switching(in)));
  }
  const std::string result = str(f, "result");
  c.eq("image by internal insertion", result, io::to_text(run.result));
  c.eq("image by switching", result, io::to_text(rho1_switching(p)));

  std::vector<SkewTableau> scratch;
  const GluedPair s = rho1_scratch(p, &scratch);
  const auto& expected = f.at("scratch_frames");
  c.eq("scratch frame count", std::to_string(expected.size()), std::to_string(scratch.size()));
  for (std::size_t m = 0; m < std::min(expected.size(), scratch.size()); ++m)
    c.eq("scratch frame " + std::to_string(m + 1), expected[m].get<std::string>(), io::to_text(scratch[m]));
  c.eq("image by the scratch product", result, io::to_text(s));
}

void composition_case(const json& f, Checker& c) {
  const GluedPair p = io::parse_glued(str(f, "pair"));
  const StagedDecomposition sd = staged_decomposition(p);
  const GluedPair image = rho1_switching(p);
  c.eq("rho1 of the pair", str(f, "image"), io::to_text(image));
  c.eq("rho1 of the pair, internal insertion", str(f, "image"), io::to_text(rho1_internal(p)));
  const GluedPair reduced = rho1_switching(GluedPair(sd.s));
  c.eq("rho1 of Y' u S", str(f, "reduced_image"), io::to_text(reduced));
  c.eq("rho1 of Y' u S, then Q attached", str(f, "image"),
       io::to_text(GluedPair(concatenate(reduced.skew(), sd.q))));
  for (const auto& step : f.at("steps")) {
    const GluedPair in = io::parse_glued(str(step, "input"));
    c.eq("rho1 of " + str(step, "name"), str(step, "output"), io::to_text(rho1_internal(in)));
    c.eq("rho1 of " + str(step, "name") + " by switching", str(step, "output"), io::to_text(rho1_switching(in)));
  }
  for (const auto& pair : f.at("knuth")) {
    const Word a = Word::from_digits(pair[0].get<std::string>()), b = Word::from_digits(pair[1].get<std::string>());
    c.truth(a.to_string() + " knuth-equivalent to " + b.to_string(), knuth_equivalent(a, b));
  }
}

void dispatch(const json& f, Checker& c) {
  const std::string kind = str(f, "kind");
  if (kind == "companion-word") return companion_word_case(f, c);
  if (kind == "ballot") return ballot_case(f, c);
  if (kind == "switch-sequence") return switch_sequence_case(f, c);
  if (kind == "staged") return staged_case(f, c);
  if (kind == "order-word") return order_word_case(f, c);
  if (kind == "commutor-frames") return commutor_frames_case(f, c);
  if (kind == "composition") return composition_case(f, c);
  throw Error("unknown fixture kind \"" + kind + "\"");
}

json load(const fs::path& path) {
  try {
    return json::parse(io::read_file(path.string()));
  } catch (const json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace

std::string default_fixture_dir() { return LRC_FIXTURE_DIR; }

std::vector<std::string> fixture_ids(const std::string& dir) {
  std::vector<std::string> ids;
  if (!fs::is_directory(dir)) throw Error("fixture directory " + dir + " not found");
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") ids.push_back(entry.path().stem().string());
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<CaseResult> run(const std::string& dir, const std::vector<std::string>& only) {
  const auto ids = fixture_ids(dir);
  for (const auto& id : only)
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      std::string names;
      for (const auto& n : ids) names += (names.empty() ? "" : ", ") + n;
      throw Error("unknown example \"" + id + "\"; available: " + names);
    }
  std::vector<CaseResult> out;
  for (const auto& id : ids) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    CaseResult r;
    r.id = id;
    Checker c(r);
    try {
      const json f = load(fs::path(dir) / (id + ".json"));
      if (f.value("version", 0) != kFixtureVersion)
        throw Error("unsupported fixture version in " + id);
      if (str(f, "id") != id) throw Error("fixture id does not match its file name");
      dispatch(f, c);
    } catch (const std::exception& e) {
      r.mismatches.push_back(std::string("error: ") + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string frame_diff(const std::string& expected, const std::string& actual) {
  const auto a = lines_of(expected), b = lines_of(actual);
  std::string out;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const std::string x = k < a.size() ? a[k] : "<none>", y = k < b.size() ? b[k] : "<none>";
    out += (x == y ? "    " : "  ! ") + std::string("row ") + std::to_string(k + 1) + ": expected \"" + x + "\"" +
           (x == y ? "" : ", got \"" + y + "\"") + "\n";
  }
  return out;
}

}  // namespace lrc::golden
