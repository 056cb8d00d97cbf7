#include "lrc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace lrc::io {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\r') continue;
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_entry(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error("bad tableau entry \"" + tok + "\"");
  return std::stoi(tok);
}

json parse_json(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

bool starts_with_brace(const std::string& s) {
  auto it = std::find_if(s.begin(), s.end(), [](unsigned char c) { return !std::isspace(c); });
  return it != s.end() && (*it == '{' || *it == '[');
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " " : "") + parts[k];
  return out;
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) { return Partition(int_array(j, "partition")); }

Partition parse_partition(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != '(' && c != ')' && c != '[' && c != ']') t += c;
  const bool separated = t.find_first_of(", ") != std::string::npos;
  std::vector<int> parts;
  if (separated) {
    std::replace(t.begin(), t.end(), ',', ' ');
    for (const auto& tok : tokens(t)) parts.push_back(parse_entry(tok));
  } else {
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad partition \"" + s + "\"");
      parts.push_back(c - '0');
    }
  }
  return Partition(std::move(parts));
}

json to_json(const Word& w) { return w.letters(); }

Word word_from_json(const json& j) {
  if (j.is_string()) return Word::from_digits(j.get<std::string>());
  return Word(int_array(j, "word"));
}

Word parse_word(const std::string& s) {
  if (starts_with_brace(s)) return word_from_json(parse_json(s));
  if (s.find(',') != std::string::npos) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::vector<int> letters;
    for (const auto& tok : tokens(t)) letters.push_back(parse_entry(tok));
    return Word(std::move(letters));
  }
  return Word::from_digits(s);
}

json to_json(const SkewTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return {{"outer", to_json(t.outer())}, {"inner", to_json(t.inner())}, {"rows", rows}};
}

SkewTableau tableau_from_json(const json& j) {
  std::vector<std::vector<int>> rows;
  const json& r = field(j, "rows");
  if (!r.is_array()) throw Error("\"rows\" must be an array");
  for (const auto& row : r) rows.push_back(int_array(row, "tableau row"));
  return SkewTableau(partition_from_json(field(j, "outer")), partition_from_json(field(j, "inner")),
                     std::move(rows));
}

std::string to_text(const SkewTableau& t) {
  std::string out;
  for (int i = 1; i <= t.num_rows(); ++i) {
    std::vector<std::string> parts(t.inner()[i], ".");
    for (int x : t.row(i)) parts.push_back(std::to_string(x));
    out += joined(parts) + "\n";
  }
  return out;
}

SkewTableau tableau_from_text(const std::string& s) {
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;
  for (const auto& line : split_lines(s)) {
    int blanks = 0;
    std::vector<int> row;
    for (const auto& tok : tokens(line)) {
      if (tok == ".") {
        if (!row.empty()) throw Error("inner blank after an entry in tableau text");
        ++blanks;
      } else {
        row.push_back(parse_entry(tok));
      }
    }
    inner.push_back(blanks);
    outer.push_back(blanks + static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  return SkewTableau(Partition(outer), Partition(inner), std::move(rows));
}

SkewTableau parse_tableau(const std::string& s) {
  return starts_with_brace(s) ? tableau_from_json(parse_json(s)) : tableau_from_text(s);
}

json to_json(const GluedPair& p) { return {{"y", to_json(p.yam())}, {"t", to_json(p.skew())}}; }

GluedPair glued_from_json(const json& j) {
  if (j.is_object() && j.contains("rows")) return GluedPair(tableau_from_json(j));
  GluedPair p(tableau_from_json(field(j, "t")));
  if (j.contains("y") && !(tableau_from_json(j.at("y")) == p.yam()))
    throw Error("\"y\" is not the Yamanouchi tableau of the skew factor's inner shape");
  return p;
}

std::string to_text(const GluedPair& p) {
  const SkewTableau y = p.yam();
  std::string out;
  for (int i = 1; i <= p.num_rows(); ++i) {
    std::vector<std::string> parts;
    for (int x : y.row(i)) parts.push_back(std::to_string(x));
    for (int x : p.skew().row(i)) parts.push_back(std::to_string(x) + "*");
    out += joined(parts) + "\n";
  }
  return out;
}

GluedPair glued_from_text(const std::string& s) {
  if (s.find('*') == std::string::npos) return GluedPair(tableau_from_text(s));
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;
  const auto lines = split_lines(s);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    int plain = 0;
    std::vector<int> row;
    for (const auto& tok : tokens(lines[k])) {
      if (tok.back() == '*') {
        row.push_back(parse_entry(tok.substr(0, tok.size() - 1)));
        continue;
      }
      if (!row.empty()) throw Error("Y letter after a starred letter in row " + std::to_string(i));
      if (parse_entry(tok) != i)
        throw Error("row " + std::to_string(i) + " of Y must hold only the letter " + std::to_string(i));
      ++plain;
    }
    inner.push_back(plain);
    outer.push_back(plain + static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  return GluedPair(SkewTableau(Partition(outer), Partition(inner), std::move(rows)));
}

GluedPair parse_glued(const std::string& s) {
  return starts_with_brace(s) ? glued_from_json(parse_json(s)) : glued_from_text(s);
}

json to_json(const TwoColorTableau& t) {
  json rows = json::array(), groups = json::array();
  for (const auto& r : t.rows()) {
    json vr = json::array(), gr = json::array();
    for (const auto& e : r) {
      vr.push_back(e.value);
      gr.push_back(e.group);
    }
    rows.push_back(vr);
    groups.push_back(gr);
  }
  return {{"outer", to_json(t.outer())}, {"inner", to_json(t.inner())}, {"rows", rows}, {"groups", groups}};
}

TwoColorTableau two_color_from_json(const json& j) {
  const json& rows = field(j, "rows");
  const json& groups = field(j, "groups");
  if (!rows.is_array() || !groups.is_array() || rows.size() != groups.size())
    throw Error("\"rows\" and \"groups\" must be arrays of equal length");
  std::vector<std::vector<TwoColorEntry>> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto v = int_array(rows[k], "row"), g = int_array(groups[k], "group row");
    if (v.size() != g.size()) throw Error("row and group row lengths differ");
    std::vector<TwoColorEntry> r;
    for (std::size_t c = 0; c < v.size(); ++c) r.push_back({v[c], g[c]});
    out.push_back(std::move(r));
  }
  return TwoColorTableau(partition_from_json(field(j, "outer")), partition_from_json(field(j, "inner")),
                         std::move(out));
}

std::string to_text(const TwoColorTableau& t) {
  std::string out;
  for (int i = 1; i <= t.num_rows(); ++i) {
    std::vector<std::string> parts(t.inner()[i], ".");
    for (const auto& e : t.rows()[i - 1]) parts.push_back(std::to_string(e.value) + (e.in_u() ? "" : "*"));
    out += joined(parts) + "\n";
  }
  return out;
}

TwoColorTableau two_color_from_text(const std::string& s, TwoColorTableau::Grouping grouping) {
  std::vector<int> outer, inner;
  std::vector<std::vector<TwoColorEntry>> rows;
  for (const auto& line : split_lines(s)) {
    int blanks = 0;
    std::vector<TwoColorEntry> row;
    for (const auto& tok : tokens(line)) {
      if (tok == ".") {
        if (!row.empty()) throw Error("inner blank after an entry in two-colour text");
        ++blanks;
      } else if (tok.back() == '*') {
        row.push_back({parse_entry(tok.substr(0, tok.size() - 1)), kOuterMember});
      } else {
        const int x = parse_entry(tok);
        row.push_back({x, grouping == TwoColorTableau::Grouping::single ? 1 : x});
      }
    }
    inner.push_back(blanks);
    outer.push_back(blanks + static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  return TwoColorTableau(Partition(outer), Partition(inner), std::move(rows));
}

json to_json(const Cell& c) { return json::array({c.row, c.col}); }

json to_json(const InsertionTrace& t) {
  json route = json::array();
  for (Cell c : t.route) route.push_back(to_json(c));
  return {{"vacated", to_json(t.vacated)}, {"route", route}, {"created", to_json(t.created)}};
}

json to_json(const RecursionLevel& level) {
  json top = json::array(), v = json::array(), frames = json::array();
  for (const auto& t : level.top_traces) top.push_back(to_json(t));
  for (const auto& t : level.v_traces) v.push_back(to_json(t));
  for (const auto& f : level.frames) frames.push_back(to_json(f));
  return {{"n", level.n},          {"nu_n", level.nu_n},       {"v_n", to_json(level.v_n)},
          {"mu_n", level.mu_n},    {"top_traces", top},        {"v_traces", v},
          {"frames", frames},      {"result", to_json(level.result)}};
}

json to_json(const StagedDecomposition& s) {
  return {{"d", s.d},
          {"s", to_json(s.s)},
          {"q", to_json(s.q)},
          {"f", to_json(s.f)},
          {"f_hat", to_json(s.f_hat)},
          {"d_word", to_json(s.d_word)},
          {"final_state", to_json(s.final_state)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lrc::io
