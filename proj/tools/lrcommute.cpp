// lrcommute: command-line front end for the lrc library.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lrc/commutor.hpp"
#include "lrc/golden.hpp"
#include "lrc/io.hpp"
#include "lrc/knuth.hpp"
#include "lrc/schur.hpp"
#include "lrc/verify.hpp"

namespace {

using lrc::io::json;

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2 };

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;
  bool json() const { return format == "json"; }
};

// An argument is a file path, "-" for stdin, or inline text in which '/'
// separates rows.
std::string load(const std::string& arg) {
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return lrc::io::read_file(arg);
  std::string s = arg;
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos || (s[first] != '{' && s[first] != '[')) {
    for (char& c : s)
      if (c == '/') c = '\n';
  }
  return s;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json big_to_json(const lrc::BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(x);
  return x.str();
}

lrc::GluedPair load_lr_pair(const std::string& arg) {
  const lrc::GluedPair p = lrc::io::parse_glued(load(arg));
  if (!p.is_lr_pair())
    throw lrc::Error("input is not an LR pair: the reading word " + lrc::reading_word(p.skew()).to_string() +
                     " of the skew factor is not ballot");
  return p;
}

int cmd_commute(const Globals& g, const std::string& input, const std::string& method, bool trace) {
  const lrc::GluedPair p = load_lr_pair(input);
  lrc::GluedPair result;
  json frames = json::array();
  if (method == "switching" || method == "infusion") {
    const lrc::SwitchOrder order{method == "switching" ? lrc::SwitchStrategy::greedy : lrc::SwitchStrategy::infusion,
                                 g.seed};
    result = lrc::rho1_switching(p, order);
    if (trace) {
      std::vector<lrc::TwoColorTableau> states;
      lrc::switch_to_end(lrc::to_two_color(p), order, &states);
      for (const auto& s : states) frames.push_back({{"json", lrc::io::to_json(s)}, {"text", lrc::io::to_text(s)}});
    }
  } else if (method == "internal") {
    const lrc::InternalRun run = lrc::rho1_internal_traced(p);
    result = run.result;
    for (const auto& level : run.levels) frames.push_back(lrc::io::to_json(level));
  } else {
    std::vector<lrc::SkewTableau> states;
    result = lrc::rho1_scratch(p, &states);
    for (const auto& s : states) frames.push_back({{"json", lrc::io::to_json(s)}, {"text", lrc::io::to_text(s)}});
  }
  if (trace) {
    print_json({{"method", method}, {"result", lrc::io::to_json(result)}, {"frames", frames}});
  } else if (g.json()) {
    print_json(lrc::io::to_json(result));
  } else {
    std::cout << lrc::io::to_text(result);
  }
  return kOk;
}

int cmd_insert(const Globals& g, const std::string& input, const std::string& word, bool trace) {
  const lrc::SkewTableau t = lrc::io::parse_tableau(load(input));
  std::vector<lrc::InsertionTrace> traces;
  const lrc::SkewTableau result = lrc::apply_order_word(t, lrc::io::parse_word(word), traces);
  if (trace) {
    json tr = json::array();
    for (const auto& x : traces) tr.push_back(lrc::io::to_json(x));
    print_json({{"result", lrc::io::to_json(result)}, {"traces", tr}});
  } else if (g.json()) {
    print_json(lrc::io::to_json(result));
  } else {
    std::cout << lrc::io::to_text(result);
  }
  return kOk;
}

void print_tableau_pair(const Globals& g, const char* a_name, const lrc::SkewTableau& a, const char* b_name,
                        const lrc::SkewTableau& b) {
  if (g.json()) {
    print_json({{a_name, lrc::io::to_json(a)}, {b_name, lrc::io::to_json(b)}});
  } else {
    std::cout << a_name << ":\n" << lrc::io::to_text(a) << b_name << ":\n" << lrc::io::to_text(b);
  }
}

int cmd_rsk(const Globals& g, const std::string& word, const std::vector<std::string>& pair, bool inverse) {
  if (!word.empty()) {
    if (!pair.empty() || inverse) throw CLI::ValidationError("--word cannot be combined with tableau arguments");
    const lrc::RskPair r = lrc::rsk(lrc::io::parse_word(word));
    print_tableau_pair(g, "p", r.p, "q", r.q);
    return kOk;
  }
  if (pair.size() != 2) throw CLI::ValidationError("rsk needs --word W or two tableau arguments");
  const lrc::SkewTableau a = lrc::io::parse_tableau(load(pair[0]));
  const lrc::SkewTableau b = lrc::io::parse_tableau(load(pair[1]));
  if (inverse) {
    const auto [t, u] = lrc::skew_rsk_inverse(a, b);
    print_tableau_pair(g, "t", t.trimmed(), "u", u.trimmed());
  } else {
    const auto [p, q] = lrc::skew_rsk_forward(a, b);
    print_tableau_pair(g, "p", p, "q", q);
  }
  return kOk;
}

int cmd_lr_coeff(const Globals& g, const std::string& lambda, const std::string& mu, const std::string& nu) {
  const lrc::BigInt c =
      lrc::lr_coefficient(lrc::io::parse_partition(lambda), lrc::io::parse_partition(mu), lrc::io::parse_partition(nu));
  if (g.json())
    print_json({{"lambda", lrc::io::to_json(lrc::io::parse_partition(lambda).trimmed())},
                {"mu", lrc::io::to_json(lrc::io::parse_partition(mu).trimmed())},
                {"nu", lrc::io::to_json(lrc::io::parse_partition(nu).trimmed())},
                {"coefficient", big_to_json(c)}});
  else
    std::cout << c << "\n";
  return kOk;
}

int cmd_schur_product(const Globals& g, const std::string& mu_s, const std::string& nu_s, int max_rows) {
  const lrc::Partition mu = lrc::io::parse_partition(mu_s).trimmed(), nu = lrc::io::parse_partition(nu_s).trimmed();
  if (max_rows <= 0) max_rows = mu.length() + nu.length();
  const lrc::SchurExpansion e = lrc::schur_product(mu, nu, max_rows);
  if (g.json()) {
    json terms = json::array();
    for (const auto& [lambda, c] : e) terms.push_back({{"lambda", lrc::io::to_json(lambda)}, {"coefficient", big_to_json(c)}});
    print_json({{"mu", lrc::io::to_json(mu)}, {"nu", lrc::io::to_json(nu)}, {"max_rows", max_rows}, {"terms", terms}});
  } else {
    std::cout << lrc::to_string(e) << "\n";
  }
  return kOk;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_verify(const Globals& g, std::optional<int> max_size, const std::string& list, int alphabet, int random_orders,
               bool serial) {
  std::vector<std::string> names;
  if (list.empty() || list == "all") {
    for (const auto& c : lrc::verify::checks()) names.push_back(c.name);
  } else {
    names = split_list(list);
    for (const auto& n : names) lrc::verify::find_check(n);
  }
  if (max_size && *max_size < 1) throw CLI::ValidationError("--max-size must be at least 1");
  lrc::verify::Options opt;
  opt.max_size = max_size;
  opt.alphabet = alphabet;
  opt.seed = g.seed;
  opt.random_orders = random_orders;
  opt.exec = serial ? lrc::verify::Exec::serial : lrc::verify::Exec::parallel;

  bool ok = true;
  json reports = json::array();
  for (const auto& n : names) {
    const lrc::verify::Report r = lrc::verify::run_check(n, opt);
    ok = ok && r.passed();
    if (g.json()) {
      json failures = json::array();
      for (const auto& f : r.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
      reports.push_back({{"check", r.name},
                         {"instances", r.instances},
                         {"passed", r.passed()},
                         {"seconds", r.seconds},
                         {"failures", failures}});
    } else {
      std::cout << std::left << std::setw(12) << r.name << (r.passed() ? " PASS" : " FAIL")
                << "  instances=" << r.instances << "  failures=" << r.failures.size() << "  time=" << std::fixed
                << std::setprecision(2) << r.seconds << "s\n";
      for (std::size_t k = 0; k < r.failures.size() && k < 10; ++k) {
        const auto& f = r.failures[k];
        std::cout << "  input:    " << f.input << "\n  expected: " << f.expected << "\n  actual:   " << f.actual
                  << "\n";
      }
      if (r.failures.size() > 10) std::cout << "  ... " << r.failures.size() - 10 << " more\n";
    }
  }
  if (g.json()) print_json(reports);
  return ok ? kOk : kFailed;
}

int cmd_golden(const Globals& g, const std::string& dir, const std::vector<std::string>& only) {
  const auto results = lrc::golden::run(dir, only);
  bool ok = true;
  json out = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (g.json()) {
      out.push_back({{"id", r.id}, {"assertions", r.assertions}, {"passed", r.passed()}, {"mismatches", r.mismatches}});
    } else {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << " (" << r.assertions << " assertions)\n";
      for (const auto& m : r.mismatches) std::cout << "  " << m << "\n";
    }
  }
  if (g.json()) print_json(out);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson commutor by switching and by internal insertion"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomised switch orders");

  std::string input, method = "switching", word;
  bool trace = false;
  auto* commute = app.add_subcommand("commute", "Apply the LR commutor to Y_mu u T");
  commute->add_option("pair", input, "Glued pair: file, '-', or inline text with '/' between rows")->required();
  commute->add_option("--method", method)->check(CLI::IsMember({"switching", "internal", "scratch", "infusion"}));
  commute->add_flag("--trace", trace, "Emit every intermediate frame as JSON");

  auto* insert = app.add_subcommand("insert", "Apply internal row insertions phi_u to a skew tableau");
  insert->add_option("tableau", input, "Skew tableau: file, '-', or inline text")->required();
  insert->add_option("word", word, "Order word u; its last letter acts first")->required();
  insert->add_flag("--trace", trace, "Emit the trace of every insertion as JSON");

  std::string rsk_word;
  std::vector<std::string> rsk_pair;
  bool inverse = false;
  auto* rsk = app.add_subcommand("rsk", "Classical RSK of a word, or skew RSK of a tableau pair");
  rsk->add_option("--word", rsk_word, "Word for classical RSK");
  rsk->add_option("tableaux", rsk_pair, "T U (or P Q with --inverse)");
  rsk->add_flag("--inverse", inverse, "Run skew RSK backwards");

  std::string lambda, mu, nu;
  auto* lr = app.add_subcommand("lr-coeff", "Littlewood-Richardson coefficient c^lambda_{mu nu}");
  lr->add_option("lambda", lambda)->required();
  lr->add_option("mu", mu)->required();
  lr->add_option("nu", nu)->required();

  int max_rows = 0;
  auto* product = app.add_subcommand("schur-product", "Schur expansion of s_mu s_nu");
  product->add_option("mu", mu)->required();
  product->add_option("nu", nu)->required();
  product->add_option("--max-rows", max_rows, "Keep lambda with at most this many rows (default l(mu)+l(nu))");

  std::optional<int> max_size;
  std::string check_list;
  int alphabet = 3, random_orders = 20;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive property checks");
  verify->add_option("--max-size", max_size, "Size bound (each check's default when omitted)");
  verify->add_option("--checks", check_list, "Comma separated check names, or 'all'");
  verify->add_option("--alphabet", alphabet, "Largest letter for arbitrary fillings")->check(CLI::Range(1, 9));
  verify->add_option("--random-orders", random_orders, "Random switch orders per confluence instance");
  verify->add_flag("--serial", serial, "Use the serial reference sweep");

  std::string fixtures = lrc::golden::default_fixture_dir();
  std::vector<std::string> examples;
  auto* golden = app.add_subcommand("golden", "Replay the worked-example fixtures");
  golden->add_option("--fixtures", fixtures, "Fixture directory");
  golden->add_option("--example", examples, "Fixture id to run (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*commute) return cmd_commute(g, input, method, trace);
    if (*insert) return cmd_insert(g, input, word, trace);
    if (*rsk) return cmd_rsk(g, rsk_word, rsk_pair, inverse);
    if (*lr) return cmd_lr_coeff(g, lambda, mu, nu);
    if (*product) return cmd_schur_product(g, mu, nu, max_rows);
    if (*verify) return cmd_verify(g, max_size, check_list, alphabet, random_orders, serial);
    if (*golden) return cmd_golden(g, fixtures, examples);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
