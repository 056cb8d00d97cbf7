#include "lrc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "lrc/commutor.hpp"
#include "lrc/enumerate.hpp"
#include "lrc/io.hpp"
#include "lrc/knuth.hpp"
#include "lrc/schur.hpp"

namespace lrc::verify {

namespace {

// Collects the failures of one instance. The input is serialised only when
// something fails.
class Sink {
 public:
  Sink(std::vector<Failure>& out, std::function<std::string()> describe)
      : out_(out), describe_(std::move(describe)) {}

  void fail(std::string expected, std::string actual) {
    out_.push_back({describe_(), std::move(expected), std::move(actual)});
  }
  void fail(std::string input, std::string expected, std::string actual) {
    out_.push_back({std::move(input), std::move(expected), std::move(actual)});
  }
  std::string input() const { return describe_(); }

 private:
  std::vector<Failure>& out_;
  std::function<std::string()> describe_;
};

// Runs check on every instance, serially or with OpenMP, and merges the
// failures in instance order. check returns how many cases it tested.
template <class T, class Describe, class Check>
Report sweep(std::string name, const std::vector<T>& xs, Exec exec, Describe describe, Check check) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<Failure>> failures(xs.size());
  std::vector<std::size_t> counts(xs.size(), 0);
  auto body = [&](std::size_t k) {
    Sink sink(failures[k], [&, k] { return describe(xs[k]); });
    try {
      counts[k] = check(xs[k], sink);
    } catch (const std::exception& e) {
      sink.fail("no error", std::string("error: ") + e.what());
      counts[k] = std::max<std::size_t>(counts[k], 1);
    }
  };
  const long long n = static_cast<long long>(xs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < n; ++k) body(static_cast<std::size_t>(k));
  } else {
    for (long long k = 0; k < n; ++k) body(static_cast<std::size_t>(k));
  }
  Report r;
  r.name = std::move(name);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    r.instances += counts[k];
    for (auto& f : failures[k]) r.failures.push_back(std::move(f));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report merge(std::string name, std::vector<Report> parts) {
  Report r;
  r.name = std::move(name);
  for (auto& p : parts) {
    r.instances += p.instances;
    r.seconds += p.seconds;
    for (auto& f : p.failures) r.failures.push_back(std::move(f));
  }
  return r;
}

std::string show(const SkewTableau& t) { return io::to_json(t).dump(); }
std::string show(const GluedPair& p) { return io::to_json(p.skew()).dump(); }
std::string show(const Word& w) { return w.to_string(); }

std::string show_rows(const std::vector<std::vector<int>>& rows) { return io::json(rows).dump(); }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::vector<int>> yamanouchi_rows(const Partition& nu, int first_letter = 1) {
  std::vector<std::vector<int>> rows;
  for (int k = 0; k < nu.length(); ++k) rows.emplace_back(nu[k + 1], first_letter + k);
  return rows;
}

Partition content_partition(const SkewTableau& t) {
  auto c = content(t).counts;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Partition(c);
}

bool is_subword(const Word& small, const Word& big) {
  int k = 0;
  for (int x : big.letters())
    if (k < small.size() && small[k] == x) ++k;
  return k == small.size();
}

std::vector<GluedPair> lr_pairs(int max_size) {
  std::vector<GluedPair> out;
  for (auto& t : enumerate_lr_tableaux(max_size)) out.emplace_back(std::move(t));
  return out;
}

// (inner, outer) pairs with |outer| <= max_size, shapes padded to l(outer).
std::vector<SkewShape> skew_shapes(int max_size) {
  std::vector<SkewShape> out;
  for (int s = 0; s <= max_size; ++s)
    for (const Partition& lambda : partitions_of(s))
      for (const Partition& mu : subpartitions(lambda)) {
        const int n = std::max(1, lambda.length());
        out.emplace_back(lambda.padded(n), mu.padded(n));
      }
  return out;
}

// ---------------------------------------------------------------- checks

Report check_involution(const Options& o) {
  return sweep("involution", lr_pairs(o.max_size.value_or(8)), o.exec,
               [](const GluedPair& p) { return show(p); },
               [](const GluedPair& p, Sink& sink) -> std::size_t {
                 GluedPair a = rho1_switching(rho1_switching(p));
                 if (!(a == p)) sink.fail("switching: " + show(p), show(a));
                 GluedPair b = rho1_internal(rho1_internal(p));
                 if (!(b == p)) sink.fail("internal: " + show(p), show(b));
                 return 1;
               });
}

Report check_coincidence(const Options& o) {
  return sweep("coincidence", lr_pairs(o.max_size.value_or(8)), o.exec,
               [](const GluedPair& p) { return show(p); },
               [](const GluedPair& p, Sink& sink) -> std::size_t {
                 const GluedPair a = rho1_switching(p);
                 const InternalRun run = rho1_internal_traced(p);
                 const GluedPair c = rho1_scratch(p);
                 if (!(run.result == a)) sink.fail("internal = switching: " + show(a), show(run.result));
                 if (!(c == a)) sink.fail("scratch = switching: " + show(a), show(c));
                 if (auto why = check_route_claim(run)) sink.fail("disjoint V_n routes ending in row n", *why);
                 return 1;
               });
}

struct TwoColorShape {
  Partition outer, middle, inner;  // U on middle/inner, V on outer/middle
};

Report check_confluence(const Options& o) {
  const int max_size = o.max_size.value_or(8);
  std::vector<TwoColorShape> shapes;
  for (const SkewShape& s : skew_shapes(max_size)) {
    const int n = s.outer.declared_length();
    for (const Partition& mid : subpartitions(s.outer))
      if (mid.contains(s.inner)) shapes.push_back({s.outer, mid.padded(n), s.inner});
  }
  const int alphabet = o.alphabet;
  const std::uint64_t seed = o.seed;
  const int random_orders = o.random_orders;
  return sweep(
      "confluence", shapes, o.exec,
      [](const TwoColorShape& s) {
        return "U on " + s.middle.to_string() + "/" + s.inner.to_string() + ", V on " + s.outer.to_string() + "/" +
               s.middle.to_string();
      },
      [=](const TwoColorShape& s, Sink& sink) -> std::size_t {
        const auto us = enumerate_ssyt(SkewShape(s.middle, s.inner), alphabet);
        const auto vs = enumerate_ssyt(SkewShape(s.outer, s.middle), alphabet);
        std::size_t tested = 0;
        for (const auto& u : us)
          for (const auto& v : vs) {
            const TwoColorTableau start = TwoColorTableau::glue(u, v);
            const std::uint64_t id = splitmix(seed ^ splitmix(tested + 0x51ed27ULL * (s.outer.size() + 1)));
            ++tested;
            auto input = [&] { return io::to_json(start).dump(); };
            const TwoColorTableau ref = switch_to_end(start, {SwitchStrategy::greedy, 0});
            if (!ref.is_fully_switched()) {
              sink.fail(input(), "fully switched", io::to_text(ref));
              continue;
            }
            auto [sv, hu] = ref.split();
            if (!knuth_equivalent(hu, u)) sink.fail(input(), "H knuth-equivalent to U", show(hu));
            if (!knuth_equivalent(sv, v)) sink.fail(input(), "S knuth-equivalent to V", show(sv));
            const TwoColorTableau inf = switch_to_end(start, {SwitchStrategy::infusion, 0});
            if (!(inf == ref)) sink.fail(input(), "infusion: " + io::to_text(ref), io::to_text(inf));
            for (int k = 0; k < random_orders; ++k) {
              const std::uint64_t rs = splitmix(id + static_cast<std::uint64_t>(k));
              const TwoColorTableau r = switch_to_end(start, {SwitchStrategy::random, rs});
              if (!(r == ref))
                sink.fail(input(), "random seed " + std::to_string(rs) + ": " + io::to_text(ref), io::to_text(r));
            }
          }
        return tested;
      });
}

// Valid insertion-order words for one inner shape, grouped by the insertion
// tableau of the word (its Knuth class).
struct WordFamily {
  Partition mu;
  std::map<std::vector<std::vector<int>>, std::vector<Word>> classes;
  std::set<Word> valid;
};

WordFamily word_family(const Partition& mu, int max_len) {
  WordFamily f;
  f.mu = mu;
  std::vector<int> applied;
  std::vector<int> cur = mu.parts();
  std::function<void()> rec = [&] {
    if (!applied.empty()) {
      Word u(std::vector<int>(applied.rbegin(), applied.rend()));
      f.valid.insert(u);
      f.classes[rsk_insertion_rows(u)].push_back(u);
    }
    if (static_cast<int>(applied.size()) == max_len) return;
    const int rows = static_cast<int>(cur.size());
    for (int i = 1; i <= rows + 1; ++i) {
      if (!is_inner_corner(Partition(cur), i)) continue;
      if (i > rows) cur.push_back(0);
      ++cur[i - 1];
      applied.push_back(i);
      rec();
      applied.pop_back();
      --cur[i - 1];
      if (i > rows) cur.pop_back();
    }
  };
  rec();
  return f;
}

constexpr int kMaxWordLength = 5;

Report check_order_words(const Options& o) {
  const int max_size = o.max_size.value_or(7);
  const int alphabet = o.alphabet;
  std::vector<SkewShape> shapes = skew_shapes(max_size);
  std::map<Partition, int> index;
  std::vector<Partition> mus;
  for (const auto& s : shapes)
    if (index.emplace(s.inner.trimmed(), static_cast<int>(mus.size())).second) mus.push_back(s.inner.trimmed());

  std::vector<WordFamily> families(mus.size());
  Report part_a = sweep(
      "order-words (a)", mus, o.exec, [](const Partition& mu) { return "mu = " + mu.to_string(); },
      [&](const Partition& mu, Sink& sink) -> std::size_t {
        WordFamily& f = families[index.at(mu)];
        f = word_family(mu, kMaxWordLength);
        for (const auto& [key, words] : f.classes) {
          const auto cls = knuth_class(words.front(), 100000);
          const std::set<Word> members(cls.begin(), cls.end());
          for (const Word& v : cls)
            if (!f.valid.count(v)) sink.fail("valid order word", v.to_string() + " in the class of " + words.front().to_string());
          if (members != std::set<Word>(words.begin(), words.end()))
            sink.fail("Knuth class of " + words.front().to_string() + " = valid words with its P",
                      std::to_string(members.size()) + " vs " + std::to_string(words.size()) + " words");
        }
        return f.valid.size();
      });

  Report part_b = sweep(
      "order-words (b)", shapes, o.exec,
      [](const SkewShape& s) { return s.outer.to_string() + "/" + s.inner.to_string(); },
      [&](const SkewShape& s, Sink& sink) -> std::size_t {
        const WordFamily& f = families[index.at(s.inner.trimmed())];
        std::size_t tested = 0;
        for_each_ssyt(s, alphabet, [&](const SkewTableau& t) {
          for (const auto& [key, words] : f.classes) {
            const SkewTableau ref = apply_order_word(t, words.front());
            for (std::size_t k = 1; k < words.size(); ++k) {
              const SkewTableau other = apply_order_word(t, words[k]);
              if (!(other == ref))
                sink.fail(show(t) + " with " + words.front().to_string() + " ~ " + words[k].to_string(),
                          show(ref), show(other));
            }
            tested += words.size();
          }
        });
        return tested;
      });
  return merge("order-words", {std::move(part_a), std::move(part_b)});
}

// Column of a route in row r, or 0 when the route misses row r.
int route_col(const InsertionTrace& t, int r) {
  for (Cell c : t.route)
    if (c.row == r) return c.col;
  return 0;
}

std::string show_trace(const InsertionTrace& t) { return io::to_json(t).dump(); }

Report check_routes(const Options& o) {
  const int alphabet = o.alphabet;
  return sweep(
      "routes", skew_shapes(o.max_size.value_or(7)), o.exec,
      [](const SkewShape& s) { return s.outer.to_string() + "/" + s.inner.to_string(); },
      [=](const SkewShape& s, Sink& sink) -> std::size_t {
        std::size_t tested = 0;
        const int n = s.outer.declared_length();
        for_each_ssyt(s, alphabet, [&](const SkewTableau& t) {
          for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= j; ++i) {
              const std::string where = show(t) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
              // (a): phi_j then phi_i.
              if (is_inner_corner(t.inner(), j)) {
                auto [t1, rj] = internal_insert(t, j);
                if (!rj.blank() && is_inner_corner(t1.inner(), i)) {
                  auto [t2, ri2] = internal_insert(t1, i);
                  if (!ri2.blank()) {
                    ++tested;
                    for (int r = 1; r <= t2.num_rows() + 1; ++r) {
                      int a = route_col(rj, r), b = route_col(ri2, r);
                      if (a && b && a >= b) sink.fail(where, "(a) R_j strictly left of R'_i", show_trace(rj) + " " + show_trace(ri2));
                    }
                    const Cell bb = rj.created, bp = ri2.created;
                    if (!(bb.col < bp.col && bb.row >= bp.row))
                      sink.fail(where, "(a) B strictly left of and weakly below B'", show_trace(rj) + " " + show_trace(ri2));
                  }
                }
              }
              // (b): phi_i then phi_j, i < j.
              if (i < j && is_inner_corner(t.inner(), i)) {
                auto [t1, ri] = internal_insert(t, i);
                if (!ri.blank() && is_inner_corner(t1.inner(), j)) {
                  auto [t2, rj2] = internal_insert(t1, j);
                  if (!rj2.blank()) {
                    ++tested;
                    for (int r = 1; r <= t2.num_rows() + 1; ++r) {
                      int a = route_col(rj2, r), b = route_col(ri, r);
                      if (a && b && a > b) sink.fail(where, "(b) R'_j weakly left of R_i", show_trace(ri) + " " + show_trace(rj2));
                    }
                    const Cell bb = ri.created, bp = rj2.created;
                    if (!(bp.col <= bb.col && bp.row > bb.row))
                      sink.fail(where, "(b) B' weakly left of and strictly below B", show_trace(ri) + " " + show_trace(rj2));
                  }
                }
              }
            }
        });
        return tested;
      });
}

struct RskShapes {
  Partition base, t_outer, u_outer;
};

Report check_skew_rsk(const Options& o) {
  const int max_size = o.max_size.value_or(6);
  std::vector<RskShapes> shapes;
  for (int s = 0; s <= max_size; ++s)
    for (const Partition& alpha : partitions_of(s))
      for (const Partition& beta : subpartitions(alpha))
        for (int s2 = beta.size(); s2 <= max_size; ++s2)
          for (const Partition& gamma : partitions_of(s2))
            if (gamma.contains(beta)) shapes.push_back({beta, alpha, gamma});
  const int alphabet = o.alphabet;
  return sweep(
      "skew-rsk", shapes, o.exec,
      [](const RskShapes& s) {
        return "T on " + s.t_outer.to_string() + "/" + s.base.to_string() + ", U on " + s.u_outer.to_string() + "/" + s.base.to_string();
      },
      [=](const RskShapes& s, Sink& sink) -> std::size_t {
        const int n = std::max({1, s.t_outer.length(), s.u_outer.length()});
        const auto ts = enumerate_ssyt(SkewShape(s.t_outer.padded(n), s.base.padded(n)), alphabet);
        const auto us = enumerate_ssyt(SkewShape(s.u_outer.padded(n), s.base.padded(n)), alphabet);
        std::size_t tested = 0;
        for (const auto& t : ts)
          for (const auto& u : us) {
            ++tested;
            auto [p, q] = skew_rsk_forward(t, u);
            const std::string input = "T=" + show(t) + " U=" + show(u);
            if (!knuth_equivalent(p, t)) sink.fail(input, "P knuth-equivalent to T", show(p));
            if (!knuth_equivalent(q, u)) sink.fail(input, "Q knuth-equivalent to U", show(q));
            auto [t2, u2] = skew_rsk_inverse(p, q);
            if (!(t2 == t) || !(u2 == u)) sink.fail(input, "inverse recovers (T, U)", "T=" + show(t2) + " U=" + show(u2));
          }
        return tested;
      });
}

using TableauKey = std::pair<std::vector<int>, std::vector<std::vector<int>>>;

TableauKey key_of(const SkewTableau& t, int rows) {
  const SkewTableau p = t.trimmed().padded(rows);
  return {p.inner().parts(), p.rows()};
}

Report check_lr_oracle(const Options& o) {
  const int max_size = o.max_size.value_or(8);
  std::vector<std::pair<Partition, Partition>> pairs;
  for (int s = 0; s <= max_size; ++s)
    for (int a = 0; a <= s; ++a)
      for (const Partition& mu : partitions_of(a))
        for (const Partition& nu : partitions_of(s - a)) pairs.emplace_back(mu, nu);
  return sweep(
      "lr-oracle", pairs, o.exec,
      [](const std::pair<Partition, Partition>& x) { return "mu=" + x.first.to_string() + " nu=" + x.second.to_string(); },
      [](const std::pair<Partition, Partition>& x, Sink& sink) -> std::size_t {
        const auto& [mu, nu] = x;
        const int vars = std::max(1, mu.size() + nu.size());
        const SchurExpansion e = schur_product(mu, nu, vars);
        const SchurExpansion swapped = schur_product(nu, mu, vars);
        if (e != swapped) sink.fail("c^lambda_{mu nu} = c^lambda_{nu mu}", to_string(e) + " vs " + to_string(swapped));

        Polynomial rhs(vars);
        for (const auto& [lambda, c] : e) rhs.add_scaled(schur_polynomial(lambda, vars), c);
        const Polynomial lhs = schur_polynomial(mu, vars) * schur_polynomial(nu, vars);
        if (!(lhs == rhs)) sink.fail("s_mu s_nu = sum c s_lambda in " + std::to_string(vars) + " variables", to_string(e));

        for (const auto& [lambda, c] : e) {
          const int rows = std::max(1, lambda.length());
          std::set<TableauKey> image, target;
          for (const auto& t : enumerate_ballot(SkewShape(lambda.padded(rows), mu.padded(rows)), nu))
            image.insert(key_of(rho1_switching(GluedPair(t)).skew(), rows));
          for (const auto& h : enumerate_ballot(SkewShape(lambda.padded(rows), nu.padded(rows)), mu))
            target.insert(key_of(h, rows));
          if (image != target || BigInt(image.size()) != c)
            sink.fail("rho1 maps LR(lambda/mu, nu) onto LR(lambda/nu, mu) for lambda=" + lambda.to_string(),
                      std::to_string(image.size()) + " images, " + std::to_string(target.size()) + " targets");
        }
        return 1;
      });
}

Report check_recursion(const Options& o) {
  std::vector<GluedPair> pairs;
  for (auto& p : lr_pairs(o.max_size.value_or(8)))
    if (staged_admissible(p)) pairs.push_back(std::move(p));
  return sweep(
      "recursion", pairs, o.exec, [](const GluedPair& p) { return show(p); },
      [](const GluedPair& p, Sink& sink) -> std::size_t {
        const StagedDecomposition sd = staged_decomposition(p);
        const int d = sd.d;
        const Partition& mu = p.skew().inner();
        const auto& dl = sd.d_word.letters();
        if (dl.empty() || std::any_of(dl.begin(), dl.end(), [d](int x) { return x != d; }))
          sink.fail("D = d^|D| with |D| > 0, d = " + std::to_string(d), show(sd.d_word));
        if (sd.d_word.size() != sd.f.size() - sd.f_hat.size())
          sink.fail("|D| = |F| - |F^|", show(sd.d_word) + " F=" + show(sd.f) + " F^=" + show(sd.f_hat));
        if (!is_subword(sd.f_hat, sd.f)) sink.fail("F^ a subword of F", show(sd.f_hat) + " vs " + show(sd.f));
        for (int k = 1; k < d; ++k)
          if (!sd.q.row(k).empty()) sink.fail("Q^(d-1) empty", show(sd.q));
        const Partition nu = content_partition(p.skew());
        const auto s_rect = rsk_insertion_rows(reading_word(sd.s));
        if (s_rect != yamanouchi_rows(nu)) sink.fail("S ~ Y_nu", show_rows(s_rect));
        std::vector<int> tail;
        for (int k = d; k <= mu.declared_length(); ++k) tail.push_back(mu[k]);
        const auto q_rect = rsk_insertion_rows(reading_word(sd.q));
        if (q_rect != yamanouchi_rows(Partition(tail), d)) sink.fail("Q ~ Y_(mu_d..mu_n)", show_rows(q_rect));
        const SkewTableau lhs = rho1_switching(p).skew();
        const SkewTableau rhs = concatenate(rho1_switching(GluedPair(sd.s)).skew(), sd.q);
        if (!(lhs == rhs)) sink.fail("rho1(Y u T) = rho1(Y' u S) u Q: " + show(lhs), show(rhs));
        return 1;
      });
}

}  // namespace

const std::vector<CheckInfo>& checks() {
  static const std::vector<CheckInfo> registry = {
      {"involution", "rho1 o rho1 = id via switching and internal insertion", 8, check_involution},
      {"coincidence", "switching, internal insertion and the scratch product agree", 8, check_coincidence},
      {"confluence", "infusion, greedy and seeded random switch orders agree", 8, check_confluence},
      {"order-words", "Knuth-equivalent valid order words give equal insertions", 7, check_order_words},
      {"routes", "relative position of consecutive bumping routes and new boxes", 7, check_routes},
      {"skew-rsk", "skew RSK is a bijection with P ~ T and Q ~ U", 6, check_skew_rsk},
      {"lr-oracle", "LR rule against the Schur polynomial product, with the rho1 bijection", 8, check_lr_oracle},
      {"recursion", "staged switching decomposition and its composition identity", 8, check_recursion},
  };
  return registry;
}

const CheckInfo& find_check(const std::string& name) {
  for (const auto& c : checks())
    if (c.name == name) return c;
  std::string names;
  for (const auto& c : checks()) names += (names.empty() ? "" : ", ") + c.name;
  throw Error("unknown check \"" + name + "\"; valid checks: " + names);
}

Report run_check(const std::string& name, const Options& options) {
  const CheckInfo& info = find_check(name);
  Options o = options;
  if (!o.max_size) o.max_size = info.default_size;
  if (*o.max_size < 1) throw Error("max size must be at least 1");
  return info.run(o);
}

}  // namespace lrc::verify
