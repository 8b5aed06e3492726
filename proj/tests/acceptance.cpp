// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidld/action.hpp"
#include "braidld/braid.hpp"
#include "braidld/cli.hpp"
#include "braidld/error.hpp"
#include "braidld/free_group.hpp"
#include "braidld/ld_term.hpp"
#include "oracles.hpp"

using namespace braidld;

namespace {

  using Clock = std::chrono::steady_clock;

  struct Verdict {
    bool        pass = true;
    std::string detail;
  };

  // Random inputs drawn independently of the library's own samplers.
  class Gen {
   public:
    explicit Gen(std::uint64_t seed) : _rng(seed) {}

    std::uint64_t uni(std::uint64_t lo, std::uint64_t hi) {
      return std::uniform_int_distribution<std::uint64_t>(lo, hi)(_rng);
    }
    int sign() {
      return uni(0, 1) ? 1 : -1;
    }

    BraidWord braid(std::size_t max_len, std::uint64_t max_idx) {
      std::vector<BraidLetter> ls;
      for (auto k = uni(0, max_len); k > 0; --k) {
        ls.push_back({uni(1, max_idx), sign()});
      }
      return BraidWord(std::move(ls));
    }

    // sigma_n appears at least once and sigma_n^{-1} never.
    BraidWord positive(std::uint64_t n, std::size_t max_len, std::uint64_t max_idx) {
      std::vector<BraidLetter> ls;
      auto                     len = uni(1, max_len);
      auto                     at  = uni(0, len - 1);
      for (std::uint64_t k = 0; k < len; ++k) {
        auto i = k == at ? n : uni(1, max_idx);
        ls.push_back({i, i == n ? 1 : sign()});
      }
      return BraidWord(std::move(ls));
    }

    // Reduced word: first the given prefix, then random non-cancelling
    // letters up to a random total length <= max_len.
    FreeWord word(Alphabet a, std::size_t max_len, Index max_idx, std::vector<Letter> prefix = {}) {
      auto len = uni(prefix.size(), std::max(prefix.size(), max_len));
      while (prefix.size() < len) {
        Letter l{a, uni(0, max_idx), sign()};
        if (prefix.empty() || !prefix.back().cancels(l)) {
          prefix.push_back(l);
        }
      }
      return FreeWord::reduce(a, prefix);
    }

    LdTerm term(std::size_t leaves) {
      if (leaves <= 1) {
        return LdTerm::leaf();
      }
      auto left = uni(1, leaves - 1);
      auto l    = term(left);
      return l * term(leaves - left);
    }

    std::mt19937_64& rng() {
      return _rng;
    }

   private:
    std::mt19937_64 _rng;
  };

  BraidWord one(std::uint64_t i, int sign) {
    return BraidWord(std::vector<BraidLetter>{{i, sign}});
  }

  FreeWord gw(std::string_view s) {
    return parse_free_word(s, Alphabet::G);
  }

  std::string str(Index i) {
    return std::to_string(i);
  }

  std::string seconds(Clock::duration d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", std::chrono::duration<double>(d).count());
    return buf;
  }

  ////////////////////////////////////////////////////////////////////////
  // 1. Action tables
  ////////////////////////////////////////////////////////////////////////

  Verdict action_tables() {
    auto const  start = Clock::now();
    std::size_t rules_ok = 0, rules = 0;
    auto        rule = [&](std::function<bool(Index)> holds) {
      ++rules;
      bool all = true;
      for (Index i = 1; i <= 6; ++i) {
        all = all && holds(i);
      }
      rules_ok += all;
    };
    auto g = [](Index i, int s = 1) { return FreeWord::generator(Alphabet::G, i, s); };
    auto x = [](Index i, int s = 1) { return FreeWord::generator(Alphabet::X, i, s); };
    auto w = [](std::vector<Letter> ls) { return FreeWord::reduce(ls); };

    // (g_i)s_i = g_i g_{i+1} g_i^{-1}; (g_{i+1})s_i = g_i; (g_j)s_i = g_j
    rule([&](Index i) {
      return act_g(g(i), one(i, 1)) == w({Letter::g(i), Letter::g(i + 1), Letter::g(i, -1)});
    });
    rule([&](Index i) { return act_g(g(i + 1), one(i, 1)) == g(i); });
    rule([&](Index i) {
      return act_g(g(i + 2), one(i, 1)) == g(i + 2) && act_g(g(i - 1), one(i, 1)) == g(i - 1);
    });
    // (g_i)s_i^{-1} = g_{i+1}; (g_{i+1})s_i^{-1} = g_{i+1}^{-1} g_i g_{i+1}; (g_j)s_i^{-1} = g_j
    rule([&](Index i) { return act_g(g(i), one(i, -1)) == g(i + 1); });
    rule([&](Index i) {
      return act_g(g(i + 1), one(i, -1))
             == w({Letter::g(i + 1, -1), Letter::g(i), Letter::g(i + 1)});
    });
    rule([&](Index i) {
      return act_g(g(i + 2), one(i, -1)) == g(i + 2) && act_g(g(i - 1), one(i, -1)) == g(i - 1);
    });
    // (x_i)s_i^{+-1} = x_{i+-1} x_i^{-1} x_{i-+1}
    rule([&](Index i) {
      return act_x(x(i), one(i, 1)) == w({Letter::x(i + 1), Letter::x(i, -1), Letter::x(i - 1)});
    });
    rule([&](Index i) {
      return act_x(x(i), one(i, -1)) == w({Letter::x(i - 1), Letter::x(i, -1), Letter::x(i + 1)});
    });
    // (x_j)s_i^{+-1} = x_j for j != i, on both neighbours
    rule([&](Index i) { return act_x(x(i - 1), one(i, 1)) == x(i - 1); });
    rule([&](Index i) { return act_x(x(i + 1), one(i, 1)) == x(i + 1); });
    rule([&](Index i) { return act_x(x(i - 1), one(i, -1)) == x(i - 1); });
    rule([&](Index i) { return act_x(x(i + 1), one(i, -1)) == x(i + 1); });

    auto elapsed = Clock::now() - start;
    bool fast    = elapsed < std::chrono::seconds(1);
    return {rules_ok == 12 && rules == 12 && fast,
            str(rules_ok) + "/" + str(rules) + " rules exact, " + seconds(elapsed)};
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. Relations
  ////////////////////////////////////////////////////////////////////////

  Verdict relations() {
    auto        start = Clock::now();
    std::size_t checks = 0, mismatches = 0;
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        int gap = std::abs(i - j);
        if (gap == 0) {
          continue;
        }
        BraidWord u = gap > 1 ? BraidWord{i, j} : BraidWord{i, j, i};
        BraidWord v = gap > 1 ? BraidWord{j, i} : BraidWord{j, i, j};
        for (Index k = 1; k <= 8; ++k) {
          auto gk = FreeWord::generator(Alphabet::G, k);
          ++checks;
          mismatches += act_g(gk, u) != act_g(gk, v);
        }
      }
    }
    auto elapsed = Clock::now() - start;
    return {mismatches == 0 && elapsed < std::chrono::seconds(1),
            str(checks) + " checks, " + str(mismatches) + " mismatches, " + seconds(elapsed)};
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. phi is an isomorphism
  ////////////////////////////////////////////////////////////////////////

  Verdict phi_iso() {
    Gen         gen(301);
    std::size_t bad = 0;
    for (int k = 0; k < 500; ++k) {
      auto f = gen.word(Alphabet::X, 12, 8);
      bad += phi_inv(phi(f)) != f;
      // phi itself against the written-out product
      bad += phi(f) != oracle::to_g(oracle::phi(oracle::from(f)));
    }
    for (int k = 0; k < 500; ++k) {
      auto h = gen.word(Alphabet::G, 12, 8);
      bad += phi(phi_inv(h)) != h;
    }
    return {bad == 0, "1000 round trips, " + str(bad) + " failures"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. Commuting square
  ////////////////////////////////////////////////////////////////////////

  Verdict commuting_square() {
    Gen         gen(401);
    std::size_t bad = 0;
    for (int k = 0; k < 500; ++k) {
      auto f = gen.word(Alphabet::X, 12, 6);
      auto p = gen.braid(12, 6);
      bad += act_x(f, p) != phi_inv(act_g(phi(f), p));
    }
    return {bad == 0, "500 pairs, " + str(bad) + " failures"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. Words beginning with g1 keep it
  ////////////////////////////////////////////////////////////////////////

  Verdict tech1() {
    Gen         gen(501);
    std::size_t hits = 0, kept = 0;
    for (int k = 0; k < 1000; ++k) {
      auto f = gen.word(Alphabet::G, 12, 7, {Letter::g(1)});
      for (Index i = 1; i <= 6; ++i) {
        for (int s : {1, -1}) {
          if (i == 1 && s < 0) {
            continue;
          }
          auto image = act_g(f, one(i, s));
          ++hits;
          kept += !image.empty() && image[0] == Letter::g(1);
        }
      }
    }
    return {kept == hits, str(kept) + "/" + str(hits) + " images begin with g1"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Leading-letter changes and the dual statement
  ////////////////////////////////////////////////////////////////////////

  // Expected leading letters for f = x_m ... under s_k^e.
  bool leading_change_ok(FreeWord const& f, Index k, int e, FreeWord const& image) {
    Index const m = f[0].index;
    if (image.empty()) {
      return false;
    }
    bool const second_inverse = f.size() > 1 && f[1].sign < 0;
    // (x_m x_{m+1}^{-1} ...) s_{m+1}   = x_{m+1} ...
    // (x_m x_{m-1}^{-1} ...) s_{m-1}^-1 = x_{m-1} ...
    if (second_inverse && e > 0 && k == m + 1 && f[1].index == m + 1) {
      return image[0] == Letter::x(m + 1);
    }
    if (second_inverse && e < 0 && m >= 2 && k == m - 1 && f[1].index == m - 1) {
      return image[0] == Letter::x(m - 1);
    }
    // (x_m ...) s_m^{+-1} = x_{m+-1} x_m^{-1} ...
    if (k == m) {
      Index to = e > 0 ? m + 1 : m - 1;
      return image.size() >= 2 && image[0] == Letter::x(to) && image[1] == Letter::x(m, -1);
    }
    return image[0] == Letter::x(m);
  }

  Verdict leading_letter() {
    Gen         gen(601);
    std::size_t pos_bad = 0, dual_bad = 0, hits = 0;
    for (int c = 0; c < 1000; ++c) {
      Index m   = gen.uni(0, 6);
      auto  f   = gen.word(Alphabet::X, 12, 6, {Letter::x(m)});
      Index mm  = gen.uni(0, 6);
      auto  fin = gen.word(Alphabet::X, 12, 6, {Letter::x(mm, -1)});
      for (Index k = 1; k <= 7; ++k) {
        for (int e : {1, -1}) {
          ++hits;
          pos_bad += !leading_change_ok(f, k, e, act_x(f, one(k, e)));
          auto img = act_x(fin, one(k, e));
          bool ok  = !img.empty() && img[0].sign < 0
                    && (img[0].index == mm || img[0].index == mm + 1
                        || (mm > 0 && img[0].index == mm - 1));
          dual_bad += !ok;
        }
      }
    }
    return {pos_bad == 0 && dual_bad == 0,
            str(hits) + " hits per side, " + str(pos_bad) + " violations (x_m), "
                + str(dual_bad) + " violations (x_m^-1)"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 7. Leaning right is preserved
  ////////////////////////////////////////////////////////////////////////

  Verdict leans_right() {
    Gen         gen(701);
    std::size_t bad = 0, cases = 0;
    while (cases < 1000) {
      Index n = gen.uni(1, 6);
      Index m = gen.uni(n + 1, 7);
      auto  f = gen.uni(0, 1) ? gen.word(Alphabet::X, 12, 7, {Letter::x(m)})
                              : gen.word(Alphabet::X, 12, 7, {Letter::x(n), Letter::x(m, -1)});
      Index i = gen.uni(1, 7);
      int   e = gen.sign();
      if (i == n && e < 0) {
        continue;
      }
      ++cases;
      bad += !leans_right_at(act_x(f, one(i, e)), n);
    }
    return {bad == 0, str(cases) + " triples, " + str(bad) + " images fail to lean right"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 8. sigma_n-positive words are nontrivial
  ////////////////////////////////////////////////////////////////////////

  Verdict sigma_n() {
    Gen         gen(801);
    auto        start = Clock::now();
    std::size_t bad = 0, capped = 0;
    for (int c = 0; c < 1000; ++c) {
      Index n = gen.uni(1, 4);
      auto  p = gen.positive(n, 20, 8);
      try {
        bool trivial = braid_is_identity(p);
        bool leans   = leans_right_at(act_x(FreeWord::generator(Alphabet::X, n), p), n);
        bad += trivial || !leans;
      } catch (ResourceCapExceeded const&) {
        ++capped;
      }
    }
    auto elapsed = Clock::now() - start;
    bool ok      = bad == 0 && capped * 20 < 1000 && elapsed < std::chrono::seconds(30);
    return {ok, "1000 words, " + str(bad) + " failures, " + str(capped) + " cap hits, "
                    + seconds(elapsed)};
  }

  ////////////////////////////////////////////////////////////////////////
  // 9. The bracket is left distributive
  ////////////////////////////////////////////////////////////////////////

  Verdict bracket_ld() {
    Gen         gen(901);
    std::size_t bad = 0;
    for (int c = 0; c < 300; ++c) {
      auto p   = gen.braid(8, 4);
      auto q   = gen.braid(8, 4);
      auto r   = gen.braid(8, 4);
      auto lhs = bracket(p, bracket(q, r));
      auto rhs = bracket(bracket(p, q), bracket(p, r));
      auto nf  = p * shift(q, 1) * shift(r, 2) * BraidWord{2, 1} * invert(shift(q, 2))
                * invert(shift(p, 1));
      bad += !braid_equal(lhs, rhs) || !braid_equal(lhs, nf);
    }
    return {bad == 0, "300 triples, " + str(bad) + " failures"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 10. Irreflexivity
  ////////////////////////////////////////////////////////////////////////

  Verdict irreflexivity() {
    Gen         gen(1001);
    std::size_t bad = 0;
    for (int c = 0; c < 300; ++c) {
      std::size_t              k     = gen.uni(1, 3);
      std::size_t              total = gen.uni(k + 1, 10);
      std::vector<std::size_t> sizes(k + 1, 1);
      for (auto extra = total - (k + 1); extra > 0; --extra) {
        ++sizes[gen.uni(0, k)];
      }
      auto                p = gen.term(sizes[0]);
      std::vector<LdTerm> qs;
      for (std::size_t i = 1; i <= k; ++i) {
        qs.push_back(gen.term(sizes[i]));
      }
      bad += irreflexivity_witness(p, qs);
    }
    return {bad == 0, "300 prefixes, " + str(bad) + " equal to their base"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 11. LD-equality decider against rewriting and small models
  ////////////////////////////////////////////////////////////////////////

  Verdict ld_soundness() {
    Gen           gen(1101);
    std::size_t   missed = 0, rewritten = 0;
    for (int c = 0; c < 200; ++c) {
      auto s     = gen.term(gen.uni(1, 6));
      auto u     = s;
      auto steps = gen.uni(1, 3);
      for (std::uint64_t k = 0; k < steps; ++k) {
        u = oracle::random_rewrite(u, gen.rng());
      }
      rewritten += !(u == s);
      missed += !ld_equal(s, u);
    }

    std::vector<oracle::Laver> laver;
    for (unsigned n = 1; n <= 5; ++n) {
      laver.emplace_back(n);
    }
    std::size_t contradictions = 0, conj_separated = 0, laver_separated = 0;
    for (int c = 0; c < 200; ++c) {
      auto s = gen.term(gen.uni(1, 7));
      auto t = gen.term(gen.uni(1, 7));
      bool conj_sep = oracle::eval_conjugation(s) != oracle::eval_conjugation(t);
      bool lav_sep  = false;
      for (auto const& a : laver) {
        lav_sep = lav_sep || a.eval(s) != a.eval(t);
      }
      conj_separated += conj_sep;
      laver_separated += lav_sep;
      if ((conj_sep || lav_sep) && ld_equal(s, t)) {
        ++contradictions;
      }
    }
    return {missed == 0 && contradictions == 0,
            "related: " + str(missed) + "/200 missed (" + str(rewritten)
                + " structurally changed); unrelated: " + str(contradictions)
                + " contradictions, separated by conjugation model " + str(conj_separated)
                + ", by Laver tables " + str(laver_separated)};
  }

  ////////////////////////////////////////////////////////////////////////
  // 12. Reversal and the conjugation action
  ////////////////////////////////////////////////////////////////////////

  Verdict xi_identity() {
    Gen                   gen(1201);
    std::vector<FreeWord> gens;
    for (Index j = 1; j <= 8; ++j) {
      gens.push_back(FreeWord::generator(Alphabet::G, j));
    }
    std::size_t bad = 0;
    for (int c = 0; c < 300; ++c) {
      auto p    = gen.braid(12, 7);
      auto conj = act_conj_sequence(gens, reverse(p));
      for (std::size_t j = 0; j < gens.size(); ++j) {
        bad += conj[j] != act_g(gens[j], p);
      }
    }
    return {bad == 0, "300 braids, " + str(bad) + " mismatched positions"};
  }

  ////////////////////////////////////////////////////////////////////////
  // 13. CLI golden outputs
  ////////////////////////////////////////////////////////////////////////

  Verdict cli_golden() {
    struct Golden {
      std::vector<std::string> args;
      int                      code;
      std::string              out;
    };
    std::vector<Golden> const cases = {
        {{"braid-eq", "1", "2", "1", "--", "2", "1", "2"}, 0, "equal\n"},
        {{"sigma-check", "1", "-2", "1", "2"},
         0,
         "decomposition: p1=-2 n=1 p2=2\nnon-trivial\nleans right at 1\n"},
        {{"reduce", "g", "g1", "-g1"}, 0, "ε\n"},
    };
    std::size_t ok = 0;
    for (auto const& g : cases) {
      std::ostringstream out, err;
      int                code = cli::run(g.args, out, err);
      ok += code == g.code && out.str() == g.out;
    }
    return {ok == cases.size(), str(ok) + "/3 golden outputs match"};
  }

}  // namespace

int main() {
  struct Criterion {
    char const*              name;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> const criteria = {
      {"action tables exact", action_tables},
      {"defining relations act identically", relations},
      {"phi is an isomorphism", phi_iso},
      {"commuting square act_x = phi^-1 act_g phi", commuting_square},
      {"leading g1 survives every letter but s1^-1", tech1},
      {"leading-letter changes (x_m and x_m^-1)", leading_letter},
      {"leaning right is preserved", leans_right},
      {"sigma_n-positive words are nontrivial and lean right", sigma_n},
      {"bracket is left distributive", bracket_ld},
      {"left-division order is irreflexive", irreflexivity},
      {"LD-equality decider soundness", ld_soundness},
      {"reversal turns conjugation into the Artin action", xi_identity},
      {"CLI golden outputs", cli_golden},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (std::exception const& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu. %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
