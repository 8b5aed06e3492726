#include "braidld/props.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "braidld/braid.hpp"
#include "braidld/error.hpp"
#include "braidld/ld_term.hpp"
#include "braidld/sampling.hpp"

namespace braidld {

  namespace {

    constexpr std::array<std::string_view, 11> kSuites = {"bracket-ld",
                                                          "bracket-normal-form",
                                                          "tech1",
                                                          "thatlemma",
                                                          "leansright",
                                                          "dual-lemma",
                                                          "sigma-n",
                                                          "irreflexivity",
                                                          "phi-square",
                                                          "xi",
                                                          "relations"};

    // Largest n for the sigma-n suite.
    constexpr std::uint64_t kSigmaMaxN = 4;
    // Total leaf budget and maximum number of right factors for the
    // irreflexivity suite.
    constexpr std::size_t kIrreflexivityTotal = 10;
    constexpr std::size_t kIrreflexivityMaxK  = 3;
    // Length of the generator sequence for the xi suite.
    constexpr std::uint64_t kXiStrands = 8;
    // Relation indices and generator range for the relations suite.
    constexpr std::uint64_t kRelationIndex = 6;
    constexpr std::uint64_t kRelationGen   = 8;

    // nullopt on success, otherwise a rendered counterexample.
    using Failure = std::optional<std::string>;
    using Check
        = std::function<Failure(Sampler&, ActionConfig const&, SampleBounds const&)>;

    std::string braid_str(BraidWord const& p) {
      return "[" + to_string(p) + "]";
    }

    std::string word_str(FreeWord const& f) {
      return "[" + to_string(f) + "]";
    }

    std::string letter_str(BraidLetter const& s) {
      return (s.sign < 0 ? "-" : "") + std::to_string(s.index);
    }

    // Every sigma_i^{+-1} with 1 <= i <= max_index.
    std::vector<BraidLetter> all_letters(std::uint64_t max_index) {
      std::vector<BraidLetter> out;
      for (std::uint64_t i = 1; i <= max_index; ++i) {
        out.push_back({i, 1});
        out.push_back({i, -1});
      }
      return out;
    }

    BraidWord single(BraidLetter s) {
      return BraidWord(std::vector<BraidLetter>{s});
    }

    Failure check_bracket_ld(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      auto p   = rng.braid_word(b.braid_length, b.braid_index);
      auto q   = rng.braid_word(b.braid_length, b.braid_index);
      auto r   = rng.braid_word(b.braid_length, b.braid_index);
      auto lhs = bracket(p, bracket(q, r));
      auto rhs = bracket(bracket(p, q), bracket(p, r));
      if (braid_equal(lhs, rhs, cfg)) {
        return std::nullopt;
      }
      return "p=" + braid_str(p) + " q=" + braid_str(q) + " r=" + braid_str(r)
             + ": p[q[r]] != p[q][p[r]]";
    }

    Failure check_bracket_normal_form(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      auto p   = rng.braid_word(b.braid_length, b.braid_index);
      auto q   = rng.braid_word(b.braid_length, b.braid_index);
      auto r   = rng.braid_word(b.braid_length, b.braid_index);
      auto lhs = bracket(p, bracket(q, r));
      auto nf  = p * shift(q, 1) * shift(r, 2) * BraidWord{2, 1}
                * invert(shift(q, 2)) * invert(shift(p, 1));
      if (braid_equal(lhs, nf, cfg)) {
        return std::nullopt;
      }
      return "p=" + braid_str(p) + " q=" + braid_str(q) + " r=" + braid_str(r)
             + ": p[q[r]] differs from p s(q) s^2(r) s2 s1 s^2(q)^-1 s(p)^-1";
    }

    Failure check_tech1(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      auto f = rng.free_word(
          Alphabet::G, b.word_length, b.braid_index + 1, {Letter::g(1)});
      for (auto const& s : all_letters(b.braid_index)) {
        if (s == BraidLetter{1, -1}) {
          continue;
        }
        auto image = act_g(f, single(s), cfg);
        if (image.empty() || image[0] != Letter::g(1)) {
          return "f=" + word_str(f) + " sigma=" + letter_str(s)
                 + " image=" + word_str(image) + " does not begin with g1";
        }
      }
      return std::nullopt;
    }

    // The leading-letter change allowed for a word beginning with x_m under
    // a single braid letter.
    bool thatlemma_holds(FreeWord const& f, BraidLetter const& s, FreeWord const& image) {
      Index const m = f[0].index;
      if (image.empty()) {
        return false;
      }
      // x_m x_{m+e}^{-1} ... under sigma_{m+e}^{e} leads with x_{m+e}.
      if (f.size() > 1 && f[1].sign < 0) {
        for (int e : {1, -1}) {
          if (e < 0 && m == 0) {
            continue;
          }
          Index const me = e > 0 ? m + 1 : m - 1;
          if (f[1].index == me && s.index == me && s.sign == e) {
            return image[0] == Letter::x(me);
          }
        }
      }
      // sigma_m^{+-1} leads with x_{m+-1} x_m^{-1}.
      if (s.index == m) {
        Index const to = s.sign > 0 ? m + 1 : m - 1;
        return image.size() > 1 && image[0] == Letter::x(to)
               && image[1] == Letter::x(m, -1);
      }
      return image[0] == Letter::x(m);
    }

    Failure check_thatlemma(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      Index const m = rng.uniform(0, b.word_index);
      auto f = rng.free_word(Alphabet::X, b.word_length, b.word_index, {Letter::x(m)});
      for (auto const& s : all_letters(b.word_index + 1)) {
        auto image = act_x(f, single(s), cfg);
        if (!thatlemma_holds(f, s, image)) {
          return "f=" + word_str(f) + " sigma=" + letter_str(s)
                 + " image=" + word_str(image);
        }
      }
      return std::nullopt;
    }

    Failure check_dual_lemma(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      Index const m = rng.uniform(0, b.word_index);
      auto f = rng.free_word(Alphabet::X, b.word_length, b.word_index, {Letter::x(m, -1)});
      for (auto const& s : all_letters(b.word_index + 1)) {
        auto image = act_x(f, single(s), cfg);
        bool ok    = !image.empty() && image[0].sign < 0
                  && (image[0].index == m || image[0].index == m + 1
                      || (m > 0 && image[0].index == m - 1));
        if (!ok) {
          return "f=" + word_str(f) + " sigma=" + letter_str(s)
                 + " image=" + word_str(image);
        }
      }
      return std::nullopt;
    }

    Failure check_leansright(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      Index const         n   = rng.uniform(1, b.braid_index);
      Index const         top = std::max(b.word_index, b.braid_index + 1);
      Index const         m   = rng.uniform(n + 1, std::max(n + 1, top));
      std::vector<Letter> prefix;
      if (rng.uniform(0, 1) == 0) {
        prefix = {Letter::x(m)};
      } else {
        prefix = {Letter::x(n), Letter::x(m, -1)};
      }
      auto f = rng.free_word(Alphabet::X, b.word_length, top, prefix);
      for (auto const& s : all_letters(top)) {
        if (s == BraidLetter{n, -1}) {
          continue;
        }
        auto image = act_x(f, single(s), cfg);
        if (!leans_right_at(image, n)) {
          return "n=" + std::to_string(n) + " f=" + word_str(f) + " sigma="
                 + letter_str(s) + " image=" + word_str(image);
        }
      }
      return std::nullopt;
    }

    Failure check_sigma_n(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      Index const n = rng.uniform(1, std::min(kSigmaMaxN, b.braid_index));
      auto        p = rng.sigma_positive(n, b.braid_length, b.braid_index);
      if (braid_is_identity(p, cfg)) {
        return "n=" + std::to_string(n) + " p=" + braid_str(p)
               + " acts trivially";
      }
      auto image = act_x(FreeWord::generator(Alphabet::X, n), p, cfg);
      if (!leans_right_at(image, n)) {
        return "n=" + std::to_string(n) + " p=" + braid_str(p)
               + " (x_n)p=" + word_str(image) + " does not lean right";
      }
      return std::nullopt;
    }

    Failure check_irreflexivity(Sampler& rng, ActionConfig const& cfg, SampleBounds const&) {
      std::size_t const        k     = rng.uniform(1, kIrreflexivityMaxK);
      std::size_t const        total = rng.uniform(k + 1, kIrreflexivityTotal);
      std::vector<std::size_t> sizes(k + 1, 1);
      for (std::size_t extra = total - (k + 1); extra > 0; --extra) {
        ++sizes[rng.uniform(0, k)];
      }
      LdTerm              p = rng.term_of_size(sizes[0]);
      std::vector<LdTerm> qs;
      for (std::size_t i = 1; i <= k; ++i) {
        qs.push_back(rng.term_of_size(sizes[i]));
      }
      if (!irreflexivity_witness(p, qs, cfg)) {
        return std::nullopt;
      }
      std::string out = "P=" + to_string(p) + " Q=";
      for (auto const& q : qs) {
        out += to_string(q) + ";";
      }
      return out + " P equals its own left prefix";
    }

    Failure check_phi_square(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      auto f = rng.free_word(Alphabet::X, b.word_length, b.word_index);
      auto h = rng.free_word(Alphabet::G, b.word_length, b.word_index);
      auto p = rng.braid_word(b.braid_length, b.braid_index);
      if (phi_inv(phi(f)) != f) {
        return "phi_inv(phi(f)) != f for f=" + word_str(f);
      }
      if (phi(phi_inv(h)) != h) {
        return "phi(phi_inv(h)) != h for h=" + word_str(h);
      }
      auto direct = act_x(f, p, cfg);
      auto routed = phi_inv(act_g(phi(f), p, cfg));
      if (direct != routed) {
        return "f=" + word_str(f) + " p=" + braid_str(p) + " act_x="
               + word_str(direct) + " via phi=" + word_str(routed);
      }
      return std::nullopt;
    }

    Failure check_xi(Sampler& rng, ActionConfig const& cfg, SampleBounds const& b) {
      auto p = rng.braid_word(b.braid_length, kXiStrands - 1);
      std::vector<FreeWord> gens;
      for (Index j = 1; j <= kXiStrands; ++j) {
        gens.push_back(FreeWord::generator(Alphabet::G, j));
      }
      auto conj = act_conj_sequence(gens, reverse(p), cfg);
      for (Index j = 1; j <= kXiStrands; ++j) {
        auto image = act_g(gens[j - 1], p, cfg);
        if (conj[j - 1] != image) {
          return "p=" + braid_str(p) + " position " + std::to_string(j)
                 + ": conjugation " + word_str(conj[j - 1]) + " vs action "
                 + word_str(image);
        }
      }
      return std::nullopt;
    }

    Check check_for(std::string_view suite) {
      if (suite == "bracket-ld") return check_bracket_ld;
      if (suite == "bracket-normal-form") return check_bracket_normal_form;
      if (suite == "tech1") return check_tech1;
      if (suite == "thatlemma") return check_thatlemma;
      if (suite == "leansright") return check_leansright;
      if (suite == "dual-lemma") return check_dual_lemma;
      if (suite == "sigma-n") return check_sigma_n;
      if (suite == "irreflexivity") return check_irreflexivity;
      if (suite == "phi-square") return check_phi_square;
      if (suite == "xi") return check_xi;
      return nullptr;
    }

    // Both sides of every defining relation with indices <= 6 act the same
    // way on g_0 .. g_8.
    RunReport run_relations(std::uint64_t seed, ActionConfig const& cfg) {
      RunReport report{"relations", 0, 0, 0, seed, std::nullopt};
      for (int i = 1; i <= static_cast<int>(kRelationIndex); ++i) {
        for (int j = 1; j <= static_cast<int>(kRelationIndex); ++j) {
          int const gap = std::abs(i - j);
          if (gap == 0) {
            continue;
          }
          BraidWord u = gap > 1 ? BraidWord{i, j} : BraidWord{i, j, i};
          BraidWord v = gap > 1 ? BraidWord{j, i} : BraidWord{j, i, j};
          for (Index g = 0; g <= kRelationGen; ++g) {
            auto gen = FreeWord::generator(Alphabet::G, g);
            ++report.cases;
            auto lu = act_g(gen, u, cfg);
            auto lv = act_g(gen, v, cfg);
            if (lu != lv) {
              ++report.failures;
              if (!report.first_failure) {
                report.first_failure = "g" + std::to_string(g) + " under "
                                       + braid_str(u) + " vs " + braid_str(v)
                                       + ": " + word_str(lu) + " != "
                                       + word_str(lv);
              }
            }
          }
        }
      }
      return report;
    }

  }  // namespace

  std::span<std::string_view const> suite_names() noexcept {
    return kSuites;
  }

  bool is_suite(std::string_view name) noexcept {
    return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
  }

  RunReport prop_run(std::string_view    suite,
                     std::size_t         cases,
                     std::uint64_t       seed,
                     ActionConfig const& cfg,
                     SampleBounds const& bounds) {
    cfg.validate();
    if (suite == "relations") {
      return run_relations(seed, cfg);
    }
    auto check = check_for(suite);
    if (!check) {
      throw InvalidArgument("unknown property suite '" + std::string(suite) + "'");
    }
    RunReport report{std::string(suite), cases, 0, 0, seed, std::nullopt};
    for (std::size_t k = 0; k < cases; ++k) {
      Sampler rng(mix_seed(seed, k));
      try {
        if (auto failure = check(rng, cfg, bounds)) {
          ++report.failures;
          if (!report.first_failure) {
            report.first_failure = "case " + std::to_string(k) + ": " + *failure;
          }
        }
      } catch (ResourceCapExceeded const&) {
        ++report.inconclusive;
      }
    }
    return report;
  }

  std::string render(RunReport const& report) {
    std::ostringstream os;
    os << "suite: " << report.suite << '\n'
       << "cases: " << report.cases << '\n'
       << "failures: " << report.failures << '\n'
       << "inconclusive: " << report.inconclusive << '\n'
       << "seed: " << report.seed << '\n';
    if (report.first_failure) {
      os << "first failure: " << *report.first_failure << '\n';
    }
    return os.str();
  }

}  // namespace braidld
