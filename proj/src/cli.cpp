#include "braidld/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "braidld/action.hpp"
#include "braidld/braid.hpp"
#include "braidld/error.hpp"
#include "braidld/ld_term.hpp"
#include "braidld/props.hpp"
#include "text.hpp"

namespace braidld::cli {

  namespace {

    using json   = nlohmann::ordered_json;
    using Tokens = std::span<std::string const>;

    constexpr std::size_t   kDefaultCases = 200;
    constexpr std::uint64_t kDefaultSeed  = 1;

    // Raised for an unknown command or suite name.
    class UnknownName : public Error {
     public:
      using Error::Error;
    };

    struct Outcome {
      int         exit = kYes;
      std::string text;
      json        inputs = json::object();
      json        result;
    };

    struct Context {
      ActionConfig cfg;
    };

    using Handler = std::function<Outcome(Tokens, Context const&)>;

    std::string join(Tokens tokens) {
      std::string out;
      for (auto const& t : tokens) {
        if (!out.empty()) {
          out += ' ';
        }
        out += t;
      }
      return out;
    }

    // Splits at the single literal "--".
    std::pair<Tokens, Tokens> split_pair(Tokens tokens) {
      auto it = std::find(tokens.begin(), tokens.end(), "--");
      if (it == tokens.end()) {
        throw ParseError("expected a '--' separator between the two operands");
      }
      if (std::find(it + 1, tokens.end(), "--") != tokens.end()) {
        throw ParseError("more than one '--' separator");
      }
      auto pos = static_cast<std::size_t>(it - tokens.begin());
      return {tokens.subspan(0, pos), tokens.subspan(pos + 1)};
    }

    std::uint64_t parse_count(std::string const& token, char const* what) {
      auto v = detail::parse_unsigned(token);
      if (!v) {
        throw ParseError(std::string("malformed ") + what + " '" + token + "'");
      }
      return *v;
    }

    Tokens require_args(Tokens tokens, std::size_t n, char const* usage_line) {
      if (tokens.size() < n) {
        throw ParseError(std::string("usage: ") + usage_line);
      }
      return tokens;
    }

    Alphabet parse_alphabet(std::string const& token) {
      if (token == "g") {
        return Alphabet::G;
      }
      if (token == "x") {
        return Alphabet::X;
      }
      throw ParseError("alphabet must be 'g' or 'x', got '" + token + "'");
    }

    Outcome predicate(bool value, std::string yes, std::string no) {
      Outcome o;
      o.exit   = value ? kYes : kNo;
      o.text   = value ? std::move(yes) : std::move(no);
      o.result = value;
      return o;
    }

    Outcome text_result(std::string text) {
      Outcome o;
      o.text   = text;
      o.result = std::move(text);
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    Outcome cmd_reduce(Tokens args, Context const& ctx) {
      require_args(args, 1, "reduce <g|x> <word>");
      Alphabet a = parse_alphabet(args[0]);
      auto     w = parse_free_word(join(args.subspan(1)), a);
      if (w.size() > ctx.cfg.max_word_length) {
        throw ResourceCapExceeded(w.size(), ctx.cfg.max_word_length);
      }
      auto o            = text_result(to_string(w));
      o.inputs["alphabet"] = args[0];
      o.inputs["word"]     = join(args.subspan(1));
      return o;
    }

    Outcome cmd_act(Tokens args, Context const& ctx) {
      require_args(args, 1, "act <g|x> <word> -- <braid>");
      Alphabet a           = parse_alphabet(args[0]);
      auto [word, braid]   = split_pair(args.subspan(1));
      auto f               = parse_free_word(join(word), a);
      auto p               = parse_braid(join(braid));
      auto image           = a == Alphabet::G ? act_g(f, p, ctx.cfg) : act_x(f, p, ctx.cfg);
      auto o               = text_result(to_string(image));
      o.inputs["alphabet"] = args[0];
      o.inputs["word"]     = to_string(f);
      o.inputs["braid"]    = to_string(p);
      return o;
    }

    Outcome cmd_braid_id(Tokens args, Context const& ctx) {
      auto p = parse_braid(join(args));
      auto o = predicate(braid_is_identity(p, ctx.cfg), "identity", "not identity");
      o.inputs["braid"] = to_string(p);
      return o;
    }

    Outcome cmd_braid_eq(Tokens args, Context const& ctx) {
      auto [lhs, rhs] = split_pair(args);
      auto p          = parse_braid(join(lhs));
      auto q          = parse_braid(join(rhs));
      auto o          = predicate(braid_equal(p, q, ctx.cfg), "equal", "not equal");
      o.inputs["p"]   = to_string(p);
      o.inputs["q"]   = to_string(q);
      return o;
    }

    Outcome cmd_bracket(Tokens args, Context const&) {
      auto [lhs, rhs] = split_pair(args);
      auto p          = parse_braid(join(lhs));
      auto q          = parse_braid(join(rhs));
      auto o          = text_result(to_string(bracket(p, q)));
      o.inputs["p"]   = to_string(p);
      o.inputs["q"]   = to_string(q);
      return o;
    }

    Outcome cmd_shift(Tokens args, Context const&) {
      require_args(args, 1, "shift <k> <braid>");
      auto k            = parse_count(args[0], "shift amount");
      auto p            = parse_braid(join(args.subspan(1)));
      auto o            = text_result(to_string(shift(p, k)));
      o.inputs["k"]     = k;
      o.inputs["braid"] = to_string(p);
      return o;
    }

    Outcome cmd_reverse(Tokens args, Context const&) {
      auto p            = parse_braid(join(args));
      auto o            = text_result(to_string(reverse(p)));
      o.inputs["braid"] = to_string(p);
      return o;
    }

    Outcome cmd_sigma_check(Tokens args, Context const& ctx) {
      require_args(args, 1, "sigma-check <n> <braid>");
      auto n = parse_count(args[0], "generator index");
      if (n == 0) {
        throw ParseError("generator index must be >= 1");
      }
      auto p = parse_braid(join(args.subspan(1)));

      Outcome o;
      o.inputs["n"]     = n;
      o.inputs["braid"] = to_string(p);
      auto dec          = sigma_decompose(p, n);
      std::string const ns = std::to_string(n);
      if (!dec) {
        o.exit   = kNo;
        o.text   = "not sigma-" + ns + "-positive";
        o.result = {{"decomposition", nullptr}};
        return o;
      }
      bool const trivial = braid_is_identity(p, ctx.cfg);
      auto const image   = act_x(FreeWord::generator(Alphabet::X, n), p, ctx.cfg);
      bool const leans   = leans_right_at(image, n);

      o.exit = (!trivial && leans) ? kYes : kNo;
      o.text = "decomposition: p1=" + to_string(dec->p1) + " n=" + ns
               + " p2=" + to_string(dec->p2) + "\n"
               + (trivial ? "trivial" : "non-trivial") + "\n"
               + (leans ? "leans right at " : "does not lean right at ") + ns;
      o.result = {{"decomposition",
                   {{"p1", to_string(dec->p1)}, {"n", n}, {"p2", to_string(dec->p2)}}},
                  {"non_trivial", !trivial},
                  {"image", to_string(image)},
                  {"leans_right", leans}};
      return o;
    }

    Outcome cmd_lean(Tokens args, Context const&) {
      require_args(args, 1, "lean <n> <word over x>");
      auto n            = parse_count(args[0], "index");
      auto f            = parse_free_word(join(args.subspan(1)), Alphabet::X);
      std::string ns    = std::to_string(n);
      auto o            = predicate(leans_right_at(f, n), "leans right at " + ns,
                                    "does not lean right at " + ns);
      o.inputs["n"]     = n;
      o.inputs["word"]  = to_string(f);
      return o;
    }

    Outcome cmd_chi(Tokens args, Context const&) {
      auto      it   = std::find(args.begin(), args.end(), "--base");
      auto      pos  = static_cast<std::size_t>(it - args.begin());
      BraidWord base;
      if (it != args.end()) {
        base = parse_braid(join(args.subspan(pos + 1)));
      }
      auto t            = parse_term(join(args.subspan(0, pos)));
      auto o            = text_result(to_string(chi(t, base)));
      o.inputs["term"]  = to_string(t);
      o.inputs["base"]  = to_string(base);
      return o;
    }

    Outcome cmd_ld_eq(Tokens args, Context const& ctx) {
      auto [lhs, rhs] = split_pair(args);
      auto s          = parse_term(join(lhs));
      auto t          = parse_term(join(rhs));
      auto o          = predicate(ld_equal(s, t, {}, ctx.cfg), "equal", "not equal");
      o.inputs["s"]   = to_string(s);
      o.inputs["t"]   = to_string(t);
      return o;
    }

    Outcome cmd_seq_act(Tokens args, Context const& ctx) {
      auto [terms, braid] = split_pair(args);
      auto ts             = parse_term_list(join(terms));
      auto p              = parse_braid(join(braid));
      auto out            = sequence_act(LdSequence(ts), p, ctx.cfg);

      Outcome     o;
      std::string text;
      json        listed = json::array();
      for (auto const& t : out.terms()) {
        text += to_string(t) + " ";
        listed.push_back(to_string(t));
      }
      o.text = text + "...";
      o.result = {{"terms", listed}, {"tail", to_string(out.tail())}};
      json in  = json::array();
      for (auto const& t : ts) {
        in.push_back(to_string(t));
      }
      o.inputs["terms"] = in;
      o.inputs["braid"] = to_string(p);
      return o;
    }

    Outcome cmd_prop(Tokens args, Context const& ctx) {
      require_args(args, 1, "prop <suite> [--cases N] [--seed S]");
      std::string const& suite = args[0];
      std::size_t        cases = kDefaultCases;
      std::uint64_t      seed  = kDefaultSeed;
      for (std::size_t i = 1; i < args.size(); ++i) {
        if ((args[i] == "--cases" || args[i] == "--seed") && i + 1 < args.size()) {
          auto v = parse_count(args[i + 1], args[i].c_str() + 2);
          (args[i] == "--cases" ? cases : seed) = v;
          ++i;
        } else {
          throw ParseError("unexpected argument '" + args[i] + "' to prop");
        }
      }
      if (!is_suite(suite)) {
        throw UnknownName("unknown property suite '" + suite + "'");
      }
      auto report = prop_run(suite, cases, seed, ctx.cfg);

      Outcome o;
      o.exit            = report.ok() ? kYes : kNo;
      o.text            = render(report);
      o.text.pop_back();  // trailing newline added by the writer
      o.inputs["suite"] = suite;
      o.inputs["cases"] = cases;
      o.inputs["seed"]  = seed;
      o.result          = {{"suite", report.suite},
                           {"cases", report.cases},
                           {"failures", report.failures},
                           {"inconclusive", report.inconclusive},
                           {"seed", report.seed},
                           {"first_failure", report.first_failure
                                                 ? json(*report.first_failure)
                                                 : json(nullptr)}};
      return o;
    }

    std::map<std::string, Handler, std::less<>> const& commands() {
      static std::map<std::string, Handler, std::less<>> const table = {
          {"reduce", cmd_reduce},
          {"act", cmd_act},
          {"braid-id", cmd_braid_id},
          {"braid-eq", cmd_braid_eq},
          {"bracket", cmd_bracket},
          {"shift", cmd_shift},
          {"reverse", cmd_reverse},
          {"sigma-check", cmd_sigma_check},
          {"lean", cmd_lean},
          {"chi", cmd_chi},
          {"ld-eq", cmd_ld_eq},
          {"seq-act", cmd_seq_act},
          {"prop", cmd_prop},
      };
      return table;
    }

    int exit_code_for(std::exception_ptr e) {
      try {
        std::rethrow_exception(e);
      } catch (ResourceCapExceeded const&) {
        return kResourceCap;
      } catch (UnknownName const&) {
        return kUnknown;
      } catch (InverseNotApplicable const&) {
        return kNotApplicable;
      } catch (PositionOutOfRange const&) {
        return kNotApplicable;
      } catch (Error const&) {
        return kParseError;
      }
    }

  }  // namespace

  Options options_from_environment() {
    Options opts;
    if (char const* v = std::getenv(kMaxLengthEnv)) {
      if (auto n = detail::parse_unsigned(v); n && *n > 0) {
        opts.default_max_word_length = *n;
      }
    }
    return opts;
  }

  std::string usage() {
    std::string out
        = "usage: braidld [--json] [--max-length N] <command> [args]\n"
          "\n"
          "commands:\n"
          "  reduce <g|x> <word>             freely reduce a word\n"
          "  act <g|x> <word> -- <braid>     apply the braid action to a word\n"
          "  braid-id <braid>                is the braid trivial?\n"
          "  braid-eq <braid> -- <braid>     are the braids equal?\n"
          "  bracket <braid> -- <braid>      p[q] = p s(q) s1 s(p)^-1\n"
          "  shift <k> <braid>               raise every index by k\n"
          "  reverse <braid>                 reverse the letters\n"
          "  sigma-check <n> <braid>         check a sigma_n-positive word\n"
          "  lean <n> <word over x>          does the word lean right at n?\n"
          "  chi <term> [--base <braid>]     braid image of an LD term\n"
          "  ld-eq <term> -- <term>          equality in the free LD algebra\n"
          "  seq-act <terms> -- <braid>      braid action on (t1, ..., x, x, ...)\n"
          "  prop <suite> [--cases N] [--seed S]\n"
          "\n"
          "words: g1 -g2 x0 ...   braids: 1 -2 3 ...   terms: x | (T T)\n"
          "exit codes: 0 yes/ok, 1 no/failures, 2 malformed input,\n"
          "            3 word length cap, 4 unknown command or suite,\n"
          "            5 inverse step not applicable\n"
          "suites:";
    for (auto s : suite_names()) {
      out += ' ';
      out += s;
    }
    return out + "\n";
  }

  int run(Tokens args, std::ostream& out, std::ostream& err, Options const& options) {
    bool                     as_json = false;
    Context                  ctx;
    std::vector<std::string> rest;
    ctx.cfg.max_word_length = options.default_max_word_length;

    std::string command;
    auto        emit = [&](Outcome const& o, std::optional<std::string> error) {
      if (as_json) {
        json doc;
        doc["command"] = command;
        doc["inputs"]  = o.inputs;
        doc["result"]  = error ? json{{"error", *error}} : o.result;
        doc["exit"]    = o.exit;
        out << doc.dump() << '\n';
      } else if (error) {
        err << "error: " << *error << '\n';
      } else {
        out << o.text << '\n';
      }
      return o.exit;
    };

    try {
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--json") {
          as_json = true;
        } else if (args[i] == "--max-length") {
          if (i + 1 == args.size()) {
            throw ParseError("--max-length needs a value");
          }
          auto n = parse_count(args[++i], "length cap");
          if (n == 0) {
            throw ParseError("--max-length must be >= 1");
          }
          ctx.cfg.max_word_length = n;
        } else {
          rest.push_back(args[i]);
        }
      }
    } catch (Error const& e) {
      Outcome o;
      o.exit = kParseError;
      return emit(o, e.what());
    }

    if (rest.empty() || rest[0] == "help" || rest[0] == "--help" || rest[0] == "-h") {
      (rest.empty() ? err : out) << usage();
      return rest.empty() ? kUnknown : kYes;
    }
    command = rest[0];

    auto const& table = commands();
    auto        it    = table.find(command);
    if (it == table.end()) {
      Outcome o;
      o.exit = kUnknown;
      return emit(o, "unknown command '" + command + "'");
    }
    try {
      return emit(it->second(Tokens(rest).subspan(1), ctx), std::nullopt);
    } catch (Error const& e) {
      Outcome o;
      o.exit = exit_code_for(std::current_exception());
      return emit(o, e.what());
    }
  }

}  // namespace braidld::cli
