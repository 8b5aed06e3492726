#include "braidld/ld_term.hpp"

#include <algorithm>
#include <ostream>

#include "braidld/error.hpp"
#include "burau.hpp"
#include "text.hpp"

namespace braidld {

  struct LdTerm::Node {
    LdTerm      left;
    LdTerm      right;
    std::size_t size;
    std::size_t depth;
  };

  LdTerm::LdTerm() = default;

  LdTerm LdTerm::apply(LdTerm left, LdTerm right) {
    std::size_t size  = left.size() + right.size();
    std::size_t depth = 1 + std::max(left.depth(), right.depth());
    return LdTerm(std::make_shared<Node const>(
        Node{std::move(left), std::move(right), size, depth}));
  }

  LdTerm const& LdTerm::left() const {
    if (is_leaf()) {
      throw InvalidArgument("the generator x has no left factor");
    }
    return _node->left;
  }

  LdTerm const& LdTerm::right() const {
    if (is_leaf()) {
      throw InvalidArgument("the generator x has no right factor");
    }
    return _node->right;
  }

  std::size_t LdTerm::size() const noexcept {
    return is_leaf() ? 1 : _node->size;
  }

  std::size_t LdTerm::depth() const noexcept {
    return is_leaf() ? 0 : _node->depth;
  }

  bool operator==(LdTerm const& a, LdTerm const& b) noexcept {
    if (a._node == b._node) {
      return true;
    }
    if (a.is_leaf() || b.is_leaf() || a.size() != b.size()) {
      return false;
    }
    return a._node->left == b._node->left && a._node->right == b._node->right;
  }

  ////////////////////////////////////////////////////////////////////////
  // LdSequence
  ////////////////////////////////////////////////////////////////////////

  LdSequence::LdSequence(std::vector<LdTerm> terms, LdTerm tail)
      : _terms(std::move(terms)), _tail(std::move(tail)) {}

  LdTerm const& LdSequence::at(std::size_t position) const {
    if (position == 0) {
      throw PositionOutOfRange("sequence positions start at 1");
    }
    return position <= _terms.size() ? _terms[position - 1] : _tail;
  }

  ////////////////////////////////////////////////////////////////////////
  // Braid images
  ////////////////////////////////////////////////////////////////////////

  BraidWord chi(LdTerm const& t, BraidWord const& base) {
    if (t.is_leaf()) {
      return base;
    }
    return bracket(chi(t.left(), base), chi(t.right(), base));
  }

  bool ld_equal(LdTerm const&       s,
                LdTerm const&       t,
                BraidWord const&    base,
                ActionConfig const& cfg) {
    if (s == t) {
      return true;
    }
    auto cs = chi(s, base);
    auto ct = chi(t, base);
    // chi words grow exponentially with term depth and their free-group
    // images faster still; a matrix certificate settles most inequalities.
    if (detail::burau_separates(cs, ct)) {
      return false;
    }
    return braid_equal(cs, ct, cfg);
  }

  LdTerm left_prefix(LdTerm const& p, std::span<LdTerm const> qs) {
    if (qs.empty()) {
      throw InvalidArgument("left_prefix needs at least one right factor");
    }
    LdTerm out = p;
    for (auto const& q : qs) {
      out = out * q;
    }
    return out;
  }

  LdSequence sequence_act(LdSequence const&   seq,
                          BraidWord const&    p,
                          ActionConfig const& cfg) {
    LdSequence out = seq;
    auto&      ts  = out._terms;
    for (auto const& s : p.letters()) {
      std::size_t const i = s.index;  // 1-based, touches i and i+1
      if (ts.size() < i + 1) {
        ts.resize(i + 1, out._tail);
      }
      LdTerm& c = ts[i - 1];
      LdTerm& d = ts[i];
      if (s.sign > 0) {
        LdTerm next = c * d;
        d           = c;
        c           = std::move(next);
      } else {
        if (c.is_leaf() || !ld_equal(c.left(), d, {}, cfg)) {
          throw InverseNotApplicable(
              "sigma_" + std::to_string(i) + "^-1 does not apply to ("
              + to_string(c) + ", " + to_string(d) + ")");
        }
        LdTerm next = c.right();
        c           = d;
        d           = std::move(next);
      }
    }
    return out;
  }

  bool irreflexivity_witness(LdTerm const&           p,
                             std::span<LdTerm const> qs,
                             ActionConfig const&     cfg) {
    return ld_equal(p, left_prefix(p, qs), {}, cfg);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void render(LdTerm const& t, std::string& out) {
      if (t.is_leaf()) {
        out += 'x';
        return;
      }
      out += '(';
      render(t.left(), out);
      out += ' ';
      render(t.right(), out);
      out += ')';
    }

    class TermParser {
     public:
      explicit TermParser(std::string_view text) : _text(text) {}

      bool at_end() {
        skip();
        return _pos == _text.size();
      }

      LdTerm term() {
        skip();
        if (_pos == _text.size()) {
          throw ParseError("unexpected end of term");
        }
        char c = _text[_pos];
        if (c == 'x') {
          ++_pos;
          return LdTerm::leaf();
        }
        if (c != '(') {
          throw ParseError(std::string("unexpected character '") + c
                           + "' at offset " + std::to_string(_pos));
        }
        ++_pos;
        LdTerm left  = term();
        LdTerm right = term();
        skip();
        if (_pos == _text.size() || _text[_pos] != ')') {
          throw ParseError("expected ')' at offset " + std::to_string(_pos));
        }
        ++_pos;
        return left * right;
      }

     private:
      void skip() {
        while (_pos < _text.size() && detail::is_space(_text[_pos])) {
          ++_pos;
        }
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  std::string to_string(LdTerm const& t) {
    std::string out;
    render(t, out);
    return out;
  }

  std::ostream& operator<<(std::ostream& os, LdTerm const& t) {
    return os << to_string(t);
  }

  LdTerm parse_term(std::string_view text) {
    TermParser parser(text);
    LdTerm     t = parser.term();
    if (!parser.at_end()) {
      throw ParseError("trailing input after term");
    }
    return t;
  }

  std::vector<LdTerm> parse_term_list(std::string_view text) {
    TermParser          parser(text);
    std::vector<LdTerm> out;
    while (!parser.at_end()) {
      out.push_back(parser.term());
    }
    return out;
  }

}  // namespace braidld
