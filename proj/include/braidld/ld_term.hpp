#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidld/action.hpp"
#include "braidld/braid.hpp"

namespace braidld {

  // Element of the free left-distributive algebra on one generator x, as an
  // immutable binary tree: either the leaf x or an application (P Q).
  // Copies share structure.
  class LdTerm {
   public:
    // The generator x.
    LdTerm();

    static LdTerm leaf() {
      return LdTerm();
    }
    static LdTerm apply(LdTerm left, LdTerm right);

    bool is_leaf() const noexcept {
      return _node == nullptr;
    }

    // Precondition: !is_leaf().
    LdTerm const& left() const;
    LdTerm const& right() const;

    // Number of leaves.
    std::size_t size() const noexcept;
    std::size_t depth() const noexcept;

    // Structural (tree) equality; LD equality is ld_equal().
    friend bool operator==(LdTerm const& a, LdTerm const& b) noexcept;

   private:
    struct Node;
    explicit LdTerm(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  // (P Q) shorthand.
  inline LdTerm operator*(LdTerm const& p, LdTerm const& q) {
    return LdTerm::apply(p, q);
  }

  // The eventually constant sequence (t_1, ..., t_N, tail, tail, ...).
  class LdSequence {
   public:
    explicit LdSequence(std::vector<LdTerm> terms, LdTerm tail = LdTerm());

    std::span<LdTerm const> terms() const noexcept {
      return _terms;
    }
    LdTerm const& tail() const noexcept {
      return _tail;
    }

    // 1-based entry, drawing from the tail past the explicit list.
    LdTerm const& at(std::size_t position) const;

   private:
    friend LdSequence sequence_act(LdSequence const&, BraidWord const&,
                                   ActionConfig const&);

    std::vector<LdTerm> _terms;
    LdTerm              _tail;
  };

  // chi^r: x -> r, (P Q) -> chi(P)[chi(Q)].
  BraidWord chi(LdTerm const& t, BraidWord const& base = {});

  // Equality in the free LD algebra, decided by comparing chi images as
  // braids.
  bool ld_equal(LdTerm const&       s,
                LdTerm const&       t,
                BraidWord const&    base = {},
                ActionConfig const& cfg  = {});

  // ((P Q_1) ...) Q_k; throws InvalidArgument on an empty list.
  LdTerm left_prefix(LdTerm const& p, std::span<LdTerm const> qs);

  // Partial braid action on term sequences, letters applied left to right:
  //   s_i      : (b_i, b_{i+1}) -> (b_i b_{i+1}, b_i)
  //   s_i^{-1} : (c, d) -> (d, c.right), provided c = (c.left c.right) with
  //              c.left LD-equal to d; otherwise InverseNotApplicable.
  LdSequence sequence_act(LdSequence const&   seq,
                          BraidWord const&    p,
                          ActionConfig const& cfg = {});

  // Whether P equals ((P Q_1) ...) Q_k in the free LD algebra. Irreflexivity
  // of the left-division order says this is always false.
  bool irreflexivity_witness(LdTerm const&           p,
                             std::span<LdTerm const> qs,
                             ActionConfig const&     cfg = {});

  std::string   to_string(LdTerm const& t);
  std::ostream& operator<<(std::ostream& os, LdTerm const& t);

  // Grammar: T ::= 'x' | '(' T T ')', whitespace-insensitive.
  LdTerm              parse_term(std::string_view text);
  std::vector<LdTerm> parse_term_list(std::string_view text);

}  // namespace braidld
