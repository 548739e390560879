#pragma once

// Regular languages over involutive doubled alphabets X^ = X u X~ and the
// closure operations used by the loop-problem identities.
//
// Automata are partial: a missing transition is an implicit dead state.
// Nfa admits epsilon transitions; Dfa has exactly one initial state (0).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reesloop/error.hpp"

namespace reesloop {

using Letter = std::uint32_t;
using State = std::uint32_t;
using Word = std::vector<Letter>;

inline constexpr Letter kEpsilon = std::numeric_limits<Letter>::max();
inline constexpr State kNoState = std::numeric_limits<State>::max();

/// A finite alphabet. A hat alphabet over base symbols x_0..x_{k-1} has the
/// 2k letters x_0, ~x_0, x_1, ~x_1, ... (letter 2i is x_i, letter 2i+1 its
/// bar); a plain alphabet has one letter per base symbol and no involution.
class Alphabet {
 public:
  static Alphabet hat(std::vector<std::string> base);
  static Alphabet plain(std::vector<std::string> names);

  std::size_t size() const noexcept { return involutive_ ? 2 * base_.size() : base_.size(); }
  std::size_t base_size() const noexcept { return base_.size(); }
  bool involutive() const noexcept { return involutive_; }
  const std::vector<std::string>& base() const noexcept { return base_; }

  Letter letter(std::size_t base_index, bool barred = false) const;
  std::size_t base_index(Letter a) const { return involutive_ ? a / 2 : a; }
  bool is_positive(Letter a) const noexcept { return !involutive_ || a % 2 == 0; }
  /// Throws NotInvolutive on a plain alphabet.
  Letter bar(Letter a) const;

  std::string name(Letter a) const;
  std::optional<Letter> find(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  Alphabet(std::vector<std::string> base, bool involutive);

  std::vector<std::string> base_;
  bool involutive_ = true;
};

/// w~ : reverse the word and bar every letter.
Word involution(const Alphabet& alphabet, const Word& w);

/// Letters joined by '.', "-" for the empty word.
std::string format_word(const Alphabet& alphabet, const Word& w);
/// Inverse of format_word. Throws Parse on unknown letters.
Word parse_word(const Alphabet& alphabet, std::string_view text);

struct Transition {
  State from;
  Letter letter;  // kEpsilon for an epsilon move
  State to;
  auto operator<=>(const Transition&) const = default;
};

class Nfa {
 public:
  explicit Nfa(Alphabet alphabet, std::size_t states = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t states() const noexcept { return initial_.size(); }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

  State add_state();
  void add_transition(State from, Letter letter, State to);
  void set_initial(State q, bool value = true) { initial_.at(q) = value; }
  void set_final(State q, bool value = true) { final_.at(q) = value; }
  bool is_initial(State q) const { return initial_.at(q) != 0; }
  bool is_final(State q) const { return final_.at(q) != 0; }
  std::vector<State> initial_states() const;
  std::vector<State> final_states() const;
  bool has_epsilon() const;

 private:
  Alphabet alphabet_;
  std::vector<char> initial_;
  std::vector<char> final_;
  std::vector<Transition> transitions_;
};

class Dfa {
 public:
  /// `states` >= 1; state 0 is initial.
  Dfa(Alphabet alphabet, std::size_t states);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t states() const noexcept { return final_.size(); }
  State initial() const noexcept { return 0; }
  State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
  void set_next(State q, Letter a, State to) { delta_.at(q * alphabet_.size() + a) = to; }
  bool is_final(State q) const { return final_.at(q) != 0; }
  void set_final(State q, bool value = true) { final_.at(q) = value; }
  bool minimal() const noexcept { return minimal_; }
  std::size_t transition_count() const;

  bool operator==(const Dfa&) const = default;

 private:
  friend Dfa minimize(const Dfa&);

  Alphabet alphabet_;
  std::vector<State> delta_;
  std::vector<char> final_;
  bool minimal_ = false;
};

// Basic languages.
Nfa empty_language(const Alphabet& alphabet);
Nfa epsilon_language(const Alphabet& alphabet);
Nfa word_language(const Alphabet& alphabet, const Word& w);
Nfa finite_language(const Alphabet& alphabet, std::span<const Word> words);
/// All words over `letters` (a subset of the alphabet).
Nfa words_over(const Alphabet& alphabet, std::span<const Letter> letters);
Nfa universal_language(const Alphabet& alphabet);

/// Subset construction (epsilon moves folded into closures).
Dfa determinize(const Nfa& a);
/// Canonical minimal partial DFA: trimmed, Moore partition refinement,
/// states renumbered breadth-first in letter order.
Dfa minimize(const Dfa& a);
Nfa to_nfa(const Dfa& a);
/// to_nfa(minimize(determinize(a))).
Nfa simplify(const Nfa& a);

/// Throws AlphabetMismatch.
bool equivalent(const Nfa& a, const Nfa& b);
/// Shortest (then letter-order least) word accepted by exactly one of a, b.
std::optional<Word> separating_word(const Dfa& a, const Dfa& b);

bool member(const Nfa& a, const Word& w);
bool member(const Dfa& a, const Word& w);

Nfa union_of(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
Nfa star(const Nfa& a);
Nfa plus(const Nfa& a);
Nfa intersect(const Nfa& a, const Nfa& b);

/// L R^-1 = {w : wr in L for some r in R}.
Nfa right_quotient(const Nfa& l, const Nfa& r);
/// R^-1 L = {w : rw in L for some r in R}.
Nfa left_quotient(const Nfa& r, const Nfa& l);

/// {w~ : w in L}. Throws NotInvolutive.
Nfa involution_image(const Nfa& a);

Nfa remove_epsilon(const Nfa& a);
/// Keeps the states that are both reachable and co-accessible.
Nfa trim(const Nfa& a);
Nfa prefix_closure(const Nfa& a);
Nfa suffix_closure(const Nfa& a);
Nfa factor_closure(const Nfa& a);

/// Re-expresses `a` over `target`: base symbol i of a's alphabet becomes base
/// symbol base_map[i] of `target` (bars follow).
Nfa relabel(const Nfa& a, const Alphabet& target, std::span<const std::size_t> base_map);

/// Accepted words of length <= max_len in length-lexicographic order.
std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len);
std::vector<Word> enumerate_words(const Dfa& a, std::size_t max_len);

}  // namespace reesloop
