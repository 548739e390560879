#pragma once

// Finite-state transducers between hat alphabets, their action on regular
// languages, and the transducer relating the loop problem of S to that of a
// Rees matrix semigroup M(S; I, J; P).

#include <cstdint>
#include <vector>

#include "reesloop/language.hpp"
#include "reesloop/semigroup.hpp"

namespace reesloop {

struct TransducerEdge {
  State from;
  Word input;
  Word output;
  State to;
  bool operator==(const TransducerEdge&) const = default;
};

class Transducer {
 public:
  Transducer(Alphabet input, Alphabet output, std::size_t states = 0);

  const Alphabet& input() const noexcept { return input_; }
  const Alphabet& output() const noexcept { return output_; }
  std::size_t states() const noexcept { return initial_.size(); }
  const std::vector<TransducerEdge>& edges() const noexcept { return edges_; }

  State add_state();
  void add_edge(State from, Word input, Word output, State to);
  void set_initial(State q, bool value = true) { initial_.at(q) = value; }
  void set_final(State q, bool value = true) { final_.at(q) = value; }
  bool is_initial(State q) const { return initial_.at(q) != 0; }
  bool is_final(State q) const { return final_.at(q) != 0; }
  std::vector<State> initial_states() const;
  std::vector<State> final_states() const;

  bool operator==(const Transducer&) const = default;

 private:
  Alphabet input_;
  Alphabet output_;
  std::vector<char> initial_;
  std::vector<char> final_;
  std::vector<TransducerEdge> edges_;
};

/// Splits every edge into a chain of steps carrying at most one input and at
/// most one output letter each. Edges that already qualify are kept as they are.
Transducer normalize(const Transducer& t);

/// Some initial-to-final path spells (u, v).
bool accepts_pair(const Transducer& t, const Word& u, const Word& v);

/// {v : accepts_pair(t, u, v) for some u in L}. Throws AlphabetMismatch.
Nfa apply(const Transducer& t, const Nfa& l);

/// For each element s of the target, the shortlex-least nonempty word over
/// the positive letters of hat(symbols) with value s.
std::vector<Word> choose_words(const GeneratorMap& sigma);

/// For each element s, a word drawn uniformly among those of value s with
/// length at most (shortest length + 2).
std::vector<Word> choose_words_randomized(const GeneratorMap& sigma, std::uint64_t seed);

/// States: (i, j) as i * |J| + j, then A = |I||J| (initial), Z = |I||J| + 1 (final).
/// `words` are the per-element representatives for sigma. Throws HasZero.
Transducer build_rees_transducer(const GeneratorMap& sigma, const ReesStructure& rees,
                                 const GeneratorMap& tau, const std::vector<Word>& words);
Transducer build_rees_transducer(const GeneratorMap& sigma, const ReesStructure& rees,
                                 const GeneratorMap& tau);

}  // namespace reesloop
