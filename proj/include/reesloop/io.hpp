#pragma once

// Plain-text formats for semigroup tables, automata, transducers and Rees
// matrix specifications, plus DOT rendering of automata. Blank lines and
// lines starting with '#' are ignored; parse errors carry 1-based line numbers.

#include <filesystem>
#include <string>
#include <string_view>

#include "reesloop/language.hpp"
#include "reesloop/semigroup.hpp"
#include "reesloop/transduce.hpp"

namespace reesloop {

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// n
// label_1 ... label_n
// n rows of n labels
// [zero <label>]
// [identity <label>]
FiniteSemigroup parse_semigroup(std::string_view text);
std::string format_semigroup(const FiniteSemigroup& s);

// [alphabet [plain] sym...]   (inferred from the transitions when absent)
// states n
// initial q...
// final q...
// p a q                       (a is a symbol, ~symbol or -)
Nfa parse_automaton(std::string_view text);
std::string format_automaton(const Nfa& a);
std::string format_automaton(const Dfa& a);

// states n
// input sym...
// output sym...
// initial q...
// final q...
// p u / v q                   (words as in format_word)
Transducer parse_transducer(std::string_view text);
std::string format_transducer(const Transducer& t);

struct ReesSpec {
  std::string base_path;  // as written in the file
  FiniteSemigroup base;
  std::size_t i_count = 1;
  std::size_t j_count = 1;
  bool with_zero = false;
  SandwichMatrix sandwich{1, 1};
};

// base <path>                 (relative paths resolve against `dir`)
// I n
// J n
// zero yes|no
// matrix
// |J| rows of |I| labels, 0 for ZERO
ReesSpec parse_rees_spec(std::string_view text, const std::filesystem::path& dir);
std::string format_rees_spec(const ReesSpec& spec);

/// Positive letters solid, barred letters dashed, epsilon dotted; final states double-circled.
std::string to_dot(const Nfa& a);

}  // namespace reesloop
