#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "reesloop/language.hpp"
#include "reesloop/semigroup.hpp"

namespace testutil {

using namespace reesloop;

using WordSet = std::set<Word>;

inline Alphabet hat_x() { return Alphabet::hat({"x"}); }

inline Word w(const Alphabet& a, const std::string& text) { return parse_word(a, text); }

inline Nfa lang(const Alphabet& a, const std::vector<std::string>& words) {
  std::vector<Word> ws;
  for (const auto& t : words) ws.push_back(parse_word(a, t));
  return finite_language(a, ws);
}

inline WordSet words(const Nfa& a, std::size_t n) {
  const auto v = enumerate_words(a, n);
  return {v.begin(), v.end()};
}

inline WordSet words(const Dfa& a, std::size_t n) {
  const auto v = enumerate_words(a, n);
  return {v.begin(), v.end()};
}

// Every word over `a` of length <= n.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t start = 0, len = 0; len < n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = start; k < end; ++k) {
      for (Letter l = 0; l < a.size(); ++l) {
        Word x = out[k];
        x.push_back(l);
        out.push_back(std::move(x));
      }
    }
    start = end;
  }
  return out;
}

inline WordSet truncate(const WordSet& s, std::size_t n) {
  WordSet out;
  for (const auto& x : s) {
    if (x.size() <= n) out.insert(x);
  }
  return out;
}

// Random NFA with ε-moves over `a`.
inline Nfa random_nfa(const Alphabet& a, std::mt19937_64& rng, std::size_t max_states = 5) {
  std::uniform_int_distribution<std::size_t> nstates(1, max_states);
  const std::size_t n = nstates(rng);
  Nfa out(a, n);
  std::bernoulli_distribution coin(0.4);
  std::bernoulli_distribution edge(0.22);
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      for (Letter l = 0; l < a.size(); ++l) {
        if (edge(rng)) out.add_transition(p, l, q);
      }
      if (p != q && std::bernoulli_distribution(0.05)(rng)) out.add_transition(p, kEpsilon, q);
    }
    if (coin(rng)) out.set_final(p);
  }
  if (out.final_states().empty()) out.set_final(static_cast<State>(n - 1));
  out.set_initial(0);
  if (n > 1 && coin(rng)) out.set_initial(static_cast<State>(n - 1));
  return out;
}

// Brute-force count of associative tables on n labelled elements.
inline std::size_t brute_force_semigroup_count(std::size_t n) {
  const std::size_t cells = n * n;
  std::vector<std::size_t> t(cells, 0);
  std::size_t count = 0;
  while (true) {
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a) {
      for (std::size_t b = 0; b < n && assoc; ++b) {
        for (std::size_t c = 0; c < n && assoc; ++c) {
          assoc = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
        }
      }
    }
    count += assoc ? 1 : 0;
    std::size_t k = 0;
    while (k < cells && ++t[k] == n) t[k++] = 0;
    if (k == cells) break;
  }
  return count;
}

}  // namespace testutil
