#include "reesloop/transduce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace reesloop {

Transducer::Transducer(Alphabet input, Alphabet output, std::size_t states)
    : input_(std::move(input)), output_(std::move(output)), initial_(states, 0),
      final_(states, 0) {}

State Transducer::add_state() {
  initial_.push_back(0);
  final_.push_back(0);
  return static_cast<State>(initial_.size() - 1);
}

void Transducer::add_edge(State from, Word input, Word output, State to) {
  if (from >= states() || to >= states()) throw Error(ErrorCode::IndexOutOfRange, "state");
  for (Letter a : input) {
    if (a >= input_.size()) throw Error(ErrorCode::IndexOutOfRange, "input letter");
  }
  for (Letter b : output) {
    if (b >= output_.size()) throw Error(ErrorCode::IndexOutOfRange, "output letter");
  }
  edges_.push_back({from, std::move(input), std::move(output), to});
}

std::vector<State> Transducer::initial_states() const {
  std::vector<State> out;
  for (State q = 0; q < states(); ++q) {
    if (initial_[q]) out.push_back(q);
  }
  return out;
}

std::vector<State> Transducer::final_states() const {
  std::vector<State> out;
  for (State q = 0; q < states(); ++q) {
    if (final_[q]) out.push_back(q);
  }
  return out;
}

Transducer normalize(const Transducer& t) {
  Transducer out(t.input(), t.output(), t.states());
  for (State q = 0; q < t.states(); ++q) {
    out.set_initial(q, t.is_initial(q));
    out.set_final(q, t.is_final(q));
  }
  for (const auto& e : t.edges()) {
    const std::size_t steps = std::max<std::size_t>({e.input.size(), e.output.size(), 1});
    State cur = e.from;
    for (std::size_t s = 0; s < steps; ++s) {
      const State nxt = s + 1 == steps ? e.to : out.add_state();
      Word in, outw;
      if (s < e.input.size()) in.push_back(e.input[s]);
      if (s < e.output.size()) outw.push_back(e.output[s]);
      out.add_edge(cur, std::move(in), std::move(outw), nxt);
      cur = nxt;
    }
  }
  return out;
}

bool accepts_pair(const Transducer& t, const Word& u, const Word& v) {
  const Transducer n = normalize(t);
  std::vector<std::vector<const TransducerEdge*>> out(n.states());
  for (const auto& e : n.edges()) out[e.from].push_back(&e);
  using Config = std::tuple<State, std::size_t, std::size_t>;
  std::set<Config> seen;
  std::vector<Config> stack;
  for (State q : n.initial_states()) {
    if (seen.insert({q, 0, 0}).second) stack.emplace_back(q, 0, 0);
  }
  while (!stack.empty()) {
    const auto [q, i, j] = stack.back();
    stack.pop_back();
    if (i == u.size() && j == v.size() && n.is_final(q)) return true;
    for (const auto* e : out[q]) {
      std::size_t i2 = i, j2 = j;
      if (!e->input.empty()) {
        if (i == u.size() || u[i] != e->input[0]) continue;
        ++i2;
      }
      if (!e->output.empty()) {
        if (j == v.size() || v[j] != e->output[0]) continue;
        ++j2;
      }
      if (seen.insert({e->to, i2, j2}).second) stack.emplace_back(e->to, i2, j2);
    }
  }
  return false;
}

Nfa apply(const Transducer& t, const Nfa& l) {
  if (!(l.alphabet() == t.input())) {
    throw Error(ErrorCode::AlphabetMismatch, "language is not over the transducer input alphabet");
  }
  const Transducer n = normalize(t);
  const Nfa el = remove_epsilon(l);
  std::vector<std::vector<std::pair<Letter, State>>> lmoves(el.states());
  for (const auto& tr : el.transitions()) lmoves[tr.from].emplace_back(tr.letter, tr.to);
  std::vector<std::vector<const TransducerEdge*>> tmoves(n.states());
  for (const auto& e : n.edges()) tmoves[e.from].push_back(&e);

  Nfa out(t.output());
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto visit = [&](State p, State q) {
    auto [it, inserted] = index.try_emplace({p, q}, kNoState);
    if (inserted) {
      it->second = out.add_state();
      if (el.is_final(p) && n.is_final(q)) out.set_final(it->second);
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  for (State p : el.initial_states()) {
    for (State q : n.initial_states()) out.set_initial(visit(p, q));
  }
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    const State from = index.at({p, q});
    for (const auto* e : tmoves[q]) {
      const Letter emitted = e->output.empty() ? kEpsilon : e->output[0];
      if (e->input.empty()) {
        out.add_transition(from, emitted, visit(p, e->to));
        continue;
      }
      for (const auto& [a, p2] : lmoves[p]) {
        if (a == e->input[0]) out.add_transition(from, emitted, visit(p2, e->to));
      }
    }
  }
  return out;
}

std::vector<Word> choose_words(const GeneratorMap& sigma) {
  const FiniteSemigroup& s = sigma.target();
  const Alphabet alpha = Alphabet::hat(sigma.symbols());
  std::vector<Word> words(s.order());
  std::vector<char> done(s.order(), 0);
  std::deque<Elem> queue;
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    const Elem e = sigma.image(x);
    if (!done[e]) {
      done[e] = 1;
      words[e] = {alpha.letter(x)};
      queue.push_back(e);
    }
  }
  while (!queue.empty()) {
    const Elem e = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < sigma.size(); ++x) {
      const Elem f = s.mul(e, sigma.image(x));
      if (!done[f]) {
        done[f] = 1;
        words[f] = words[e];
        words[f].push_back(alpha.letter(x));
        queue.push_back(f);
      }
    }
  }
  return words;
}

std::vector<Word> choose_words_randomized(const GeneratorMap& sigma, std::uint64_t seed) {
  const FiniteSemigroup& s = sigma.target();
  const std::size_t n = s.order();
  const Alphabet alpha = Alphabet::hat(sigma.symbols());
  std::size_t max_len = 0;
  for (const auto& w : choose_words(sigma)) max_len = std::max(max_len, w.size());
  max_len += 2;

  // count[len][e]: number of words of length len with value e.
  std::vector<std::vector<double>> count(max_len + 1, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < sigma.size(); ++x) count[1][sigma.image(x)] += 1.0;
  for (std::size_t len = 2; len <= max_len; ++len) {
    for (Elem e = 0; e < n; ++e) {
      if (count[len - 1][e] == 0.0) continue;
      for (std::size_t x = 0; x < sigma.size(); ++x) {
        count[len][s.mul(e, sigma.image(x))] += count[len - 1][e];
      }
    }
  }
  const auto shortest = choose_words(sigma);
  std::mt19937_64 rng(seed);
  std::vector<Word> words(n);
  for (Elem target = 0; target < n; ++target) {
    const std::size_t bound = shortest[target].size() + 2;
    std::vector<double> weights(bound + 1, 0.0);
    for (std::size_t len = 1; len <= bound; ++len) weights[len] = count[len][target];
    std::size_t len = std::discrete_distribution<std::size_t>(weights.begin(), weights.end())(rng);
    // Sample the word backwards, one last letter at a time.
    Word w(len);
    Elem cur = target;
    for (; len > 1; --len) {
      std::vector<std::pair<Elem, std::size_t>> options;
      std::vector<double> wts;
      for (Elem e = 0; e < n; ++e) {
        for (std::size_t x = 0; x < sigma.size(); ++x) {
          if (count[len - 1][e] > 0.0 && s.mul(e, sigma.image(x)) == cur) {
            options.emplace_back(e, x);
            wts.push_back(count[len - 1][e]);
          }
        }
      }
      const auto& [e, x] = options[std::discrete_distribution<std::size_t>(wts.begin(), wts.end())(rng)];
      w[len - 1] = alpha.letter(x);
      cur = e;
    }
    std::vector<std::size_t> firsts;
    for (std::size_t x = 0; x < sigma.size(); ++x) {
      if (sigma.image(x) == cur) firsts.push_back(x);
    }
    w[0] = alpha.letter(firsts[std::uniform_int_distribution<std::size_t>(0, firsts.size() - 1)(rng)]);
    words[target] = std::move(w);
  }
  return words;
}

Transducer build_rees_transducer(const GeneratorMap& sigma, const ReesStructure& rees,
                                 const GeneratorMap& tau, const std::vector<Word>& words) {
  if (rees.with_zero()) throw Error(ErrorCode::HasZero, "Rees structure carries a zero");
  if (rees.sandwich().has_zero_entry()) throw Error(ErrorCode::ZeroEntry, "sandwich has ZERO");
  if (!(rees.base() == sigma.target()) || tau.target().order() != rees.order() ||
      words.size() != sigma.target().order()) {
    throw Error(ErrorCode::AlphabetMismatch, "generator maps do not match the Rees structure");
  }
  const Alphabet in = Alphabet::hat(sigma.symbols());
  const Alphabet outa = Alphabet::hat(tau.symbols());
  const std::size_t ni = rees.i_count(), nj = rees.j_count();
  const State a_state = static_cast<State>(ni * nj);
  const State z_state = a_state + 1;
  Transducer t(in, outa, ni * nj + 2);
  t.set_initial(a_state);
  t.set_final(z_state);
  auto vertex = [nj](std::size_t i, std::size_t j) { return static_cast<State>(i * nj + j); };
  auto cat = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto w_ji = [&](std::size_t j, std::size_t i) { return words[*rees.sandwich().at(j, i)]; };

  for (std::size_t y = 0; y < tau.size(); ++y) {
    const auto triple = rees.decode(tau.image(y));
    const auto [iy, gy, jy] = *triple;
    const Word& wy = words[gy];
    const Word wy_bar = involution(in, wy);
    const Word yy{outa.letter(y)};
    const Word yy_bar{outa.letter(y, true)};
    t.add_edge(a_state, wy, yy, vertex(iy, jy));
    t.add_edge(vertex(iy, jy), wy_bar, yy_bar, z_state);
    for (std::size_t k = 0; k < nj; ++k) {
      for (std::size_t i = 0; i < ni; ++i) {
        t.add_edge(vertex(i, k), cat(w_ji(k, iy), wy), yy, vertex(i, jy));
      }
    }
    for (std::size_t j = 0; j < nj; ++j) {
      for (std::size_t i = 0; i < ni; ++i) {
        t.add_edge(vertex(i, jy), cat(wy_bar, involution(in, w_ji(j, iy))), yy_bar, vertex(i, j));
      }
    }
  }
  return t;
}

Transducer build_rees_transducer(const GeneratorMap& sigma, const ReesStructure& rees,
                                 const GeneratorMap& tau) {
  return build_rees_transducer(sigma, rees, tau, choose_words(sigma));
}

}  // namespace reesloop
