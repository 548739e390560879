#include "reesloop/language.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace reesloop {

Alphabet::Alphabet(std::vector<std::string> base, bool involutive)
    : base_(std::move(base)), involutive_(involutive) {
  std::set<std::string> seen;
  for (const auto& s : base_) {
    if (s.empty() || s == "-" || s.front() == '~' ||
        s.find_first_of(" \t\n./") != std::string::npos) {
      throw Error(ErrorCode::Usage, "invalid symbol name '" + s + "'");
    }
    if (!seen.insert(s).second) throw Error(ErrorCode::Usage, "duplicate symbol " + s);
  }
}

Alphabet Alphabet::hat(std::vector<std::string> base) { return Alphabet(std::move(base), true); }

Alphabet Alphabet::plain(std::vector<std::string> names) {
  return Alphabet(std::move(names), false);
}

Letter Alphabet::letter(std::size_t base_index, bool barred) const {
  if (base_index >= base_.size()) throw Error(ErrorCode::IndexOutOfRange, "symbol index");
  if (!involutive_) {
    if (barred) throw Error(ErrorCode::NotInvolutive, "plain alphabet has no barred letters");
    return static_cast<Letter>(base_index);
  }
  return static_cast<Letter>(2 * base_index + (barred ? 1 : 0));
}

Letter Alphabet::bar(Letter a) const {
  if (!involutive_) throw Error(ErrorCode::NotInvolutive, "alphabet has no involution");
  return a ^ 1u;
}

std::string Alphabet::name(Letter a) const {
  if (a == kEpsilon) return "-";
  if (a >= size()) throw Error(ErrorCode::IndexOutOfRange, "letter");
  return is_positive(a) ? base_[base_index(a)] : "~" + base_[base_index(a)];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  const bool barred = !name.empty() && name.front() == '~';
  if (barred) {
    if (!involutive_) return std::nullopt;
    name.remove_prefix(1);
  }
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (base_[i] == name) return letter(i, barred);
  }
  return std::nullopt;
}

Word involution(const Alphabet& alphabet, const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& a : out) a = alphabet.bar(a);
  return out;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '.';
    out += alphabet.name(w[k]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (text == "-") return w;
  while (true) {
    const auto dot = text.find('.');
    const auto token = text.substr(0, dot);
    const auto a = alphabet.find(token);
    if (!a) throw Error(ErrorCode::Parse, "unknown letter '" + std::string(token) + "'");
    w.push_back(*a);
    if (dot == std::string_view::npos) break;
    text.remove_prefix(dot + 1);
  }
  return w;
}

Nfa::Nfa(Alphabet alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)), initial_(states, 0), final_(states, 0) {}

State Nfa::add_state() {
  initial_.push_back(0);
  final_.push_back(0);
  return static_cast<State>(initial_.size() - 1);
}

void Nfa::add_transition(State from, Letter letter, State to) {
  if (from >= states() || to >= states()) throw Error(ErrorCode::IndexOutOfRange, "state");
  if (letter != kEpsilon && letter >= alphabet_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "letter");
  }
  transitions_.push_back({from, letter, to});
}

std::vector<State> Nfa::initial_states() const {
  std::vector<State> out;
  for (State q = 0; q < states(); ++q) {
    if (initial_[q]) out.push_back(q);
  }
  return out;
}

std::vector<State> Nfa::final_states() const {
  std::vector<State> out;
  for (State q = 0; q < states(); ++q) {
    if (final_[q]) out.push_back(q);
  }
  return out;
}

bool Nfa::has_epsilon() const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [](const Transition& t) { return t.letter == kEpsilon; });
}

Dfa::Dfa(Alphabet alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)), delta_(states * alphabet_.size(), kNoState),
      final_(states, 0) {
  if (states == 0) throw Error(ErrorCode::IndexOutOfRange, "a DFA needs an initial state");
}

std::size_t Dfa::transition_count() const {
  return static_cast<std::size_t>(
      std::count_if(delta_.begin(), delta_.end(), [](State q) { return q != kNoState; }));
}

namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, "operands are over different alphabets");
  }
}

// Per-state outgoing moves, epsilon moves separated.
struct Adjacency {
  std::vector<std::vector<std::pair<Letter, State>>> moves;
  std::vector<std::vector<State>> epsilon;

  explicit Adjacency(const Nfa& a) : moves(a.states()), epsilon(a.states()) {
    for (const auto& t : a.transitions()) {
      if (t.letter == kEpsilon) epsilon[t.from].push_back(t.to);
      else moves[t.from].emplace_back(t.letter, t.to);
    }
  }

  void close(std::vector<State>& set) const {
    std::vector<char> in(epsilon.size(), 0);
    for (State q : set) in[q] = 1;
    std::vector<State> stack(set.begin(), set.end());
    while (!stack.empty()) {
      const State q = stack.back();
      stack.pop_back();
      for (State r : epsilon[q]) {
        if (!in[r]) {
          in[r] = 1;
          set.push_back(r);
          stack.push_back(r);
        }
      }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
};

std::vector<char> reachable_from(const Nfa& a, const std::vector<State>& start, bool backwards) {
  std::vector<std::vector<State>> next(a.states());
  for (const auto& t : a.transitions()) {
    if (backwards) next[t.to].push_back(t.from);
    else next[t.from].push_back(t.to);
  }
  std::vector<char> seen(a.states(), 0);
  std::vector<State> stack;
  for (State q : start) {
    if (!seen[q]) {
      seen[q] = 1;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State r : next[q]) {
      if (!seen[r]) {
        seen[r] = 1;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

// Copies `a` into `out` with states shifted by the current size of `out`.
State append(Nfa& out, const Nfa& a) {
  const State offset = static_cast<State>(out.states());
  for (State q = 0; q < a.states(); ++q) out.add_state();
  for (const auto& t : a.transitions()) out.add_transition(t.from + offset, t.letter, t.to + offset);
  return offset;
}

}  // namespace

Nfa empty_language(const Alphabet& alphabet) { return Nfa(alphabet, 0); }

Nfa epsilon_language(const Alphabet& alphabet) {
  Nfa a(alphabet, 1);
  a.set_initial(0);
  a.set_final(0);
  return a;
}

Nfa word_language(const Alphabet& alphabet, const Word& w) {
  Nfa a(alphabet, w.size() + 1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    a.add_transition(static_cast<State>(k), w[k], static_cast<State>(k + 1));
  }
  a.set_initial(0);
  a.set_final(static_cast<State>(w.size()));
  return a;
}

Nfa finite_language(const Alphabet& alphabet, std::span<const Word> words) {
  // A trie.
  Nfa a(alphabet, 1);
  a.set_initial(0);
  std::map<std::pair<State, Letter>, State> child;
  for (const auto& w : words) {
    State q = 0;
    for (Letter x : w) {
      auto [it, inserted] = child.try_emplace({q, x}, kNoState);
      if (inserted) {
        it->second = a.add_state();
        a.add_transition(q, x, it->second);
      }
      q = it->second;
    }
    a.set_final(q);
  }
  return a;
}

Nfa words_over(const Alphabet& alphabet, std::span<const Letter> letters) {
  Nfa a = epsilon_language(alphabet);
  for (Letter x : letters) a.add_transition(0, x, 0);
  return a;
}

Nfa universal_language(const Alphabet& alphabet) {
  std::vector<Letter> all(alphabet.size());
  for (Letter x = 0; x < all.size(); ++x) all[x] = x;
  return words_over(alphabet, all);
}

Dfa determinize(const Nfa& a) {
  const Adjacency adj(a);
  const std::size_t k = a.alphabet().size();
  std::vector<State> start = a.initial_states();
  adj.close(start);

  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  index.emplace(start, 0);
  subsets.push_back(start);
  std::vector<std::vector<State>> delta;  // per subset, per letter
  std::vector<std::vector<State>> targets(k);

  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    for (auto& t : targets) t.clear();
    for (State q : subsets[cur]) {
      for (const auto& [x, r] : adj.moves[q]) targets[x].push_back(r);
    }
    std::vector<State> row(k, kNoState);
    for (Letter x = 0; x < k; ++x) {
      if (targets[x].empty()) continue;
      std::vector<State> t = targets[x];
      adj.close(t);
      auto [it, inserted] = index.try_emplace(t, static_cast<State>(subsets.size()));
      if (inserted) subsets.push_back(std::move(t));
      row[x] = it->second;
    }
    delta.push_back(std::move(row));
  }

  Dfa d(a.alphabet(), subsets.size());
  for (State q = 0; q < subsets.size(); ++q) {
    for (Letter x = 0; x < k; ++x) {
      if (delta[q][x] != kNoState) d.set_next(q, x, delta[q][x]);
    }
    d.set_final(q, std::any_of(subsets[q].begin(), subsets[q].end(),
                               [&](State s) { return a.is_final(s); }));
  }
  return d;
}

Dfa minimize(const Dfa& a) {
  const std::size_t n = a.states();
  const std::size_t k = a.alphabet().size();

  // Live states: reachable from the initial state and co-accessible.
  std::vector<char> reach(n, 0);
  {
    std::vector<State> stack{0};
    reach[0] = 1;
    while (!stack.empty()) {
      const State q = stack.back();
      stack.pop_back();
      for (Letter x = 0; x < k; ++x) {
        const State r = a.next(q, x);
        if (r != kNoState && !reach[r]) {
          reach[r] = 1;
          stack.push_back(r);
        }
      }
    }
  }
  std::vector<char> live(n, 0);
  {
    std::vector<std::vector<State>> preds(n);
    for (State q = 0; q < n; ++q) {
      for (Letter x = 0; x < k; ++x) {
        const State r = a.next(q, x);
        if (r != kNoState) preds[r].push_back(q);
      }
    }
    std::vector<State> stack;
    for (State q = 0; q < n; ++q) {
      if (reach[q] && a.is_final(q)) {
        live[q] = 1;
        stack.push_back(q);
      }
    }
    while (!stack.empty()) {
      const State q = stack.back();
      stack.pop_back();
      for (State p : preds[q]) {
        if (reach[p] && !live[p]) {
          live[p] = 1;
          stack.push_back(p);
        }
      }
    }
  }
  if (!live[0]) {
    Dfa empty(a.alphabet(), 1);
    empty.minimal_ = true;
    return empty;
  }

  // Moore refinement over live states; dead targets map to class -1.
  std::vector<long> cls(n, -1);
  for (State q = 0; q < n; ++q) {
    if (live[q]) cls[q] = a.is_final(q) ? 1 : 0;
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<long>, long> sig_index;
    std::vector<long> next_cls(n, -1);
    for (State q = 0; q < n; ++q) {
      if (!live[q]) continue;
      std::vector<long> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[q]);
      for (Letter x = 0; x < k; ++x) {
        const State r = a.next(q, x);
        sig.push_back(r == kNoState || !live[r] ? -1 : cls[r]);
      }
      next_cls[q] = sig_index.try_emplace(std::move(sig), static_cast<long>(sig_index.size()))
                        .first->second;
    }
    const std::size_t count = sig_index.size();
    cls = std::move(next_cls);
    if (count == classes) break;
    classes = count;
  }

  // Canonical numbering: breadth-first from the initial class in letter order.
  std::vector<State> representative(classes, kNoState);
  for (State q = 0; q < n; ++q) {
    if (live[q] && representative[cls[q]] == kNoState) representative[cls[q]] = q;
  }
  std::vector<State> number(classes, kNoState);
  std::vector<long> order;
  number[cls[0]] = 0;
  order.push_back(cls[0]);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const State q = representative[order[head]];
    for (Letter x = 0; x < k; ++x) {
      const State r = a.next(q, x);
      if (r == kNoState || !live[r]) continue;
      if (number[cls[r]] == kNoState) {
        number[cls[r]] = static_cast<State>(order.size());
        order.push_back(cls[r]);
      }
    }
  }
  Dfa m(a.alphabet(), order.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const State q = representative[order[idx]];
    m.set_final(static_cast<State>(idx), a.is_final(q));
    for (Letter x = 0; x < k; ++x) {
      const State r = a.next(q, x);
      if (r != kNoState && live[r]) m.set_next(static_cast<State>(idx), x, number[cls[r]]);
    }
  }
  m.minimal_ = true;
  return m;
}

Nfa to_nfa(const Dfa& a) {
  Nfa out(a.alphabet(), a.states());
  out.set_initial(0);
  for (State q = 0; q < a.states(); ++q) {
    if (a.is_final(q)) out.set_final(q);
    for (Letter x = 0; x < a.alphabet().size(); ++x) {
      const State r = a.next(q, x);
      if (r != kNoState) out.add_transition(q, x, r);
    }
  }
  return out;
}

Nfa simplify(const Nfa& a) { return to_nfa(minimize(determinize(a))); }

bool equivalent(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  return minimize(determinize(a)) == minimize(determinize(b));
}

std::optional<Word> separating_word(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, "operands are over different alphabets");
  }
  const std::size_t k = a.alphabet().size();
  using Pair = std::pair<State, State>;  // kNoState stands for the dead state
  std::map<Pair, std::pair<Pair, Letter>> parent;
  std::deque<Pair> queue{{0, 0}};
  parent.emplace(Pair{0, 0}, std::pair{Pair{kNoState, kNoState}, kEpsilon});
  auto accepts = [](const Dfa& d, State q) { return q != kNoState && d.is_final(q); };
  while (!queue.empty()) {
    const Pair cur = queue.front();
    queue.pop_front();
    if (accepts(a, cur.first) != accepts(b, cur.second)) {
      Word w;
      for (Pair p = cur; p != Pair{0, 0};) {
        const auto& [prev, x] = parent.at(p);
        w.push_back(x);
        p = prev;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter x = 0; x < k; ++x) {
      const Pair nxt{cur.first == kNoState ? kNoState : a.next(cur.first, x),
                     cur.second == kNoState ? kNoState : b.next(cur.second, x)};
      if (nxt == Pair{kNoState, kNoState}) continue;
      if (parent.try_emplace(nxt, std::pair{cur, x}).second) queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

bool member(const Nfa& a, const Word& w) {
  const Adjacency adj(a);
  std::vector<State> cur = a.initial_states();
  adj.close(cur);
  for (Letter x : w) {
    std::vector<State> nxt;
    for (State q : cur) {
      for (const auto& [y, r] : adj.moves[q]) {
        if (y == x) nxt.push_back(r);
      }
    }
    adj.close(nxt);
    cur = std::move(nxt);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](State q) { return a.is_final(q); });
}

bool member(const Dfa& a, const Word& w) {
  State q = 0;
  for (Letter x : w) {
    q = a.next(q, x);
    if (q == kNoState) return false;
  }
  return a.is_final(q);
}

Nfa union_of(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa out(a.alphabet());
  const State oa = append(out, a);
  const State ob = append(out, b);
  for (State q : a.initial_states()) out.set_initial(q + oa);
  for (State q : b.initial_states()) out.set_initial(q + ob);
  for (State q : a.final_states()) out.set_final(q + oa);
  for (State q : b.final_states()) out.set_final(q + ob);
  return out;
}

Nfa concat(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa out(a.alphabet());
  const State oa = append(out, a);
  const State ob = append(out, b);
  for (State q : a.initial_states()) out.set_initial(q + oa);
  for (State q : b.final_states()) out.set_final(q + ob);
  // Route through one hub state so the epsilon fan is |F_a| + |I_b| rather than the product.
  const State hub = out.add_state();
  for (State q : a.final_states()) out.add_transition(q + oa, kEpsilon, hub);
  for (State q : b.initial_states()) out.add_transition(hub, kEpsilon, q + ob);
  return out;
}

Nfa star(const Nfa& a) {
  Nfa out(a.alphabet());
  const State hub = out.add_state();
  const State oa = append(out, a);
  out.set_initial(hub);
  out.set_final(hub);
  for (State q : a.initial_states()) out.add_transition(hub, kEpsilon, q + oa);
  for (State q : a.final_states()) out.add_transition(q + oa, kEpsilon, hub);
  return out;
}

Nfa plus(const Nfa& a) { return concat(a, star(a)); }

Nfa intersect(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const Nfa ea = remove_epsilon(a);
  const Nfa eb = remove_epsilon(b);
  const Adjacency aa(ea), ab(eb);
  Nfa out(a.alphabet());
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto visit = [&](State p, State q) {
    auto [it, inserted] = index.try_emplace({p, q}, kNoState);
    if (inserted) {
      it->second = out.add_state();
      if (ea.is_final(p) && eb.is_final(q)) out.set_final(it->second);
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  for (State p : ea.initial_states()) {
    for (State q : eb.initial_states()) out.set_initial(visit(p, q));
  }
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    const State from = index.at({p, q});
    for (const auto& [x, p2] : aa.moves[p]) {
      for (const auto& [y, q2] : ab.moves[q]) {
        if (x == y) out.add_transition(from, x, visit(p2, q2));
      }
    }
  }
  return out;
}

namespace {

// Per letter predecessor / successor lists of an epsilon-free automaton.
std::vector<std::vector<std::vector<State>>> by_letter(const Nfa& a, bool backwards) {
  std::vector<std::vector<std::vector<State>>> out(
      a.states(), std::vector<std::vector<State>>(a.alphabet().size()));
  for (const auto& t : a.transitions()) {
    if (backwards) out[t.to][t.letter].push_back(t.from);
    else out[t.from][t.letter].push_back(t.to);
  }
  return out;
}

}  // namespace

Nfa right_quotient(const Nfa& l, const Nfa& r) {
  require_same_alphabet(l, r);
  Nfa el = remove_epsilon(l);
  const Nfa er = remove_epsilon(r);
  const std::size_t nr = er.states();
  const std::size_t k = l.alphabet().size();
  const auto pred_l = by_letter(el, true);
  const auto pred_r = by_letter(er, true);

  // good(p, q): some word leads p to a final state of L and q to a final state of R.
  std::vector<char> good(el.states() * nr, 0);
  std::vector<std::pair<State, State>> stack;
  for (State p : el.final_states()) {
    for (State q : er.final_states()) {
      good[p * nr + q] = 1;
      stack.emplace_back(p, q);
    }
  }
  while (!stack.empty()) {
    const auto [p, q] = stack.back();
    stack.pop_back();
    for (Letter x = 0; x < k; ++x) {
      for (State pp : pred_l[p][x]) {
        for (State qq : pred_r[q][x]) {
          if (!good[pp * nr + qq]) {
            good[pp * nr + qq] = 1;
            stack.emplace_back(pp, qq);
          }
        }
      }
    }
  }
  const auto r_init = er.initial_states();
  for (State p = 0; p < el.states(); ++p) {
    el.set_final(p, std::any_of(r_init.begin(), r_init.end(),
                                [&](State q) { return good[p * nr + q] != 0; }));
  }
  return el;
}

Nfa left_quotient(const Nfa& r, const Nfa& l) {
  require_same_alphabet(l, r);
  Nfa el = remove_epsilon(l);
  const Nfa er = remove_epsilon(r);
  const std::size_t nr = er.states();
  const std::size_t k = l.alphabet().size();
  const auto succ_l = by_letter(el, false);
  const auto succ_r = by_letter(er, false);

  // seen(p, q): some word leads an initial state of L to p and one of R to q.
  std::vector<char> seen(el.states() * nr, 0);
  std::vector<std::pair<State, State>> stack;
  for (State p : el.initial_states()) {
    for (State q : er.initial_states()) {
      seen[p * nr + q] = 1;
      stack.emplace_back(p, q);
    }
  }
  while (!stack.empty()) {
    const auto [p, q] = stack.back();
    stack.pop_back();
    for (Letter x = 0; x < k; ++x) {
      for (State pp : succ_l[p][x]) {
        for (State qq : succ_r[q][x]) {
          if (!seen[pp * nr + qq]) {
            seen[pp * nr + qq] = 1;
            stack.emplace_back(pp, qq);
          }
        }
      }
    }
  }
  const auto r_final = er.final_states();
  for (State p = 0; p < el.states(); ++p) {
    el.set_initial(p, std::any_of(r_final.begin(), r_final.end(),
                                  [&](State q) { return seen[p * nr + q] != 0; }));
  }
  return el;
}

Nfa involution_image(const Nfa& a) {
  if (!a.alphabet().involutive()) {
    throw Error(ErrorCode::NotInvolutive, "involution needs a hat alphabet");
  }
  Nfa out(a.alphabet(), a.states());
  for (const auto& t : a.transitions()) {
    out.add_transition(t.to, t.letter == kEpsilon ? kEpsilon : a.alphabet().bar(t.letter), t.from);
  }
  for (State q = 0; q < a.states(); ++q) {
    out.set_initial(q, a.is_final(q));
    out.set_final(q, a.is_initial(q));
  }
  return out;
}

Nfa remove_epsilon(const Nfa& a) {
  if (!a.has_epsilon()) return a;
  const Adjacency adj(a);
  Nfa out(a.alphabet(), a.states());
  std::set<Transition> moves;
  for (State p = 0; p < a.states(); ++p) {
    std::vector<State> closure{p};
    adj.close(closure);
    bool final = false;
    for (State r : closure) {
      final = final || a.is_final(r);
      for (const auto& [x, q] : adj.moves[r]) moves.insert({p, x, q});
    }
    out.set_initial(p, a.is_initial(p));
    out.set_final(p, final);
  }
  for (const auto& t : moves) out.add_transition(t.from, t.letter, t.to);
  return out;
}

Nfa trim(const Nfa& a) {
  const auto fwd = reachable_from(a, a.initial_states(), false);
  const auto bwd = reachable_from(a, a.final_states(), true);
  std::vector<State> index(a.states(), kNoState);
  Nfa out(a.alphabet());
  for (State q = 0; q < a.states(); ++q) {
    if (fwd[q] && bwd[q]) {
      index[q] = out.add_state();
      out.set_initial(index[q], a.is_initial(q));
      out.set_final(index[q], a.is_final(q));
    }
  }
  for (const auto& t : a.transitions()) {
    if (index[t.from] != kNoState && index[t.to] != kNoState) {
      out.add_transition(index[t.from], t.letter, index[t.to]);
    }
  }
  return out;
}

Nfa prefix_closure(const Nfa& a) {
  Nfa out = trim(a);
  for (State q = 0; q < out.states(); ++q) out.set_final(q);
  return out;
}

Nfa suffix_closure(const Nfa& a) {
  Nfa out = trim(a);
  for (State q = 0; q < out.states(); ++q) out.set_initial(q);
  return out;
}

Nfa factor_closure(const Nfa& a) {
  Nfa out = trim(a);
  for (State q = 0; q < out.states(); ++q) {
    out.set_initial(q);
    out.set_final(q);
  }
  return out;
}

Nfa relabel(const Nfa& a, const Alphabet& target, std::span<const std::size_t> base_map) {
  const Alphabet& source = a.alphabet();
  if (base_map.size() != source.base_size() || source.involutive() != target.involutive()) {
    throw Error(ErrorCode::AlphabetMismatch, "relabelling map does not fit the alphabets");
  }
  Nfa out(target, a.states());
  for (const auto& t : a.transitions()) {
    Letter x = kEpsilon;
    if (t.letter != kEpsilon) {
      x = target.letter(base_map[source.base_index(t.letter)], !source.is_positive(t.letter));
    }
    out.add_transition(t.from, x, t.to);
  }
  for (State q = 0; q < a.states(); ++q) {
    out.set_initial(q, a.is_initial(q));
    out.set_final(q, a.is_final(q));
  }
  return out;
}

std::vector<Word> enumerate_words(const Dfa& a, std::size_t max_len) {
  const std::size_t n = a.states();
  const std::size_t k = a.alphabet().size();
  // reach[len][q]: some word of exactly `len` letters leads q to a final state.
  std::vector<std::vector<char>> reach(max_len + 1, std::vector<char>(n, 0));
  for (State q = 0; q < n; ++q) reach[0][q] = a.is_final(q);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (State q = 0; q < n; ++q) {
      for (Letter x = 0; x < k && !reach[len][q]; ++x) {
        const State r = a.next(q, x);
        reach[len][q] = r != kNoState && reach[len - 1][r];
      }
    }
  }
  std::vector<Word> out;
  Word prefix;
  // Depth-first in letter order, restricted to branches that can still finish on time.
  auto descend = [&](auto&& self, State q, std::size_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (Letter x = 0; x < k; ++x) {
      const State r = a.next(q, x);
      if (r == kNoState || !reach[remaining - 1][r]) continue;
      prefix.push_back(x);
      self(self, r, remaining - 1);
      prefix.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (reach[len][0]) descend(descend, 0, len);
  }
  return out;
}

std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len) {
  return enumerate_words(determinize(a), max_len);
}

}  // namespace reesloop
