#include "reesloop/loops.hpp"

#include <sstream>

namespace reesloop {

CayleyGraph cayley_graph(const GeneratorMap& sigma1) {
  if (sigma1.kind() != Generation::monoid || !sigma1.target().identity()) {
    throw Error(ErrorCode::NoIdentity, "Cayley graphs are drawn on monoids");
  }
  return CayleyGraph{sigma1};
}

LoopAutomaton loop_automaton(const GeneratorMap& sigma) {
  CayleyGraph g = cayley_graph(lift_to_monoid(sigma));
  const Alphabet alpha = Alphabet::hat(sigma.symbols());
  const std::size_t n = g.monoid().order();
  Nfa nfa(alpha, n);
  for (Elem a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < g.generators.size(); ++x) {
      const Elem b = g.target(a, x);
      nfa.add_transition(a, alpha.letter(x), b);
      nfa.add_transition(b, alpha.letter(x, true), a);
    }
  }
  nfa.set_initial(g.one());
  nfa.set_final(g.one());
  return LoopAutomaton{std::move(g), std::move(nfa)};
}

Nfa loop_problem(const GeneratorMap& sigma) { return loop_automaton(sigma).nfa; }

Nfa path_language(const LoopAutomaton& la, const ElemSet& from, const ElemSet& to) {
  if (from.empty() || to.empty()) throw Error(ErrorCode::EmptyVertexSet, "vertex set is empty");
  Nfa out = la.nfa;
  for (State q = 0; q < out.states(); ++q) {
    out.set_initial(q, false);
    out.set_final(q, false);
  }
  for (Elem a : from) out.set_initial(a);
  for (Elem b : to) out.set_final(b);
  return out;
}

Nfa non_returning_loops(const LoopAutomaton& la) {
  const State one = la.one();
  Nfa out(la.alphabet(), la.nfa.states());
  const State sink = out.add_state();
  for (const auto& t : la.nfa.transitions()) {
    out.add_transition(t.from, t.letter, t.to == one ? sink : t.to);
  }
  out.set_initial(one);
  out.set_final(sink);
  return out;
}

std::vector<Word> zigzag_factor(const Alphabet& alphabet, const Word& w) {
  std::vector<Word> blocks;
  for (Letter a : w) {
    const bool positive = alphabet.is_positive(a);
    // Block k is positive iff k is even.
    if (blocks.empty()) {
      if (!positive) blocks.emplace_back();
      blocks.emplace_back();
    } else if (((blocks.size() - 1) % 2 == 0) != positive) {
      blocks.emplace_back();
    }
    blocks.back().push_back(a);
  }
  if (blocks.size() % 2 == 1) blocks.emplace_back();
  return blocks;
}

std::vector<Elem> zigzag_witness(const LoopAutomaton& la, const Word& w) {
  const Nfa& a = la.nfa;
  const std::size_t n = a.states();
  std::vector<std::vector<std::vector<State>>> succ(n, std::vector<std::vector<State>>(a.alphabet().size()));
  for (const auto& t : a.transitions()) succ[t.from][t.letter].push_back(t.to);

  // can[k][q]: reading w[k..] from q can end at 1.
  std::vector<std::vector<char>> can(w.size() + 1, std::vector<char>(n, 0));
  can[w.size()][la.one()] = 1;
  for (std::size_t k = w.size(); k-- > 0;) {
    for (State q = 0; q < n; ++q) {
      for (State r : succ[q][w[k]]) can[k][q] = can[k][q] || can[k + 1][r];
    }
  }
  if (!can[0][la.one()]) {
    throw Error(ErrorCode::NotInLoopProblem, "word is not in the loop problem");
  }
  std::vector<State> path{la.one()};
  for (std::size_t k = 0; k < w.size(); ++k) {
    State best = kNoState;
    for (State r : succ[path.back()][w[k]]) {
      if (can[k + 1][r] && r < best) best = r;
    }
    path.push_back(best);
  }

  const auto blocks = zigzag_factor(a.alphabet(), w);
  std::vector<Elem> witness{path[0]};
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    pos += blocks[b].size();
    if (b % 2 == 1) witness.push_back(path[pos]);
  }

  const GeneratorMap& sigma = la.graph.generators;
  auto value = [&](const Word& block) {
    std::vector<std::size_t> symbols;
    for (Letter x : block) symbols.push_back(a.alphabet().base_index(x));
    return sigma.evaluate(symbols);
  };
  const FiniteSemigroup& m = la.graph.monoid();
  for (std::size_t i = 0; i + 1 < witness.size(); ++i) {
    const Elem lhs = m.mul(witness[i], value(blocks[2 * i]));
    const Elem rhs = m.mul(witness[i + 1], value(involution(a.alphabet(), blocks[2 * i + 1])));
    if (lhs != rhs) throw Error(ErrorCode::InternalError, "zig zag equation fails");
  }
  if (witness.front() != la.one() || witness.back() != la.one()) {
    throw Error(ErrorCode::InternalError, "zig zag witness does not start and end at 1");
  }
  return witness;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot_vertices(std::ostringstream& os, const CayleyGraph& g) {
  for (Elem a = 0; a < g.monoid().order(); ++a) {
    os << "  v" << a << " [label=" << quoted(g.monoid().label(a))
       << (a == g.one() ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
}

}  // namespace

std::string to_dot(const CayleyGraph& g) {
  std::ostringstream os;
  os << "digraph cayley {\n  rankdir=LR;\n";
  dot_vertices(os, g);
  for (Elem a = 0; a < g.monoid().order(); ++a) {
    for (std::size_t x = 0; x < g.generators.size(); ++x) {
      os << "  v" << a << " -> v" << g.target(a, x) << " [label=" << quoted(g.generators.symbols()[x])
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const LoopAutomaton& la) {
  std::ostringstream os;
  os << "digraph loop {\n  rankdir=LR;\n";
  dot_vertices(os, la.graph);
  for (const auto& t : la.nfa.transitions()) {
    os << "  v" << t.from << " -> v" << t.to << " [label=" << quoted(la.alphabet().name(t.letter));
    if (!la.alphabet().is_positive(t.letter)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace reesloop
