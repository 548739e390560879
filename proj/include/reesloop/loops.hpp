#pragma once

// Cayley graphs of monoids, loop automata and loop problems, path languages
// between vertex sets, and Zig Zag witnesses for loops.

#include <string>
#include <vector>

#include "reesloop/language.hpp"
#include "reesloop/semigroup.hpp"

namespace reesloop {

/// Vertices are the monoid's elements; a --x--> a(x sigma) for each generator x.
struct CayleyGraph {
  GeneratorMap generators;  // a monoid choice of generators

  const FiniteSemigroup& monoid() const noexcept { return generators.target(); }
  Elem one() const { return *monoid().identity(); }
  Elem target(Elem a, std::size_t x) const { return monoid().mul(a, generators.image(x)); }
};

/// Throws NoIdentity unless `sigma1` maps onto a monoid with a designated identity.
CayleyGraph cayley_graph(const GeneratorMap& sigma1);

/// The Cayley graph with every edge doubled by a barred reverse edge. State q
/// is vertex q of the monoid; the identity is the only initial and final state.
struct LoopAutomaton {
  CayleyGraph graph;
  Nfa nfa;

  const Alphabet& alphabet() const noexcept { return nfa.alphabet(); }
  State one() const { return graph.one(); }
};

/// For a semigroup choice sigma the graph is built on S^1 with a fresh
/// identity; a monoid choice uses its own identity.
LoopAutomaton loop_automaton(const GeneratorMap& sigma);
Nfa loop_problem(const GeneratorMap& sigma);

/// The loop automaton with initial set `from` and final set `to`. Throws EmptyVertexSet.
Nfa path_language(const LoopAutomaton& la, const ElemSet& from, const ElemSet& to);

/// Nonempty loops at 1 that do not pass through 1 before their end.
Nfa non_returning_loops(const LoopAutomaton& la);

/// Blocks u0, ~v1, u1, ~v2, ..., ~vn: maximal runs of positive and negative
/// letters, padded with empty blocks so the list starts positive and ends negative.
std::vector<Word> zigzag_factor(const Alphabet& alphabet, const Word& w);

/// Vertices p0 = 1, ..., pn = 1 at the block boundaries of the least accepting
/// path, with p_i (u_i sigma) = p_{i+1} (v_{i+1} sigma). Throws NotInLoopProblem.
std::vector<Elem> zigzag_witness(const LoopAutomaton& la, const Word& w);

std::string to_dot(const CayleyGraph& g);
std::string to_dot(const LoopAutomaton& la);

}  // namespace reesloop
