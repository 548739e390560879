#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "reesloop/error.hpp"
#include "reesloop/loops.hpp"
#include "reesloop/transduce.hpp"
#include "test_util.hpp"

using namespace reesloop;
using testutil::w;

namespace {

// Some initial-to-final path of raw edges spells (u, v).
bool spells(const Transducer& t, const Word& u, const Word& v) {
  std::set<std::tuple<State, std::size_t, std::size_t>> seen;
  std::function<bool(State, std::size_t, std::size_t)> go = [&](State q, std::size_t i, std::size_t j) {
    if (!seen.insert({q, i, j}).second) return false;
    if (i == u.size() && j == v.size() && t.is_final(q)) return true;
    for (const auto& e : t.edges()) {
      if (e.from != q || i + e.input.size() > u.size() || j + e.output.size() > v.size()) continue;
      if (!std::equal(e.input.begin(), e.input.end(), u.begin() + static_cast<std::ptrdiff_t>(i))) continue;
      if (!std::equal(e.output.begin(), e.output.end(), v.begin() + static_cast<std::ptrdiff_t>(j))) continue;
      if (go(e.to, i + e.input.size(), j + e.output.size())) return true;
    }
    return false;
  };
  for (State q : t.initial_states()) {
    if (go(q, 0, 0)) return true;
  }
  return false;
}

Word random_word(const Alphabet& a, std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> len(lo, hi);
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(a.size() - 1));
  Word out(len(rng));
  for (auto& l : out) l = letter(rng);
  return out;
}

// Every edge emits one or two letters, so outputs of length <= 4 come from
// paths of at most 4 edges and inputs of length <= 8.
Transducer random_transducer(const Alphabet& in, const Alphabet& out, std::mt19937_64& rng, std::size_t edges) {
  std::uniform_int_distribution<State> state(0, 2);
  Transducer t(in, out, 3);
  t.set_initial(0);
  t.set_final(state(rng));
  for (std::size_t k = 0; k < edges; ++k) {
    t.add_edge(state(rng), random_word(in, rng, 0, 2), random_word(out, rng, 1, 2), state(rng));
  }
  return t;
}

Transducer identity_transducer(const Alphabet& a) {
  Transducer t(a, a, 1);
  t.set_initial(0);
  t.set_final(0);
  for (Letter l = 0; l < a.size(); ++l) t.add_edge(0, {l}, {l}, 0);
  return t;
}

Word symbols_of(const Word& w) {
  Word out;
  for (Letter l : w) out.push_back(l / 2);
  return out;
}

Elem value(const GeneratorMap& sigma, const Word& w) {
  const Word s = symbols_of(w);
  const std::vector<std::size_t> idx(s.begin(), s.end());
  return sigma.evaluate(idx);
}

}  // namespace

TEST_CASE("normalize splits long edges") {
  const auto in = Alphabet::hat({"x", "y"});
  const auto out = Alphabet::hat({"z"});
  Transducer t(in, out, 2);
  t.set_initial(0);
  t.set_final(1);
  t.add_edge(0, w(in, "x.y"), w(out, "z"), 1);
  const auto n = normalize(t);
  REQUIRE(n.edges().size() == 2);
  CHECK(n.states() == 3);
  CHECK(n.edges()[0].from == 0);
  CHECK(n.edges()[0].input == w(in, "x"));
  CHECK(n.edges()[0].output == w(out, "z"));
  CHECK(n.edges()[1].input == w(in, "y"));
  CHECK(n.edges()[1].output.empty());
  CHECK(n.edges()[1].to == 1);
  CHECK(n.edges()[0].to == n.edges()[1].from);

  const auto id = identity_transducer(in);
  CHECK(normalize(id).edges().size() == id.edges().size());
  CHECK(normalize(id) == id);
}

TEST_CASE("accepts_pair agrees with raw path spelling before and after normalization") {
  std::mt19937_64 rng(3);
  const auto a = Alphabet::hat({"x"});
  const auto words = oracle::all_words(a.size(), 4);
  for (int trial = 0; trial < 12; ++trial) {
    const auto t = random_transducer(a, a, rng, 3);
    const auto n = normalize(t);
    for (const auto& u : words) {
      for (const auto& v : words) {
        const bool want = spells(t, u, v);
        CHECK(accepts_pair(t, u, v) == want);
        CHECK(accepts_pair(n, u, v) == want);
      }
    }
  }
}

TEST_CASE("identity and empty transducers") {
  const auto a = Alphabet::hat({"x", "y"});
  const auto id = identity_transducer(a);
  const Transducer none(a, a, 1);
  for (const auto& u : oracle::all_words(a.size(), 3)) {
    CHECK(accepts_pair(id, u, u));
    CHECK_FALSE(accepts_pair(none, u, u));
  }
  CHECK_FALSE(accepts_pair(id, w(a, "x"), w(a, "y")));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto l = testutil::random_nfa(a, rng);
    CHECK(equivalent(apply(id, l), l));
  }
  CHECK(testutil::words(apply(id, empty_language(a)), 4).empty());
  CHECK_THROWS_AS(apply(id, empty_language(Alphabet::hat({"q"}))), Error);
}

TEST_CASE("apply matches bounded pair enumeration") {
  std::mt19937_64 rng(5);
  const auto a = Alphabet::hat({"x"});
  const auto outputs = oracle::all_words(a.size(), 4);
  for (int trial = 0; trial < 15; ++trial) {
    const auto t = random_transducer(a, a, rng, 4);
    const auto l = testutil::random_nfa(a, rng, 3);
    const auto inputs = enumerate_words(l, 8);
    testutil::WordSet want;
    for (const auto& v : outputs) {
      for (const auto& u : inputs) {
        if (accepts_pair(t, u, v)) {
          want.insert(v);
          break;
        }
      }
    }
    CAPTURE(trial);
    CHECK(testutil::words(apply(t, l), 4) == want);
  }
}

TEST_CASE("apply distributes over union") {
  std::mt19937_64 rng(9);
  const auto a = Alphabet::hat({"x", "y"});
  for (int trial = 0; trial < 15; ++trial) {
    const auto t = random_transducer(a, a, rng, 5);
    const auto l1 = testutil::random_nfa(a, rng, 3);
    const auto l2 = testutil::random_nfa(a, rng, 3);
    CHECK(equivalent(apply(t, union_of(l1, l2)), union_of(apply(t, l1), apply(t, l2))));
  }
}

TEST_CASE("choose_words") {
  const GeneratorMap c2({"x"}, cyclic_group(2), {1});
  const auto a = Alphabet::hat({"x"});
  const auto reps = choose_words(c2);
  CHECK(reps[1] == w(a, "x"));
  CHECK(reps[0] == w(a, "x.x"));
  CHECK(choose_words(full_generators(trivial_semigroup()))[0] == Word{0});
  const auto lz = choose_words(full_generators(left_zero_semigroup(2)));
  CHECK(lz[0] == Word{0});
  CHECK(lz[1] == Word{2});
}

TEST_CASE("randomized representatives evaluate correctly and stay short") {
  const GeneratorMap sigma({"x", "y"}, cyclic_group(3), {1, 2});
  const auto shortest = choose_words(sigma);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = choose_words_randomized(sigma, seed);
    CHECK(r == choose_words_randomized(sigma, seed));
    for (Elem s = 0; s < 3; ++s) {
      CHECK(value(sigma, r[s]) == s);
      CHECK(r[s].size() <= shortest[s].size() + 2);
      for (Letter l : r[s]) CHECK(l % 2 == 0);
    }
  }
}

TEST_CASE("the Rees transducer") {
  SandwichMatrix one(1, 1);
  one.set(0, 0, 0);
  const auto triv = trivial_semigroup();
  const auto m1 = rees_matrix(triv, 1, 1, one, false);
  const auto t1 = build_rees_transducer(full_generators(triv), m1.structure, full_generators(m1.semigroup));
  CHECK(t1.states() == 3);
  CHECK(t1.edges().size() == 4);
  CHECK(t1.initial_states() == std::vector<State>{1});
  CHECK(t1.final_states() == std::vector<State>{2});

  const auto c2 = cyclic_group(2);
  SandwichMatrix p(2, 2);
  p.set(0, 0, 0);
  p.set(0, 1, 1);
  p.set(1, 0, 1);
  p.set(1, 1, 0);
  const auto m2 = rees_matrix(c2, 2, 2, p, false);
  const auto tau2 = full_generators(m2.semigroup);
  const auto t2 = build_rees_transducer(full_generators(c2), m2.structure, tau2);
  CHECK(t2.states() == 6);
  CHECK(t2.edges().size() == tau2.size() * (2 + 4 + 4));
  CHECK(t2 == build_rees_transducer(full_generators(c2), m2.structure, tau2));

  const auto m0 = rees_matrix(c2, 2, 2, p, true);
  CHECK_THROWS_AS(build_rees_transducer(full_generators(c2), m0.structure, full_generators(m0.semigroup)), Error);
}

TEST_CASE("the Rees transducer relates loop problems for C2") {
  const auto c2 = cyclic_group(2);
  const GeneratorMap sigma({"x"}, c2, {1});
  SandwichMatrix p(1, 1);
  p.set(0, 0, 0);
  const auto m = rees_matrix(c2, 1, 1, p, false);
  const auto tau = full_generators(m.semigroup);
  const auto t = build_rees_transducer(sigma, m.structure, tau);
  CHECK(equivalent(star(apply(t, loop_problem(sigma))), loop_problem(tau)));

  // A loop y ~y in M is the image of w_y ~w_y.
  const auto reps = choose_words(sigma);
  const auto& alpha = loop_problem(sigma).alphabet();
  for (std::size_t y = 0; y < tau.size(); ++y) {
    const Word wy = reps[m.structure.decode(tau.image(y))->s];
    Word u = wy;
    const Word back = involution(alpha, wy);
    u.insert(u.end(), back.begin(), back.end());
    const Word v{static_cast<Letter>(2 * y), static_cast<Letter>(2 * y + 1)};
    CHECK(member(loop_problem(sigma), u));
    CHECK(accepts_pair(t, u, v));
  }
}
