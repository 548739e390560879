// One PASS/FAIL line per acceptance criterion, with INFO lines for the
// literal-formula and negative-control measurements. Exit status is 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "reesloop/corpus.hpp"
#include "reesloop/error.hpp"
#include "reesloop/loops.hpp"
#include "reesloop/theorems.hpp"
#include "test_util.hpp"

using namespace reesloop;

namespace {

struct Tally {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++total;
    if (ok) ++passed;
    else if (first_failure.empty()) first_failure = what;
  }
  bool ok() const { return total > 0 && passed == total; }
  std::string detail() const {
    std::string out = std::to_string(passed) + "/" + std::to_string(total);
    if (!first_failure.empty()) out += " first failure: " + first_failure;
    return out;
  }
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Tally()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    t = body();
  } catch (const std::exception& e) {
    t.add(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!t.ok()) ++failures;
  std::printf("%s %d %s: %s (%.1fs)\n", t.ok() ? "PASS" : "FAIL", id, name, t.detail().c_str(), secs);
  std::fflush(stdout);
}

void info(const std::string& text) {
  std::printf("INFO %s\n", text.c_str());
  std::fflush(stdout);
}

std::vector<FiniteSemigroup> small_semigroups() {
  std::vector<FiniteSemigroup> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& s : enumerate_semigroups(n)) out.push_back(std::move(s));
  }
  return out;
}

std::string describe(const FiniteSemigroup& s) {
  std::string out = "order " + std::to_string(s.order()) + " [";
  for (std::size_t k = 0; k < s.table().size(); ++k) out += (k ? "," : "") + std::to_string(s.table()[k]);
  return out + "]";
}

std::string failure_text(const VerificationReport& r) {
  const auto sep = r.separator();
  return r.instance + " " + r.primary().name + ":" + (sep ? format_word(r.lhs().alphabet(), *sep) : "");
}

bool has_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return true;
  }
  return false;
}

// Every J x I sandwich matrix with |I|, |J| <= 2.
void each_matrix(std::size_t order, bool with_zero,
                 const std::function<void(std::size_t, std::size_t, const SandwichMatrix&)>& f) {
  for (std::size_t i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      for (const auto& p : all_sandwich_matrices(order, i, j, with_zero)) f(i, j, p);
    }
  }
}

std::string matrix_text(const FiniteSemigroup& s, std::size_t i, std::size_t j, const SandwichMatrix& p) {
  return std::to_string(i) + "x" + std::to_string(j) + " " + matrix_tag(s, p);
}

}  // namespace

int main() {
  const auto semigroups = small_semigroups();

  criterion(1, "enumeration matches brute force", [] {
    Tally t;
    const std::size_t expected[] = {1, 8, 113};
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::size_t got = enumerate_semigroups(n).size();
      const std::size_t brute = testutil::brute_force_semigroup_count(n);
      t.add(got == brute && got == expected[n - 1],
            "order " + std::to_string(n) + ": " + std::to_string(got) + " vs " + std::to_string(brute));
    }
    return t;
  });

  std::size_t literal_quotient_failures = 0, quotient_pairs = 0;
  criterion(2, "Rees quotients of every order <= 3 semigroup", [&] {
    Tally t;
    for (const auto& s : semigroups) {
      const auto sigma = full_generators(s);
      for (const auto& ideal : all_ideals(s)) {
        const auto r = verify_rees_quotient(sigma, ideal);
        const bool paths = r.checks.size() == 4 && has_check(r, "L1T") && has_check(r, "LTT") && has_check(r, "LT1");
        t.add(r.holds() && paths, describe(s) + " " + failure_text(r));
        ++quotient_pairs;
        if (!verify_rees_quotient_literal(sigma, ideal).holds()) ++literal_quotient_failures;
      }
    }
    return t;
  });
  info("unstarred quotient formula fails on " + std::to_string(literal_quotient_failures) + " of " +
       std::to_string(quotient_pairs) + " pairs");

  criterion(3, "S inside S with a zero adjoined", [&] {
    Tally t;
    for (const auto& s : semigroups) {
      const auto tau = extend_to_zero(full_generators(s));
      ElemSet whole(s.order());
      std::iota(whole.begin(), whole.end(), Elem{0});
      std::vector<std::size_t> xs(s.order());
      std::iota(xs.begin(), xs.end(), std::size_t{0});
      const auto r = verify_subsemigroup_intersection(tau, whole, xs);
      t.add(r.holds(), describe(s) + " " + failure_text(r));
    }
    return t;
  });

  std::size_t literal_zero_failures = 0;
  criterion(4, "adjoining a zero", [&] {
    Tally t;
    for (const auto& s : semigroups) {
      const auto sigma = full_generators(s);
      const auto r = verify_adjoin_zero(sigma);
      t.add(r.holds(), describe(s) + " " + failure_text(r));
      if (!verify_adjoin_zero_literal(sigma).holds()) ++literal_zero_failures;
    }
    return t;
  });
  info("literal 0-to-0 language fails on " + std::to_string(literal_zero_failures) + " of " +
       std::to_string(semigroups.size()) + " semigroups");

  criterion(5, "Rees matrix semigroups without zero", [] {
    Tally t;
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto g = n == 1 ? trivial_semigroup() : cyclic_group(n);
      const auto sigma = full_generators(g);
      bool rerun = false;
      each_matrix(n, false, [&](std::size_t i, std::size_t j, const SandwichMatrix& p) {
        const auto r = verify_semitorees(sigma, i, j, p);
        t.add(r.holds() && has_check(r, "non-returning"), "C" + std::to_string(n) + " " + matrix_text(g, i, j, p) +
                                                             " " + failure_text(r));
        if (!rerun && i == 2 && j == 2) {
          SemitoreesOptions opt;
          opt.seed = 1000 + n;
          const auto again = verify_semitorees(sigma, i, j, p, opt);
          t.add(again.holds() && has_check(again, "non-returning"),
                "randomized C" + std::to_string(n) + " " + failure_text(again));
          rerun = true;
        }
      });
    }
    return t;
  });

  criterion(6, "Rees matrix semigroups with zero", [] {
    Tally t;
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto g = n == 1 ? trivial_semigroup() : cyclic_group(n);
      const auto sigma = full_generators(g);
      each_matrix(n, true, [&](std::size_t i, std::size_t j, const SandwichMatrix& p) {
        const auto r = verify_semitoreeszero(sigma, i, j, p);
        t.add(r.holds(), "C" + std::to_string(n) + " " + matrix_text(g, i, j, p) + " " + failure_text(r));
      });
    }
    return t;
  });

  criterion(7, "sandwich matrices containing a unit", [] {
    Tally t;
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto g = cyclic_group(n);
      const auto sigma = full_generators(g);
      each_matrix(n, true, [&](std::size_t i, std::size_t j, const SandwichMatrix& p) {
        bool nonzero = false;
        for (std::size_t r = 0; r < j; ++r) {
          for (std::size_t c = 0; c < i; ++c) nonzero = nonzero || p.at(r, c).has_value();
        }
        if (!nonzero) return;
        const auto r = verify_unit_sandwich(sigma, i, j, p);
        t.add(r.holds(), "C" + std::to_string(n) + " " + matrix_text(g, i, j, p) + " " + failure_text(r));
      });
    }
    return t;
  });

  criterion(8, "completely zero-simple semigroups", [] {
    Tally t;
    std::vector<std::pair<std::string, FiniteSemigroup>> cases;
    const auto c2 = cyclic_group(2);
    for (const auto& p : regular_sandwich_matrices(2, 2, 2)) {
      cases.emplace_back("M0(C2;2,2;" + matrix_tag(c2, p) + ")", rees_matrix(c2, 2, 2, p, true).semigroup);
    }
    t.add(cases.size() == 56, "regular 2x2 patterns: " + std::to_string(cases.size()));
    cases.emplace_back("B2", brandt_b2());
    cases.emplace_back("C2 with zero", adjoin_zero(c2));
    cases.emplace_back("C3 with zero", adjoin_zero(cyclic_group(3)));
    for (const auto& [name, s] : cases) {
      t.add(is_completely_zero_simple(s), name + " not completely zero-simple");
      const auto round = verify_decompose_roundtrip(s);
      t.add(round.holds(), name + " " + failure_text(round));
      const auto d = rees_decompose(s);
      t.add(find_isomorphism(d.rees.semigroup, s).has_value(), name + " decomposition not isomorphic");
      const auto r = verify_czeros(full_generators(s));
      t.add(r.holds(), name + " " + failure_text(r));
    }
    return t;
  });

  criterion(9, "language operations against their definitions", [] {
    Tally t;
    std::mt19937_64 rng(20240601);
    const Alphabet alphabets[] = {Alphabet::hat({"x"}), Alphabet::hat({"x", "y"})};
    for (int k = 0; k < 500; ++k) {
      const auto& alpha = alphabets[k % 2];
      const auto a = testutil::random_nfa(alpha, rng);
      const auto b = testutil::random_nfa(alpha, rng);
      const auto bad = oracle::check_language_ops(a, b, 6);
      std::string what = "pair " + std::to_string(k) + ":";
      for (const auto& op : bad) what += " " + op;
      t.add(bad.empty(), what);
    }
    return t;
  });

  criterion(10, "loop automaton sanity", [&] {
    Tally t;
    for (const auto& s : semigroups) {
      const auto sigma = full_generators(s);
      const auto la = loop_automaton(sigma);
      t.add(equivalent(involution_image(la.nfa), la.nfa), describe(s) + " not involution-closed");
      const oracle::MaskNfa m(la.nfa);
      const auto& alpha = la.alphabet();
      bool symmetric = true;
      for (const auto& word : oracle::all_words(alpha.size(), 5)) {
        const auto bar = involution(alpha, word);
        for (State p = 0; p < la.nfa.states() && symmetric; ++p) {
          const auto fwd = m.run(oracle::Mask{1} << p, word);
          for (State q = 0; q < la.nfa.states(); ++q) {
            const bool qp = m.run(oracle::Mask{1} << q, bar) >> p & 1;
            if ((fwd >> q & 1) != qp) symmetric = false;
          }
        }
        if (!symmetric) break;
      }
      t.add(symmetric, describe(s) + " path symmetry");
    }
    const GeneratorMap c2({"x"}, cyclic_group(2), {1});
    const auto l = loop_problem(c2);
    const auto x = testutil::hat_x();
    t.add(member(l, testutil::w(x, "x.x.x.~x")), "x.x.x.~x rejected");
    t.add(!member(l, testutil::w(x, "~x")), "~x accepted");
    return t;
  });

  // Subsemigroups that are not weakly pseudo-right-unitary, verified without
  // the hypothesis.
  std::size_t not_weak = 0, failing = 0;
  std::string example;
  enumerate_semigroups(4, [&](const FiniteSemigroup& s) {
    for (unsigned mask = 1; mask < 16u; ++mask) {
      ElemSet t;
      for (Elem e = 0; e < 4; ++e) {
        if (mask >> e & 1) t.push_back(e);
      }
      if (!is_subsemigroup(s, t) || is_weakly_pru(s, t)) continue;
      ++not_weak;
      const std::vector<std::size_t> xs(t.begin(), t.end());
      const auto r = verify_subsemigroup_intersection(full_generators(s), t, xs, false);
      if (!r.holds()) {
        if (!failing++) example = describe(s) + " " + failure_text(r);
      }
    }
  });
  info("order 4 subsemigroups that are not weakly pseudo-right-unitary: " + std::to_string(not_weak) +
       ", intersection identity fails on " + std::to_string(failing) + (example.empty() ? "" : ", e.g. " + example));

  return failures == 0 ? 0 : 1;
}
