#pragma once

// Executable checks of the loop-problem identities for Rees quotients,
// subsemigroups, adjoined zeros, Rees matrix semigroups with and without
// zero, and completely zero-simple semigroups. Each verifier builds both
// sides independently and compares them as minimal DFAs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reesloop/language.hpp"
#include "reesloop/loops.hpp"
#include "reesloop/semigroup.hpp"
#include "reesloop/transduce.hpp"

namespace reesloop {

struct LanguageCheck {
  std::string name;
  Dfa lhs;  // minimal
  Dfa rhs;  // minimal
  std::optional<Word> separator;

  bool holds() const noexcept { return !separator; }
};

/// Minimizes both sides and records a shortest separating word if they differ.
LanguageCheck compare_languages(std::string name, const Nfa& lhs, const Nfa& rhs);

struct VerificationReport {
  std::string tag;
  std::string instance;
  std::vector<LanguageCheck> checks;  // the first check is the headline identity
  std::vector<std::string> notes;

  bool holds() const;
  /// The first failing check, or the headline check when everything holds.
  const LanguageCheck& primary() const;
  std::optional<Word> separator() const { return primary().separator; }
  const Dfa& lhs() const { return primary().lhs; }
  const Dfa& rhs() const { return primary().rhs; }
  std::size_t work_units() const;

  /// `RESULT <tag> <instance> PASS|FAIL [<check>:<separator>]`
  std::string result_line() const;
  std::string summary() const;
};

/// Appends the checks and notes of `part`, prefixing check names with `prefix`.
void merge_report(VerificationReport& into, const VerificationReport& part, const std::string& prefix);

// Languages used by the identities, exposed for tests and for the CLI.

/// Representatives (shortest, shortlex-least) of the elements of `t`.
std::vector<Word> representatives(const GeneratorMap& sigma, const ElemSet& t);

/// L u (L R~^-1)(R^-1 L R~^-1)*(R^-1 L) for a loop language L over hat(sigma)
/// and representatives R of an ideal. A path through 0 may return to 0 any
/// number of times, hence the star; the literal form omits it.
Nfa rees_quotient_formula(const Nfa& l, const std::vector<Word>& r, bool literal = false);

/// The loop problem of S^0 from that of S. `l` is over an alphabet whose last
/// base symbol is the zero generator z and must not use z. The corrected form
/// includes the single-edge loops x, ~x, z, ~z at 0 in the 0-to-0 language;
/// the literal form uses only ~z F z there.
Nfa adjoin_zero_formula(const Nfa& l, bool literal = false);

/// "a,b;c,d": the rows of P separated by ';', ZERO written 0.
std::string matrix_tag(const FiniteSemigroup& s, const SandwichMatrix& p);

/// S^0 with sigma extended by a fresh symbol (default "z") mapped to the zero.
GeneratorMap extend_to_zero(const GeneratorMap& sigma);

VerificationReport verify_rees_quotient(const GeneratorMap& sigma, const ElemSet& ideal);
/// The quotient identity alone, with the unstarred middle factor.
VerificationReport verify_rees_quotient_literal(const GeneratorMap& sigma, const ElemSet& ideal);

/// `x_symbols` are indices into tau's symbols; sigma is tau restricted to them.
/// Throws HypothesisFailed when `check_hypothesis` and T is not weakly
/// pseudo-right-unitary, RestrictionNotOntoT when the restriction misses T.
VerificationReport verify_subsemigroup_intersection(const GeneratorMap& tau, const ElemSet& t,
                                                    const std::vector<std::size_t>& x_symbols,
                                                    bool check_hypothesis = true);

/// Zero removal: sigma on S against its extension to S^0.
VerificationReport verify_remove_zero(const GeneratorMap& sigma);

VerificationReport verify_adjoin_zero(const GeneratorMap& sigma);
/// As verify_adjoin_zero with the literal 0-to-0 language.
VerificationReport verify_adjoin_zero_literal(const GeneratorMap& sigma);

struct SemitoreesOptions {
  std::optional<GeneratorMap> tau;     // defaults to every element of M
  std::optional<std::uint64_t> seed;   // randomized representatives when set
};

/// Throws ZeroEntry if P has a ZERO entry.
VerificationReport verify_semitorees(const GeneratorMap& sigma, std::size_t i_count,
                                     std::size_t j_count, const SandwichMatrix& p,
                                     const SemitoreesOptions& options = {});

/// `tau` generates M^0(S; I, J; P) and defaults to every element.
VerificationReport verify_semitoreeszero(const GeneratorMap& sigma, std::size_t i_count,
                                         std::size_t j_count, const SandwichMatrix& p,
                                         const std::optional<GeneratorMap>& tau = std::nullopt);

struct Column {
  std::size_t i;
  std::size_t j;
  bool operator==(const Column&) const = default;
};

/// First (i, j) in i-major order with P_ji nonzero and, for every j',
/// P_j'i = 0 or S P_j'i inside S P_ji.
std::optional<Column> find_admissible_column(const FiniteSemigroup& s, const SandwichMatrix& p);

/// sigma generates the monoid S. Throws NoUnitInP, HypothesisFailed.
VerificationReport verify_unit_sandwich(const GeneratorMap& sigma, std::size_t i_count,
                                        std::size_t j_count, const SandwichMatrix& p);

struct ReesDecomposition {
  Subgroup group;
  std::size_t i_count;
  std::size_t j_count;
  SandwichMatrix sandwich;
  ReesMatrix rees;               // M^0(G; I, J; P)
  std::vector<Elem> isomorphism;  // element of rees.semigroup -> element of S
};

/// Throws NotCompletelyZeroSimple, InternalError.
ReesDecomposition rees_decompose(const FiniteSemigroup& s);

VerificationReport verify_czeros(const GeneratorMap& sigma);

/// rees_decompose followed by an isomorphism search back to S.
VerificationReport verify_decompose_roundtrip(const FiniteSemigroup& s);

}  // namespace reesloop
