#include "reesloop/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace reesloop {

LanguageCheck compare_languages(std::string name, const Nfa& lhs, const Nfa& rhs) {
  if (!(lhs.alphabet() == rhs.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, name + ": sides are over different alphabets");
  }
  Dfa l = minimize(determinize(lhs));
  Dfa r = minimize(determinize(rhs));
  std::optional<Word> sep;
  if (!(l == r)) {
    sep = separating_word(l, r);
    if (!sep) throw Error(ErrorCode::InternalError, name + ": distinct minimal DFAs, no separator");
  }
  return LanguageCheck{std::move(name), std::move(l), std::move(r), std::move(sep)};
}

bool VerificationReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
}

const LanguageCheck& VerificationReport::primary() const {
  if (checks.empty()) throw Error(ErrorCode::InternalError, "report without checks");
  for (const auto& c : checks) {
    if (!c.holds()) return c;
  }
  return checks.front();
}

std::size_t VerificationReport::work_units() const {
  std::size_t total = 0;
  for (const auto& c : checks) {
    total += c.lhs.states() + c.rhs.states() + c.lhs.transition_count() + c.rhs.transition_count();
  }
  return total;
}

std::string VerificationReport::result_line() const {
  std::string line = "RESULT " + tag + " " + instance + (holds() ? " PASS" : " FAIL");
  if (!holds()) {
    const auto& c = primary();
    line += " " + c.name + ":" + format_word(c.lhs.alphabet(), *c.separator);
  }
  return line;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << tag << " " << instance << ": " << (holds() ? "holds" : "FAILS") << "\n";
  for (const auto& c : checks) {
    os << "  " << c.name << ": lhs " << c.lhs.states() << " states, rhs " << c.rhs.states()
       << " states, " << (c.holds() ? "equal" : "differ");
    if (c.separator) os << " on " << format_word(c.lhs.alphabet(), *c.separator);
    os << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

void merge_report(VerificationReport& into, const VerificationReport& part, const std::string& prefix) {
  for (auto c : part.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
  for (const auto& n : part.notes) into.notes.push_back(prefix + n);
}

namespace {

VerificationReport make_report(std::string tag) {
  VerificationReport r;
  r.tag = std::move(tag);
  r.instance = "-";
  return r;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

Nfa letters_language(const Alphabet& alpha, std::span<const Letter> letters) {
  Nfa a(alpha, 2);
  a.set_initial(0);
  a.set_final(1);
  for (Letter x : letters) a.add_transition(0, x, 1);
  return a;
}

// Every letter of hat(Y) whose base symbol is in `symbols`.
std::vector<Letter> hat_letters(const Alphabet& alpha, std::span<const std::size_t> symbols) {
  std::vector<Letter> out;
  for (std::size_t x : symbols) {
    out.push_back(alpha.letter(x));
    out.push_back(alpha.letter(x, true));
  }
  return out;
}

// Bijective homomorphism check; throws InternalError with `what` on failure.
void require_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                         const std::vector<Elem>& f, const std::string& what) {
  std::vector<char> hit(b.order(), 0);
  for (Elem x : f) {
    if (x >= b.order() || hit[x]) throw Error(ErrorCode::InternalError, what + " is not a bijection");
    hit[x] = 1;
  }
  if (f.size() != b.order() || !is_homomorphism(a, b, f)) {
    throw Error(ErrorCode::InternalError, what + " is not an isomorphism");
  }
}

}  // namespace

std::string matrix_tag(const FiniteSemigroup& s, const SandwichMatrix& p) {
  std::string out;
  for (std::size_t j = 0; j < p.rows(); ++j) {
    if (j) out += ";";
    for (std::size_t i = 0; i < p.cols(); ++i) {
      if (i) out += ",";
      out += p.at(j, i) ? s.label(*p.at(j, i)) : "0";
    }
  }
  return out;
}

std::vector<Word> representatives(const GeneratorMap& sigma, const ElemSet& t) {
  const auto words = choose_words(sigma);
  std::vector<Word> out;
  for (Elem e : t) out.push_back(words.at(e));
  return out;
}

Nfa rees_quotient_formula(const Nfa& l, const std::vector<Word>& r, bool literal) {
  const Alphabet& alpha = l.alphabet();
  const Nfa rl = finite_language(alpha, r);
  const Nfa rbar = involution_image(rl);
  const Nfa l1t = simplify(right_quotient(l, rbar));
  const Nfa lt1 = simplify(left_quotient(rl, l));
  const Nfa ltt = simplify(right_quotient(left_quotient(rl, l), rbar));
  return union_of(l, concat(concat(l1t, literal ? ltt : star(ltt)), lt1));
}

Nfa adjoin_zero_formula(const Nfa& l, bool literal) {
  const Alphabet& alpha = l.alphabet();
  const std::size_t zsym = alpha.base_size() - 1;
  const Letter z = alpha.letter(zsym);
  const Letter zbar = alpha.letter(zsym, true);
  const Nfa zl = word_language(alpha, {z});
  const Nfa zbarl = word_language(alpha, {zbar});
  const Nfa l10 = concat(prefix_closure(l), zl);
  Nfa l00 = concat(concat(zbarl, factor_closure(l)), zl);
  if (!literal) {
    std::vector<Letter> all(alpha.size());
    std::iota(all.begin(), all.end(), 0);
    l00 = union_of(l00, letters_language(alpha, all));
  }
  const Nfa l01 = concat(zbarl, suffix_closure(l));
  return union_of(l, concat(concat(l10, star(l00)), l01));
}

GeneratorMap extend_to_zero(const GeneratorMap& sigma) {
  const FiniteSemigroup s0 = adjoin_zero(sigma.target());
  auto symbols = sigma.symbols();
  symbols.push_back(fresh_label("z", symbols));
  auto images = sigma.images();
  images.push_back(*s0.zero());
  return GeneratorMap(std::move(symbols), s0, std::move(images));
}

VerificationReport verify_rees_quotient(const GeneratorMap& sigma, const ElemSet& ideal) {
  if (!is_ideal(sigma.target(), ideal)) throw Error(ErrorCode::NotAnIdeal, "T is not an ideal");
  auto report = make_report("rees-quotient");
  const LoopAutomaton la = loop_automaton(sigma);
  const Nfa& l = la.nfa;
  const auto r = representatives(sigma, ideal);
  const ReesQuotient q = rees_quotient(sigma, ideal);
  report.checks.push_back(
      compare_languages("quotient", loop_problem(*q.generators), rees_quotient_formula(l, r)));

  const Nfa rl = finite_language(l.alphabet(), r);
  const Nfa rbar = involution_image(rl);
  const ElemSet one{la.one()};
  report.checks.push_back(
      compare_languages("L1T", path_language(la, one, ideal), right_quotient(l, rbar)));
  report.checks.push_back(
      compare_languages("LTT", path_language(la, ideal, ideal), right_quotient(left_quotient(rl, l), rbar)));
  report.checks.push_back(
      compare_languages("LT1", path_language(la, ideal, one), left_quotient(rl, l)));
  return report;
}

VerificationReport verify_rees_quotient_literal(const GeneratorMap& sigma, const ElemSet& ideal) {
  if (!is_ideal(sigma.target(), ideal)) throw Error(ErrorCode::NotAnIdeal, "T is not an ideal");
  auto report = make_report("rees-quotient-literal");
  const ReesQuotient q = rees_quotient(sigma, ideal);
  report.checks.push_back(compare_languages(
      "quotient", loop_problem(*q.generators),
      rees_quotient_formula(loop_problem(sigma), representatives(sigma, ideal), true)));
  return report;
}

VerificationReport verify_subsemigroup_intersection(const GeneratorMap& tau, const ElemSet& t,
                                                    const std::vector<std::size_t>& x_symbols,
                                                    bool check_hypothesis) {
  const FiniteSemigroup& s = tau.target();
  if (t.empty()) throw Error(ErrorCode::EmptySubset, "T is empty");
  if (!is_subsemigroup(s, t)) throw Error(ErrorCode::NotASubsemigroup, "T is not a subsemigroup");
  const Subsemigroup sub = restrict_to(s, t);
  std::vector<std::string> symbols;
  std::vector<Elem> images;
  for (std::size_t x : x_symbols) {
    if (x >= tau.size()) throw Error(ErrorCode::IndexOutOfRange, "generator index");
    const auto it = std::lower_bound(t.begin(), t.end(), tau.image(x));
    if (it == t.end() || *it != tau.image(x)) {
      throw Error(ErrorCode::RestrictionNotOntoT, tau.symbols()[x] + " maps outside T");
    }
    symbols.push_back(tau.symbols()[x]);
    images.push_back(static_cast<Elem>(it - t.begin()));
  }
  if (generated_subsemigroup(sub.semigroup, images).size() != t.size()) {
    throw Error(ErrorCode::RestrictionNotOntoT, "restricted generators do not reach T");
  }
  if (check_hypothesis && !is_weakly_pru(s, t)) {
    throw Error(ErrorCode::HypothesisFailed, "T is not weakly pseudo-right-unitary");
  }
  const GeneratorMap sigma(symbols, sub.semigroup, images);
  const Alphabet y = Alphabet::hat(tau.symbols());
  auto report = make_report("subsemigroup");
  const Nfa lhs = relabel(loop_problem(sigma), y, x_symbols);
  const auto xs = hat_letters(y, x_symbols);
  const Nfa rhs = intersect(loop_problem(tau), words_over(y, xs));
  report.checks.push_back(compare_languages("intersection", lhs, rhs));
  return report;
}

VerificationReport verify_remove_zero(const GeneratorMap& sigma) {
  const GeneratorMap tau = extend_to_zero(sigma);
  ElemSet t(sigma.target().order());
  std::iota(t.begin(), t.end(), 0);
  auto report = verify_subsemigroup_intersection(tau, t, identity_map(sigma.size()));
  report.tag = "remove-zero";
  return report;
}

namespace {

VerificationReport adjoin_zero_report(const GeneratorMap& sigma, bool literal) {
  const GeneratorMap tau = extend_to_zero(sigma);
  const Alphabet y = Alphabet::hat(tau.symbols());
  const Nfa l = relabel(loop_problem(sigma), y, identity_map(sigma.size()));
  auto report = make_report(literal ? "adjoin-zero-literal" : "adjoin-zero");
  report.checks.push_back(
      compare_languages("adjoin-zero", loop_problem(tau), adjoin_zero_formula(l, literal)));
  return report;
}

}  // namespace

VerificationReport verify_adjoin_zero(const GeneratorMap& sigma) {
  return adjoin_zero_report(sigma, false);
}

VerificationReport verify_adjoin_zero_literal(const GeneratorMap& sigma) {
  return adjoin_zero_report(sigma, true);
}

namespace {

// star(apply(T, l)) together with the non-returning-loop cross-check.
struct SemitoreesParts {
  Nfa image;
  Nfa rhs;
};

SemitoreesParts semitorees_rhs(const GeneratorMap& sigma, const ReesStructure& rees,
                               const GeneratorMap& tau, const Nfa& l,
                               const std::vector<Word>& words) {
  const Transducer t = build_rees_transducer(sigma, rees, tau, words);
  Nfa image = simplify(apply(t, l));
  Nfa rhs = star(image);
  return {std::move(image), std::move(rhs)};
}

}  // namespace

VerificationReport verify_semitorees(const GeneratorMap& sigma, std::size_t i_count,
                                     std::size_t j_count, const SandwichMatrix& p,
                                     const SemitoreesOptions& options) {
  if (p.has_zero_entry()) throw Error(ErrorCode::ZeroEntry, "sandwich matrix has a ZERO entry");
  const ReesMatrix m = rees_matrix(sigma.target(), i_count, j_count, p, false);
  const GeneratorMap tau = options.tau ? *options.tau : full_generators(m.semigroup);
  if (!(tau.target() == m.semigroup)) {
    throw Error(ErrorCode::AlphabetMismatch, "tau does not generate M(S; I, J; P)");
  }
  const auto words = options.seed ? choose_words_randomized(sigma, *options.seed) : choose_words(sigma);
  auto report = make_report("semitorees");
  const LoopAutomaton lm = loop_automaton(tau);
  const auto parts = semitorees_rhs(sigma, m.structure, tau, loop_problem(sigma), words);
  report.checks.push_back(compare_languages("transduction", lm.nfa, parts.rhs));
  report.checks.push_back(compare_languages("non-returning", non_returning_loops(lm), parts.image));
  if (options.seed) report.notes.push_back("randomized representatives, seed " + std::to_string(*options.seed));
  return report;
}

VerificationReport verify_semitoreeszero(const GeneratorMap& sigma, std::size_t i_count,
                                         std::size_t j_count, const SandwichMatrix& p,
                                         const std::optional<GeneratorMap>& tau_opt) {
  const FiniteSemigroup& s = sigma.target();
  const ReesMatrix m0 = rees_matrix(s, i_count, j_count, p, true);
  const GeneratorMap tau = tau_opt ? *tau_opt : full_generators(m0.semigroup);
  if (!(tau.target() == m0.semigroup)) {
    throw Error(ErrorCode::AlphabetMismatch, "tau does not generate M0(S; I, J; P)");
  }

  // M' = M(S^0; I, J; P) with ZERO read as the adjoined zero.
  const GeneratorMap sigma0 = extend_to_zero(sigma);
  const FiniteSemigroup& s0 = sigma0.target();
  const Elem zero0 = *s0.zero();
  SandwichMatrix p0(p.rows(), p.cols());
  for (std::size_t j = 0; j < p.rows(); ++j) {
    for (std::size_t i = 0; i < p.cols(); ++i) p0.set(j, i, p.at(j, i) ? *p.at(j, i) : zero0);
  }
  const ReesMatrix mp = rees_matrix(s0, i_count, j_count, p0, false);
  ElemSet t;
  for (std::size_t i = 0; i < i_count; ++i) {
    for (std::size_t j = 0; j < j_count; ++j) t.push_back(mp.structure.encode(i, zero0, j));
  }
  std::sort(t.begin(), t.end());
  if (!is_ideal(mp.semigroup, t)) throw Error(ErrorCode::InternalError, "I x {0} x J is not an ideal");

  // M^0 -> M'/T
  const ReesQuotient q = rees_quotient(mp.semigroup, t);
  std::vector<Elem> iso(m0.semigroup.order());
  for (Elem e = 0; e < m0.semigroup.order(); ++e) {
    const auto triple = m0.structure.decode(e);
    iso[e] = triple ? q.projection[mp.structure.encode(triple->i, triple->s, triple->j)]
                    : *q.semigroup.zero();
  }
  require_isomorphism(m0.semigroup, q.semigroup, iso, "M0 -> M'/T");

  // tau' on M': same symbols, the zero sent to an element of T.
  std::vector<Elem> images;
  for (Elem e : tau.images()) {
    const auto triple = m0.structure.decode(e);
    images.push_back(triple ? mp.structure.encode(triple->i, triple->s, triple->j) : t.front());
  }
  const GeneratorMap tau_p(tau.symbols(), mp.semigroup, images);

  auto report = make_report("semitoreeszero");
  const Nfa l_s = relabel(loop_problem(sigma), Alphabet::hat(sigma0.symbols()), identity_map(sigma.size()));
  const Nfa rhs_s0 = simplify(adjoin_zero_formula(l_s));
  const Nfa rhs_mp = simplify(
      semitorees_rhs(sigma0, mp.structure, tau_p, rhs_s0, choose_words(sigma0)).rhs);
  const Nfa rhs_m0 = rees_quotient_formula(rhs_mp, representatives(tau_p, t));
  report.checks.push_back(compare_languages("quotient", loop_problem(tau), rhs_m0));
  report.checks.push_back(compare_languages("adjoin-zero", loop_problem(sigma0), rhs_s0));
  report.checks.push_back(compare_languages("transduction", loop_problem(tau_p), rhs_mp));
  return report;
}

std::optional<Column> find_admissible_column(const FiniteSemigroup& s, const SandwichMatrix& p) {
  auto left_multiples = [&](Elem x) {
    std::vector<char> in(s.order(), 0);
    for (Elem a = 0; a < s.order(); ++a) in[s.mul(a, x)] = 1;
    return in;
  };
  for (std::size_t i = 0; i < p.cols(); ++i) {
    for (std::size_t j = 0; j < p.rows(); ++j) {
      if (!p.at(j, i)) continue;
      const auto target = left_multiples(*p.at(j, i));
      bool ok = true;
      for (std::size_t jp = 0; jp < p.rows() && ok; ++jp) {
        if (!p.at(jp, i)) continue;
        const auto mine = left_multiples(*p.at(jp, i));
        for (Elem e = 0; e < s.order(); ++e) ok = ok && (!mine[e] || target[e]);
      }
      if (ok) return Column{i, j};
    }
  }
  return std::nullopt;
}

VerificationReport verify_unit_sandwich(const GeneratorMap& sigma, std::size_t i_count,
                                        std::size_t j_count, const SandwichMatrix& p) {
  const FiniteSemigroup& s = sigma.target();
  if (!s.identity()) throw Error(ErrorCode::NoIdentity, "the base must be a monoid");
  const Subgroup units = group_of_units(s);
  std::optional<Column> col;
  std::optional<Elem> unit_index;  // index in the unit group
  for (std::size_t i = 0; i < p.cols() && !col; ++i) {
    for (std::size_t j = 0; j < p.rows() && !col; ++j) {
      if (!p.at(j, i)) continue;
      const auto it = std::find(units.embedding.begin(), units.embedding.end(), *p.at(j, i));
      if (it != units.embedding.end()) {
        col = Column{i, j};
        unit_index = static_cast<Elem>(it - units.embedding.begin());
      }
    }
  }
  if (!col) throw Error(ErrorCode::NoUnitInP, "no entry of P is a unit");
  const Elem inverse = units.embedding[units.inverse[*unit_index]];
  const bool with_zero = p.has_zero_entry();
  const ReesMatrix m = rees_matrix(s, i_count, j_count, p, with_zero);

  // rho : S -> T, s -> (i, s P_ji^-1, j)
  std::vector<Elem> rho(s.order());
  for (Elem a = 0; a < s.order(); ++a) rho[a] = m.structure.encode(col->i, s.mul(a, inverse), col->j);
  ElemSet t(rho.begin(), rho.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  const Subsemigroup sub = restrict_to(m.semigroup, t);
  std::vector<Elem> rho_sub(s.order());
  for (Elem a = 0; a < s.order(); ++a) {
    rho_sub[a] = static_cast<Elem>(std::lower_bound(t.begin(), t.end(), rho[a]) - t.begin());
  }
  require_isomorphism(s, sub.semigroup, rho_sub, "rho");
  if (!is_weakly_pru(m.semigroup, t)) {
    throw Error(ErrorCode::HypothesisFailed, "column subsemigroup is not weakly pseudo-right-unitary");
  }

  // Y = X (through sigma rho) followed by one symbol per element of M.
  std::vector<std::string> symbols = sigma.symbols();
  std::vector<Elem> images;
  for (Elem e : sigma.images()) images.push_back(rho[e]);
  for (Elem e = 0; e < m.semigroup.order(); ++e) {
    symbols.push_back(fresh_label("m" + m.semigroup.label(e), symbols));
    images.push_back(e);
  }
  const GeneratorMap tau(symbols, m.semigroup, images);
  const auto xs = identity_map(sigma.size());

  auto report = make_report("unit-sandwich");
  const Alphabet y = Alphabet::hat(symbols);
  const Nfa lhs = relabel(loop_problem(sigma), y, xs);
  const Nfa rhs = intersect(loop_problem(tau), words_over(y, hat_letters(y, xs)));
  report.checks.push_back(compare_languages("intersection", lhs, rhs));
  merge_report(report, verify_subsemigroup_intersection(tau, t, xs), "column/");
  report.notes.push_back("column i=" + std::to_string(col->i + 1) + " j=" + std::to_string(col->j + 1));
  return report;
}

ReesDecomposition rees_decompose(const FiniteSemigroup& s) {
  if (!is_completely_zero_simple(s)) {
    throw Error(ErrorCode::NotCompletelyZeroSimple, "not completely zero-simple");
  }
  const Elem zero = *s.zero();
  const ElemSet idem = idempotents(s);
  const Elem e = *std::find_if(idem.begin(), idem.end(), [&](Elem x) { return x != zero; });
  Subgroup g = maximal_subgroup(s, e);
  const GreenClasses green = green_classes(s);

  std::vector<std::size_t> r_ids, l_ids;  // class ids of the nonzero D-class, first-occurrence order
  for (Elem a = 0; a < s.order(); ++a) {
    if (a == zero) continue;
    if (std::find(r_ids.begin(), r_ids.end(), green.r[a]) == r_ids.end()) r_ids.push_back(green.r[a]);
    if (std::find(l_ids.begin(), l_ids.end(), green.l[a]) == l_ids.end()) l_ids.push_back(green.l[a]);
  }
  const std::size_t ni = r_ids.size(), nj = l_ids.size();
  std::vector<Elem> r(ni), qv(nj);
  for (std::size_t i = 0; i < ni; ++i) {
    for (Elem a = 0; a < s.order(); ++a) {
      if (a != zero && green.r[a] == r_ids[i] && green.l[a] == green.l[e]) {
        r[i] = a;
        break;
      }
    }
  }
  for (std::size_t j = 0; j < nj; ++j) {
    for (Elem a = 0; a < s.order(); ++a) {
      if (a != zero && green.l[a] == l_ids[j] && green.r[a] == green.r[e]) {
        qv[j] = a;
        break;
      }
    }
  }
  SandwichMatrix p(nj, ni);
  for (std::size_t j = 0; j < nj; ++j) {
    for (std::size_t i = 0; i < ni; ++i) {
      const Elem x = s.mul(qv[j], r[i]);
      if (x == zero) continue;
      const auto it = std::find(g.embedding.begin(), g.embedding.end(), x);
      if (it == g.embedding.end()) throw Error(ErrorCode::InternalError, "sandwich entry outside H_e");
      p.set(j, i, static_cast<Elem>(it - g.embedding.begin()));
    }
  }
  ReesMatrix rm = rees_matrix(g.group, ni, nj, p, true);
  std::vector<Elem> phi(rm.semigroup.order());
  for (Elem x = 0; x < rm.semigroup.order(); ++x) {
    const auto triple = rm.structure.decode(x);
    phi[x] = triple ? s.mul(s.mul(r[triple->i], g.embedding[triple->s]), qv[triple->j]) : zero;
  }
  require_isomorphism(rm.semigroup, s, phi, "Rees decomposition");
  return ReesDecomposition{std::move(g), ni, nj, std::move(p), std::move(rm), std::move(phi)};
}

VerificationReport verify_czeros(const GeneratorMap& sigma) {
  const FiniteSemigroup& s = sigma.target();
  const ReesDecomposition d = rees_decompose(s);
  std::vector<Elem> inverse(s.order());
  for (Elem x = 0; x < d.isomorphism.size(); ++x) inverse[d.isomorphism[x]] = x;
  std::vector<Elem> images;
  for (Elem e : sigma.images()) images.push_back(inverse[e]);
  const GeneratorMap tau(sigma.symbols(), d.rees.semigroup, images);
  const GeneratorMap sigma_g = full_generators(d.group.group);

  auto report = make_report("czeros");
  report.checks.push_back(compare_languages("transport", loop_problem(sigma), loop_problem(tau)));
  merge_report(report, verify_semitoreeszero(sigma_g, d.i_count, d.j_count, d.sandwich, tau),
               "semitoreeszero/");
  merge_report(report, verify_unit_sandwich(sigma_g, d.i_count, d.j_count, d.sandwich),
               "unit-sandwich/");
  report.notes.push_back("maximal subgroup order " + std::to_string(d.group.group.order()) + ", I=" +
                         std::to_string(d.i_count) + ", J=" + std::to_string(d.j_count) + ", P=" +
                         matrix_tag(d.group.group, d.sandwich));
  return report;
}

VerificationReport verify_decompose_roundtrip(const FiniteSemigroup& s) {
  const ReesDecomposition d = rees_decompose(s);
  const auto iso = find_isomorphism(d.rees.semigroup, s);
  if (!iso) throw Error(ErrorCode::InternalError, "decomposition is not isomorphic to the input");
  auto report = make_report("decompose-roundtrip");
  const GeneratorMap sigma = full_generators(s);
  std::vector<Elem> images(s.order());
  for (Elem x = 0; x < iso->size(); ++x) images[(*iso)[x]] = x;
  const GeneratorMap tau(sigma.symbols(), d.rees.semigroup, images);
  report.checks.push_back(compare_languages("roundtrip", loop_problem(sigma), loop_problem(tau)));
  return report;
}

}  // namespace reesloop
