// Command-line front end for the reesloop library.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "reesloop/corpus.hpp"
#include "reesloop/io.hpp"
#include "reesloop/loops.hpp"
#include "reesloop/theorems.hpp"

namespace fs = std::filesystem;
using namespace reesloop;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

FiniteSemigroup load_semigroup(const std::string& path) {
  return parse_semigroup(read_text_file(path));
}

ReesSpec load_rees_spec(const std::string& path) {
  return parse_rees_spec(read_text_file(path), fs::path(path).parent_path());
}

Elem find_label(const FiniteSemigroup& s, const std::string& label) {
  const auto e = s.find(label);
  if (!e) throw Error(ErrorCode::Usage, "no element labelled '" + label + "'");
  return *e;
}

ElemSet find_labels(const FiniteSemigroup& s, const std::vector<std::string>& labels) {
  ElemSet out;
  for (const auto& l : labels) out.push_back(find_label(s, l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// `sym:label` pairs, or every element under its own label.
GeneratorMap parse_generators(const FiniteSemigroup& s, const std::vector<std::string>& specs) {
  if (specs.empty()) return full_generators(s);
  std::vector<std::string> symbols;
  std::vector<Elem> images;
  for (const auto& spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
      throw Error(ErrorCode::Usage, "generator must be written sym:label, got '" + spec + "'");
    }
    symbols.push_back(spec.substr(0, colon));
    images.push_back(find_label(s, spec.substr(colon + 1)));
  }
  return GeneratorMap(symbols, s, images);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
}

// Zero designated in the file, else a zero element found in the table.
std::optional<Elem> zero_element(const FiniteSemigroup& s) {
  if (s.zero()) return s.zero();
  for (Elem z = 0; z < s.order(); ++z) {
    bool ok = true;
    for (Elem a = 0; a < s.order() && ok; ++a) ok = s.mul(a, z) == z && s.mul(z, a) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<Elem> identity_element(const FiniteSemigroup& s) {
  if (s.identity()) return s.identity();
  for (Elem e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (Elem a = 0; a < s.order() && ok; ++a) ok = s.mul(a, e) == a && s.mul(e, a) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

// A semigroup table, or a Rees spec (first line `base ...`) built into its table.
FiniteSemigroup load_table_or_spec(const std::string& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.compare(first, 4, "base") != 0) break;
    const ReesSpec spec = parse_rees_spec(text, fs::path(path).parent_path());
    return rees_matrix(spec.base, spec.i_count, spec.j_count, spec.sandwich, spec.with_zero).semigroup;
  }
  return parse_semigroup(text);
}

FiniteSemigroup with_zero_designated(const FiniteSemigroup& s, Elem zero) {
  return make_semigroup_flat(s.labels(), {s.table().begin(), s.table().end()}, zero, s.identity());
}

int cmd_info(const std::string& file) {
  const FiniteSemigroup s = load_table_or_spec(file);
  const auto idem = idempotents(s);
  std::cout << "order " << s.order() << ", " << idem.size() << (idem.size() == 1 ? " idempotent" : " idempotents")
            << "\n";
  const auto zero = zero_element(s);
  const auto one = identity_element(s);
  std::cout << "zero: " << (zero ? s.label(*zero) : "none") << "\n";
  std::cout << "identity: " << (one ? s.label(*one) : "none") << "\n";
  std::cout << "ideals: " << all_ideals(s).size() << "\n";
  std::cout << "completely zero-simple: ";
  if (!zero) {
    std::cout << "no (no zero element)\n";
    return 0;
  }
  const FiniteSemigroup sz = with_zero_designated(s, *zero);
  if (!is_completely_zero_simple(sz)) {
    std::cout << "no\n";
    return 0;
  }
  const auto d = rees_decompose(sz);
  std::cout << "yes, max subgroup order " << d.group.group.order() << "\n";
  return 0;
}

int cmd_loop(const std::string& file, const std::vector<std::string>& gens, const std::string& out,
             bool dot) {
  const FiniteSemigroup s = load_semigroup(file);
  const LoopAutomaton la = loop_automaton(parse_generators(s, gens));
  const std::string dfa = format_automaton(minimize(determinize(la.nfa)));
  if (dot) {
    std::cout << to_dot(la);
    if (!out.empty()) write_text_file(out, dfa);
  } else {
    emit(out, dfa);
  }
  return 0;
}

int cmd_cayley(const std::string& file, const std::vector<std::string>& gens, const std::string& out,
               bool dot) {
  const FiniteSemigroup s = load_semigroup(file);
  const CayleyGraph g = cayley_graph(lift_to_monoid(parse_generators(s, gens)));
  if (dot) {
    emit(out, to_dot(g));
    return 0;
  }
  std::ostringstream os;
  for (Elem a = 0; a < g.monoid().order(); ++a) {
    for (std::size_t x = 0; x < g.generators.size(); ++x) {
      os << g.monoid().label(a) << " " << g.generators.symbols()[x] << " "
         << g.monoid().label(g.target(a, x)) << "\n";
    }
  }
  emit(out, os.str());
  return 0;
}

int cmd_rees(const std::string& file, const std::string& out) {
  const ReesSpec spec = load_rees_spec(file);
  emit(out, format_semigroup(
                rees_matrix(spec.base, spec.i_count, spec.j_count, spec.sandwich, spec.with_zero).semigroup));
  return 0;
}

int cmd_quotient(const std::string& file, const std::vector<std::string>& ideal, const std::string& out) {
  const FiniteSemigroup s = load_semigroup(file);
  emit(out, format_semigroup(rees_quotient(s, find_labels(s, ideal)).semigroup));
  return 0;
}

int cmd_check_ideal(const std::string& file, const std::vector<std::string>& subset) {
  const FiniteSemigroup s = load_semigroup(file);
  const bool ok = is_ideal(s, find_labels(s, subset));
  std::cout << "ideal: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : kExitFail;
}

int cmd_check_pru(const std::string& file, const std::vector<std::string>& subset) {
  const FiniteSemigroup s = load_semigroup(file);
  const ElemSet t = find_labels(s, subset);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "right unitary: " << yn(is_right_unitary(s, t)) << "\n";
  std::cout << "pseudo-right-unitary: " << yn(is_pseudo_right_unitary(s, t)) << "\n";
  std::cout << "weakly pseudo-right-unitary: " << yn(is_weakly_pru(s, t)) << "\n";
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& out) {
  FiniteSemigroup s = load_table_or_spec(file);
  if (!s.zero()) {
    const auto zero = zero_element(s);
    if (!zero) throw Error(ErrorCode::NoZero, "the semigroup has no zero element");
    s = with_zero_designated(s, *zero);
  }
  const ReesDecomposition d = rees_decompose(s);
  const FiniteSemigroup& g = d.group.group;
  std::cout << "maximal subgroup order " << g.order() << "\n";
  std::cout << "I " << d.i_count << "\nJ " << d.j_count << "\nmatrix\n";
  for (std::size_t j = 0; j < d.j_count; ++j) {
    for (std::size_t i = 0; i < d.i_count; ++i) {
      const auto e = d.sandwich.at(j, i);
      std::cout << (i ? " " : "") << (e ? g.label(*e) : "0");
    }
    std::cout << "\n";
  }
  std::cout << "isomorphism\n";
  for (Elem x = 0; x < d.isomorphism.size(); ++x) {
    std::cout << d.rees.semigroup.label(x) << " " << s.label(d.isomorphism[x]) << "\n";
  }
  if (!out.empty()) write_text_file(out, format_semigroup(d.rees.semigroup));
  return 0;
}

struct VerifyArgs {
  std::string tag;
  std::string file;
  std::vector<std::string> gens;
  std::vector<std::string> ideal;
  std::vector<std::string> subset;
  CorpusBounds bounds;
  bool verbose = false;
};

std::vector<Instance> file_instances(const VerifyArgs& a) {
  std::vector<Instance> out;
  const std::string id = fs::path(a.file).filename().string();
  auto add = [&](std::string suffix, std::function<VerificationReport()> run) {
    const std::string full = id + suffix;
    out.push_back({a.tag, full, [full, run = std::move(run)] {
                     auto r = run();
                     r.instance = full;
                     return r;
                   }});
  };
  if (a.tag == "semitorees" || a.tag == "semitoreeszero" || a.tag == "unit-sandwich") {
    const ReesSpec spec = load_rees_spec(a.file);
    const GeneratorMap sigma = parse_generators(spec.base, a.gens);
    const auto seed = a.bounds.seed;
    const auto& tag = a.tag;
    add("", [spec, sigma, tag, seed] {
      if (tag == "semitorees") return verify_semitorees(sigma, spec.i_count, spec.j_count, spec.sandwich);
      if (tag == "semitoreeszero") return verify_semitoreeszero(sigma, spec.i_count, spec.j_count, spec.sandwich);
      return verify_unit_sandwich(sigma, spec.i_count, spec.j_count, spec.sandwich);
    });
    if (a.tag == "semitorees") {
      add("-random", [spec, sigma, seed] {
        SemitoreesOptions opt;
        opt.seed = seed;
        return verify_semitorees(sigma, spec.i_count, spec.j_count, spec.sandwich, opt);
      });
    }
    return out;
  }
  FiniteSemigroup s = load_semigroup(a.file);
  if ((a.tag == "czeros" || a.tag == "decompose-roundtrip") && !s.zero()) {
    if (const auto zero = zero_element(s)) s = with_zero_designated(s, *zero);
  }
  const GeneratorMap sigma = parse_generators(s, a.gens);
  if (a.tag == "rees-quotient") {
    std::vector<ElemSet> ideals;
    if (a.ideal.empty()) ideals = all_ideals(s);
    else ideals.push_back(find_labels(s, a.ideal));
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      add("-ideal" + std::to_string(k), [sigma, t = ideals[k]] { return verify_rees_quotient(sigma, t); });
    }
  } else if (a.tag == "subsemigroup") {
    if (a.subset.empty()) throw Error(ErrorCode::Usage, "subsemigroup needs --subset");
    const ElemSet t = find_labels(s, a.subset);
    std::vector<std::size_t> xs;
    for (std::size_t x = 0; x < sigma.size(); ++x) {
      if (std::binary_search(t.begin(), t.end(), sigma.image(x))) xs.push_back(x);
    }
    add("", [sigma, t, xs] { return verify_subsemigroup_intersection(sigma, t, xs); });
  } else if (a.tag == "remove-zero") {
    add("", [sigma] { return verify_remove_zero(sigma); });
  } else if (a.tag == "adjoin-zero") {
    add("", [sigma] { return verify_adjoin_zero(sigma); });
  } else if (a.tag == "czeros") {
    add("", [sigma] { return verify_czeros(sigma); });
  } else {
    add("", [s] { return verify_decompose_roundtrip(s); });
  }
  return out;
}

int report(const std::vector<Outcome>& outcomes, bool verbose) {
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    std::cout << o.result_line() << "\n";
    if (verbose && o.report) std::cout << o.report->summary();
    passed += o.passed() ? 1 : 0;
  }
  std::cout << "summary: " << passed << "/" << outcomes.size() << " PASS\n";
  return passed == outcomes.size() ? 0 : kExitFail;
}

int cmd_verify(const VerifyArgs& a) {
  if (!is_theorem_tag(a.tag)) throw Error(ErrorCode::Usage, "unknown theorem tag '" + a.tag + "'");
  const auto instances = a.file.empty() ? corpus_instances(a.tag, a.bounds) : file_instances(a);
  return report(run_instances(instances, default_workers()), a.verbose);
}

int cmd_corpus(const std::vector<std::string>& tags, const CorpusBounds& bounds, bool verbose) {
  std::vector<Instance> all;
  for (const auto& tag : tags.empty() ? kTheoremTags : tags) {
    auto part = corpus_instances(tag, bounds);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return report(run_instances(all, default_workers()), verbose);
}

void add_bounds(CLI::App* cmd, CorpusBounds& b) {
  cmd->add_option("--max-order", b.max_order, "Largest enumerated semigroup order")->check(CLI::Range(1, 4));
  cmd->add_option("--max-dim", b.max_dim, "Largest |I| and |J|")->check(CLI::Range(1, 3));
  cmd->add_option("--max-group", b.max_group, "Largest cyclic group used as a base")->check(CLI::Range(1, 4));
  cmd->add_option("--seed", b.seed, "Seed for randomized representatives");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop problems of finite semigroups and Rees matrix constructions"};
  app.require_subcommand(1);

  std::string file, out;
  std::vector<std::string> gens, labels;
  bool dot = false;

  auto* info = app.add_subcommand("info", "Summarize a semigroup table");
  info->add_option("file", file, "Semigroup table")->required();

  auto* loop = app.add_subcommand("loop", "Minimal DFA of the loop problem");
  loop->add_option("file", file, "Semigroup table")->required();
  loop->add_option("--gen", gens, "Generator as sym:label (repeatable; default all elements)");
  loop->add_option("-o,--output", out, "Write the DFA here");
  loop->add_flag("--dot", dot, "Print the loop automaton as DOT");

  auto* cayley = app.add_subcommand("cayley", "Cayley graph of S^1");
  cayley->add_option("file", file, "Semigroup table")->required();
  cayley->add_option("--gen", gens, "Generator as sym:label (repeatable)");
  cayley->add_option("-o,--output", out, "Output file");
  cayley->add_flag("--dot", dot, "DOT output");

  auto* rees = app.add_subcommand("rees", "Build a Rees matrix semigroup from a spec file");
  rees->add_option("spec", file, "Rees spec file")->required();
  rees->add_option("-o,--output", out, "Output file");

  auto* quotient = app.add_subcommand("quotient", "Rees quotient by an ideal");
  quotient->add_option("file", file, "Semigroup table")->required();
  quotient->add_option("--ideal", labels, "Labels of the ideal")->required();
  quotient->add_option("-o,--output", out, "Output file");

  auto* azero = app.add_subcommand("adjoin-zero", "Adjoin a zero");
  azero->add_option("file", file, "Semigroup table")->required();
  azero->add_option("-o,--output", out, "Output file");

  auto* aone = app.add_subcommand("adjoin-identity", "Adjoin an identity");
  aone->add_option("file", file, "Semigroup table")->required();
  aone->add_option("-o,--output", out, "Output file");

  auto* cideal = app.add_subcommand("check-ideal", "Is a subset an ideal");
  cideal->add_option("file", file, "Semigroup table")->required();
  cideal->add_option("--subset", labels, "Labels of the subset")->required();

  auto* cpru = app.add_subcommand("check-pru", "Unitary-type properties of a subsemigroup");
  cpru->add_option("file", file, "Semigroup table")->required();
  cpru->add_option("--subset", labels, "Labels of the subsemigroup")->required();

  auto* decompose = app.add_subcommand("decompose", "Rees decomposition of a completely zero-simple semigroup");
  decompose->add_option("file", file, "Semigroup table")->required();
  decompose->add_option("-o,--output", out, "Write the M0(G; I, J; P) table here");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check one identity on a file or on its standard corpus");
  verify->add_option("tag", va.tag, "One of: rees-quotient subsemigroup remove-zero adjoin-zero semitorees "
                                    "semitoreeszero unit-sandwich czeros decompose-roundtrip")
      ->required();
  verify->add_option("--file", va.file, "Semigroup table, or Rees spec for the Rees tags");
  verify->add_option("--gen", va.gens, "Generator as sym:label (repeatable)");
  verify->add_option("--ideal", va.ideal, "Ideal labels for rees-quotient");
  verify->add_option("--subset", va.subset, "Subsemigroup labels for subsemigroup");
  verify->add_flag("-v,--verbose", va.verbose, "Print per-check details");
  add_bounds(verify, va.bounds);

  std::vector<std::string> tags;
  CorpusBounds cb;
  bool verbose = false;
  auto* corpus = app.add_subcommand("corpus", "Run every identity over bounded corpora");
  corpus->add_option("--tags", tags, "Restrict to these tags")->delimiter(',');
  corpus->add_flag("-v,--verbose", verbose, "Print per-check details");
  add_bounds(corpus, cb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) return cmd_info(file);
    if (*loop) return cmd_loop(file, gens, out, dot);
    if (*cayley) return cmd_cayley(file, gens, out, dot);
    if (*rees) return cmd_rees(file, out);
    if (*quotient) return cmd_quotient(file, labels, out);
    if (*azero) {
      emit(out, format_semigroup(adjoin_zero(load_semigroup(file))));
      return 0;
    }
    if (*aone) {
      emit(out, format_semigroup(adjoin_identity(load_semigroup(file))));
      return 0;
    }
    if (*cideal) return cmd_check_ideal(file, labels);
    if (*cpru) return cmd_check_pru(file, labels);
    if (*decompose) return cmd_decompose(file, out);
    if (*verify) return cmd_verify(va);
    if (*corpus) {
      for (const auto& t : tags) {
        if (!is_theorem_tag(t)) throw Error(ErrorCode::Usage, "unknown theorem tag '" + t + "'");
      }
      return cmd_corpus(tags, cb, verbose);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
