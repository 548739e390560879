#include "reesloop/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace reesloop {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Usage, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Usage, "cannot write " + path.string());
  out << text;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t to_count(const Line& line, const std::string& tok) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected a number, got '" + tok + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, "expected " + std::to_string(n) + " fields, got " +
                                      std::to_string(line.tokens.size()));
  }
}

// Wraps construction errors with the line that triggered them.
template <typename F>
auto at_line(std::size_t number, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(number, e.what());
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ' ';
    out += items[k];
  }
  return out;
}

std::string state_list(const std::vector<State>& states) {
  std::string out;
  for (State q : states) out += " " + std::to_string(q);
  return out;
}

}  // namespace

FiniteSemigroup parse_semigroup(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty semigroup file");
  expect_arity(lines[0], 1);
  const std::size_t n = to_count(lines[0], lines[0].tokens[0]);
  if (n == 0) throw ParseError(lines[0].number, "order must be positive");
  if (lines.size() < n + 2) {
    throw ParseError(lines.back().number, "expected a label line and " + std::to_string(n) + " rows");
  }
  expect_arity(lines[1], n);
  const auto& labels = lines[1].tokens;
  std::map<std::string, Elem> index;
  for (Elem e = 0; e < n; ++e) {
    if (!index.emplace(labels[e], e).second) {
      throw ParseError(lines[1].number, "duplicate label " + labels[e]);
    }
  }
  auto lookup = [&](const Line& line, const std::string& label) {
    const auto it = index.find(label);
    if (it == index.end()) throw ParseError(line.number, "unknown label '" + label + "'");
    return it->second;
  };
  std::vector<Elem> table;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[2 + r];
    expect_arity(line, n);
    for (const auto& tok : line.tokens) table.push_back(lookup(line, tok));
  }
  std::optional<Elem> zero, identity;
  std::size_t last = lines[1 + n].number;
  for (std::size_t k = n + 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    expect_arity(line, 2);
    last = line.number;
    if (line.tokens[0] == "zero") zero = lookup(line, line.tokens[1]);
    else if (line.tokens[0] == "identity") identity = lookup(line, line.tokens[1]);
    else throw ParseError(line.number, "unexpected '" + line.tokens[0] + "'");
  }
  try {
    return make_semigroup_flat(labels, std::move(table), zero, identity);
  } catch (const NonAssociativeError& e) {
    const auto [a, b, c] = e.triple();
    throw ParseError(lines[2 + a].number, e.what());
  } catch (const Error& e) {
    throw ParseError(last, e.what());
  }
}

std::string format_semigroup(const FiniteSemigroup& s) {
  std::ostringstream os;
  os << s.order() << "\n" << join(s.labels()) << "\n";
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < s.order(); ++b) os << (b ? " " : "") << s.label(s.mul(a, b));
    os << "\n";
  }
  if (s.zero()) os << "zero " << s.label(*s.zero()) << "\n";
  if (s.identity()) os << "identity " << s.label(*s.identity()) << "\n";
  return os.str();
}

Nfa parse_automaton(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> states;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> initial, final;
  std::vector<const Line*> moves;
  for (const auto& line : lines) {
    const auto& head = line.tokens[0];
    if (head == "alphabet") {
      std::vector<std::string> syms(line.tokens.begin() + 1, line.tokens.end());
      const bool plain = !syms.empty() && syms[0] == "plain";
      if (plain) syms.erase(syms.begin());
      alphabet = at_line(line.number, [&] { return plain ? Alphabet::plain(syms) : Alphabet::hat(syms); });
    } else if (head == "states") {
      expect_arity(line, 2);
      states = to_count(line, line.tokens[1]);
    } else if (head == "initial") {
      initial.emplace_back(line.number, std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } else if (head == "final") {
      final.emplace_back(line.number, std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } else {
      expect_arity(line, 3);
      moves.push_back(&line);
    }
  }
  if (!states) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing 'states' line");
  if (!alphabet) {
    std::vector<std::string> syms;
    for (const auto* line : moves) {
      std::string sym = line->tokens[1];
      if (sym == "-") continue;
      if (sym.front() == '~') sym.erase(0, 1);
      if (std::find(syms.begin(), syms.end(), sym) == syms.end()) syms.push_back(sym);
    }
    alphabet = Alphabet::hat(syms);
  }
  Nfa a(*alphabet, *states);
  auto state = [&](std::size_t number, const std::string& tok) {
    const std::size_t q = to_count(Line{number, {}}, tok);
    if (q >= *states) throw ParseError(number, "state " + tok + " out of range");
    return static_cast<State>(q);
  };
  for (const auto& [number, toks] : initial) {
    for (const auto& tok : toks) a.set_initial(state(number, tok));
  }
  for (const auto& [number, toks] : final) {
    for (const auto& tok : toks) a.set_final(state(number, tok));
  }
  for (const auto* line : moves) {
    const auto& sym = line->tokens[1];
    Letter x = kEpsilon;
    if (sym != "-") {
      const auto found = alphabet->find(sym);
      if (!found) throw ParseError(line->number, "unknown letter '" + sym + "'");
      x = *found;
    }
    a.add_transition(state(line->number, line->tokens[0]), x, state(line->number, line->tokens[2]));
  }
  return a;
}

std::string format_automaton(const Nfa& a) {
  std::ostringstream os;
  os << "alphabet" << (a.alphabet().involutive() ? "" : " plain");
  for (const auto& s : a.alphabet().base()) os << " " << s;
  os << "\nstates " << a.states() << "\n";
  os << "initial" << state_list(a.initial_states()) << "\n";
  os << "final" << state_list(a.final_states()) << "\n";
  for (const auto& t : a.transitions()) {
    os << t.from << " " << a.alphabet().name(t.letter) << " " << t.to << "\n";
  }
  return os.str();
}

std::string format_automaton(const Dfa& a) { return format_automaton(to_nfa(a)); }

Transducer parse_transducer(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<std::size_t> states;
  std::optional<Alphabet> input, output;
  const Line* initial = nullptr;
  const Line* final = nullptr;
  std::vector<const Line*> edges;
  for (const auto& line : lines) {
    const auto& head = line.tokens[0];
    std::vector<std::string> rest(line.tokens.begin() + 1, line.tokens.end());
    if (head == "states") {
      expect_arity(line, 2);
      states = to_count(line, line.tokens[1]);
    } else if (head == "input") {
      input = at_line(line.number, [&] { return Alphabet::hat(rest); });
    } else if (head == "output") {
      output = at_line(line.number, [&] { return Alphabet::hat(rest); });
    } else if (head == "initial") {
      initial = &line;
    } else if (head == "final") {
      final = &line;
    } else {
      expect_arity(line, 5);
      if (line.tokens[2] != "/") throw ParseError(line.number, "expected 'p u / v q'");
      edges.push_back(&line);
    }
  }
  const std::size_t end = lines.empty() ? 1 : lines.back().number;
  if (!states) throw ParseError(end, "missing 'states' line");
  if (!input || !output) throw ParseError(end, "missing 'input' or 'output' line");
  Transducer t(*input, *output, *states);
  auto state = [&](std::size_t number, const std::string& tok) {
    const std::size_t q = to_count(Line{number, {}}, tok);
    if (q >= *states) throw ParseError(number, "state " + tok + " out of range");
    return static_cast<State>(q);
  };
  if (initial) {
    for (std::size_t k = 1; k < initial->tokens.size(); ++k) t.set_initial(state(initial->number, initial->tokens[k]));
  }
  if (final) {
    for (std::size_t k = 1; k < final->tokens.size(); ++k) t.set_final(state(final->number, final->tokens[k]));
  }
  for (const auto* line : edges) {
    const auto& tok = line->tokens;
    at_line(line->number, [&] {
      t.add_edge(state(line->number, tok[0]), parse_word(*input, tok[1]), parse_word(*output, tok[3]),
                 state(line->number, tok[4]));
      return 0;
    });
  }
  return t;
}

std::string format_transducer(const Transducer& t) {
  std::ostringstream os;
  os << "states " << t.states() << "\n";
  os << "input " << join(t.input().base()) << "\n";
  os << "output " << join(t.output().base()) << "\n";
  os << "initial" << state_list(t.initial_states()) << "\n";
  os << "final" << state_list(t.final_states()) << "\n";
  for (const auto& e : t.edges()) {
    os << e.from << " " << format_word(t.input(), e.input) << " / " << format_word(t.output(), e.output)
       << " " << e.to << "\n";
  }
  return os.str();
}

ReesSpec parse_rees_spec(std::string_view text, const std::filesystem::path& dir) {
  const auto lines = tokenize(text);
  ReesSpec spec;
  bool have_base = false;
  std::size_t k = 0;
  for (; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto& head = line.tokens[0];
    if (head == "matrix") {
      expect_arity(line, 1);
      ++k;
      break;
    }
    expect_arity(line, 2);
    const auto& value = line.tokens[1];
    if (head == "base") {
      spec.base_path = value;
      const std::filesystem::path p = std::filesystem::path(value).is_absolute() ? std::filesystem::path(value) : dir / value;
      spec.base = at_line(line.number, [&] { return parse_semigroup(read_text_file(p)); });
      have_base = true;
    } else if (head == "I") {
      spec.i_count = to_count(line, value);
    } else if (head == "J") {
      spec.j_count = to_count(line, value);
    } else if (head == "zero") {
      if (value != "yes" && value != "no") throw ParseError(line.number, "zero must be yes or no");
      spec.with_zero = value == "yes";
    } else {
      throw ParseError(line.number, "unexpected '" + head + "'");
    }
  }
  const std::size_t end = lines.empty() ? 1 : lines.back().number;
  if (!have_base) throw ParseError(end, "missing 'base' line");
  if (spec.i_count == 0 || spec.j_count == 0) throw ParseError(end, "I and J must be positive");
  if (lines.size() - k != spec.j_count) {
    throw ParseError(end, "expected " + std::to_string(spec.j_count) + " matrix rows");
  }
  spec.sandwich = SandwichMatrix(spec.j_count, spec.i_count);
  for (std::size_t j = 0; j < spec.j_count; ++j) {
    const Line& line = lines[k + j];
    expect_arity(line, spec.i_count);
    for (std::size_t i = 0; i < spec.i_count; ++i) {
      const auto& tok = line.tokens[i];
      if (tok == "0" && spec.with_zero) continue;
      const auto e = spec.base.find(tok);
      if (!e) throw ParseError(line.number, "unknown label '" + tok + "'");
      spec.sandwich.set(j, i, *e);
    }
  }
  return spec;
}

std::string format_rees_spec(const ReesSpec& spec) {
  std::ostringstream os;
  os << "base " << spec.base_path << "\nI " << spec.i_count << "\nJ " << spec.j_count << "\nzero "
     << (spec.with_zero ? "yes" : "no") << "\nmatrix\n";
  for (std::size_t j = 0; j < spec.j_count; ++j) {
    for (std::size_t i = 0; i < spec.i_count; ++i) {
      const auto e = spec.sandwich.at(j, i);
      os << (i ? " " : "") << (e ? spec.base.label(*e) : "0");
    }
    os << "\n";
  }
  return os.str();
}

std::string to_dot(const Nfa& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n";
  for (State q = 0; q < a.states(); ++q) {
    os << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
    if (a.is_initial(q)) os << "  start" << q << " [shape=point];\n  start" << q << " -> q" << q << ";\n";
  }
  for (const auto& t : a.transitions()) {
    os << "  q" << t.from << " -> q" << t.to << " [label=\"" << a.alphabet().name(t.letter) << "\"";
    if (t.letter == kEpsilon) os << ", style=dotted";
    else if (!a.alphabet().is_positive(t.letter)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace reesloop
