#include "redkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "redkit/errors.hpp"

namespace redkit {

namespace {

struct Line {
  int number;  // 1-based
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text, bool keep_blank) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    size_t end = (nl == std::string::npos) ? text.size() : nl;
    ++number;
    Line line{number, {}};
    size_t i = pos;
    while (i < end) {
      while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      size_t start = i;
      while (i < end && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i > start) line.tokens.push_back(text.substr(start, i - start));
    }
    if (!line.tokens.empty() || keep_blank) out.push_back(std::move(line));
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

long long to_int(const std::string& tok, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line);
  return v;
}

int to_index(const std::string& tok, int bound, const char* what, int line) {
  long long v = to_int(tok, line);
  if (v < 0 || v >= bound)
    throw ParseError(std::string(what) + " " + tok + " out of range", line);
  return int(v);
}

bool is_comment(const Line& l) { return !l.tokens.empty() && l.tokens[0] == "c"; }

const Line& expect_line(const std::vector<Line>& lines, size_t i, const char* what) {
  if (i >= lines.size())
    throw ParseError(std::string("unexpected end of input, expected ") + what,
                     lines.empty() ? 1 : lines.back().number + 1);
  return lines[i];
}

}  // namespace

Format format_from_name(std::string_view name) {
  if (name == "dimacs-cnf" || name == "cnf") return Format::dimacs_cnf;
  if (name == "setsys") return Format::setsys;
  if (name == "graph") return Format::graph;
  if (name == "subsetsum") return Format::subsetsum;
  if (name == "circuit") return Format::circuit;
  throw ParameterError("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::dimacs_cnf: return "dimacs-cnf";
    case Format::setsys: return "setsys";
    case Format::graph: return "graph";
    case Format::subsetsum: return "subsetsum";
    case Format::circuit: return "circuit";
  }
  return "?";
}

CnfFormula parse_cnf(const std::string& text) {
  auto lines = tokenize(text, false);
  size_t i = 0;
  while (i < lines.size() && is_comment(lines[i])) ++i;
  const Line& hdr = expect_line(lines, i, "'p cnf n m' header");
  if (hdr.tokens.size() != 4 || hdr.tokens[0] != "p" || hdr.tokens[1] != "cnf")
    throw ParseError("expected 'p cnf n m' header", hdr.number);
  long long n = to_int(hdr.tokens[2], hdr.number);
  long long m = to_int(hdr.tokens[3], hdr.number);
  if (n < 0 || m < 0) throw ParseError("negative count in header", hdr.number);
  ++i;

  std::vector<Clause> clauses;
  Clause current;
  std::set<int> seen_vars;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (is_comment(l)) continue;
    for (const std::string& tok : l.tokens) {
      long long lit = to_int(tok, l.number);
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        seen_vars.clear();
        continue;
      }
      long long var = lit > 0 ? lit : -lit;
      if (var > n) throw ParseError("literal " + tok + " out of range", l.number);
      if (!seen_vars.insert(int(var)).second)
        throw ParseError("variable " + std::to_string(var) + " repeated in clause", l.number);
      current.push_back(Lit{int(var) - 1, lit > 0});
    }
  }
  if (!current.empty())
    throw ParseError("clause not terminated by 0", lines.back().number);
  if ((long long)clauses.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " clauses, found " +
                         std::to_string(clauses.size()),
                     hdr.number);
  return make_cnf(int(n), std::move(clauses));
}

std::string serialize(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Lit& l : c) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

SetSystem parse_set_system(const std::string& text) {
  auto lines = tokenize(text, true);
  size_t i = 0;
  while (i < lines.size() && is_comment(lines[i])) ++i;
  const Line& hdr = expect_line(lines, i, "'p setsys n m' header");
  bool multiset = false;
  if (hdr.tokens.size() == 5 && hdr.tokens[4] == "multiset")
    multiset = true;
  else if (hdr.tokens.size() != 4)
    throw ParseError("expected 'p setsys n m [multiset]' header", hdr.number);
  if (hdr.tokens[0] != "p" || hdr.tokens[1] != "setsys")
    throw ParseError("expected 'p setsys n m [multiset]' header", hdr.number);
  long long n = to_int(hdr.tokens[2], hdr.number);
  long long m = to_int(hdr.tokens[3], hdr.number);
  if (n < 0 || m < 0) throw ParseError("negative count in header", hdr.number);
  ++i;

  long long size_bound = -1;
  if (i < lines.size() && !lines[i].tokens.empty() && lines[i].tokens[0] == "size-bound") {
    if (lines[i].tokens.size() != 2)
      throw ParseError("expected 'size-bound k'", lines[i].number);
    size_bound = to_int(lines[i].tokens[1], lines[i].number);
    if (size_bound < 0) throw ParseError("negative size bound", lines[i].number);
    ++i;
  }

  std::vector<Bits> sets;
  std::set<Bits> distinct;
  for (long long s = 0; s < m; ++s) {
    const Line& l = expect_line(lines, i, "a set line");
    ++i;
    Bits b(static_cast<int>(n));
    for (const std::string& tok : l.tokens) b.set(to_index(tok, int(n), "element", l.number));
    if (size_bound >= 0 && b.count() > size_bound)
      throw ParseError("set of size " + std::to_string(b.count()) +
                           " exceeds declared size-bound " + std::to_string(size_bound),
                       l.number);
    if (!multiset && !distinct.insert(b).second)
      throw ParseError("duplicate set in a non-multiset file", l.number);
    sets.push_back(std::move(b));
  }
  for (; i < lines.size(); ++i)
    if (!lines[i].tokens.empty())
      throw ParseError("unexpected content after the declared sets", lines[i].number);
  return make_set_system(int(n), std::move(sets), multiset);
}

std::string serialize(const SetSystem& s) {
  std::ostringstream out;
  out << "p setsys " << s.universe_size << ' ' << s.sets.size();
  if (s.multiset) out << " multiset";
  out << '\n';
  for (const Bits& b : s.sets) {
    bool first = true;
    for (int e : b.elements()) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Graph parse_graph(const std::string& text) {
  auto lines = tokenize(text, false);
  size_t i = 0;
  while (i < lines.size() && is_comment(lines[i])) ++i;
  const Line& hdr = expect_line(lines, i, "'p graph n m' header");
  if (hdr.tokens.size() != 4 || hdr.tokens[0] != "p" || hdr.tokens[1] != "graph")
    throw ParseError("expected 'p graph n m' header", hdr.number);
  long long n = to_int(hdr.tokens[2], hdr.number);
  long long m = to_int(hdr.tokens[3], hdr.number);
  if (n < 0 || m < 0) throw ParseError("negative count in header", hdr.number);
  ++i;

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> distinct;
  for (long long e = 0; e < m; ++e) {
    const Line& l = expect_line(lines, i, "an edge line");
    ++i;
    if (l.tokens.size() != 2) throw ParseError("expected an edge line 'u v'", l.number);
    int u = to_index(l.tokens[0], int(n), "vertex", l.number);
    int v = to_index(l.tokens[1], int(n), "vertex", l.number);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), l.number);
    auto key = std::minmax(u, v);
    if (!distinct.insert(key).second)
      throw ParseError("duplicate edge " + l.tokens[0] + " " + l.tokens[1], l.number);
    edges.emplace_back(u, v);
  }

  std::optional<Bits> terminals;
  if (i < lines.size() && lines[i].tokens[0] == "terminals") {
    Bits t(static_cast<int>(n));
    for (size_t j = 1; j < lines[i].tokens.size(); ++j)
      t.set(to_index(lines[i].tokens[j], int(n), "terminal", lines[i].number));
    terminals = std::move(t);
    ++i;
  }
  std::optional<int> bipartition_a;
  int bipartition_line = 0;
  if (i < lines.size() && lines[i].tokens[0] == "bipartition") {
    if (lines[i].tokens.size() != 2)
      throw ParseError("expected 'bipartition a'", lines[i].number);
    long long a = to_int(lines[i].tokens[1], lines[i].number);
    if (a < 0 || a > n)
      throw ParseError("bipartition size " + lines[i].tokens[1] + " out of range",
                       lines[i].number);
    bipartition_a = int(a);
    bipartition_line = lines[i].number;
    ++i;
  }
  if (i < lines.size())
    throw ParseError("unexpected content after graph data", lines[i].number);
  try {
    return make_graph(int(n), std::move(edges), std::move(terminals), bipartition_a);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), bipartition_line);
  }
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "p graph " << g.num_vertices << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  if (g.terminals) {
    out << "terminals";
    for (int t : g.terminals->elements()) out << ' ' << t;
    out << '\n';
  }
  if (g.bipartition_a) out << "bipartition " << *g.bipartition_a << '\n';
  return out.str();
}

SubsetSumInstance parse_subset_sum(const std::string& text) {
  auto lines = tokenize(text, false);
  std::vector<mpz_class> items;
  mpz_class target;
  bool have_target = false;
  auto parse_value = [](const std::string& tok, int line) {
    for (char ch : tok)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("expected a nonnegative decimal integer, got '" + tok + "'", line);
    return mpz_class(tok, 10);
  };
  for (const Line& l : lines) {
    if (is_comment(l)) continue;
    if (have_target)
      throw ParseError("unexpected content after the target line", l.number);
    if (l.tokens[0] == "t") {
      if (l.tokens.size() != 2) throw ParseError("expected 't <target>'", l.number);
      target = parse_value(l.tokens[1], l.number);
      have_target = true;
      continue;
    }
    if (l.tokens.size() != 1)
      throw ParseError("expected one item value per line", l.number);
    mpz_class v = parse_value(l.tokens[0], l.number);
    if (v <= 0) throw ParseError("item values must be positive", l.number);
    items.push_back(std::move(v));
  }
  if (!have_target)
    throw ParseError("missing final 't <target>' line",
                     lines.empty() ? 1 : lines.back().number);
  return make_subset_sum(std::move(items), std::move(target));
}

std::string serialize(const SubsetSumInstance& s) {
  std::ostringstream out;
  for (const mpz_class& v : s.items) out << v.get_str() << '\n';
  out << "t " << s.target.get_str() << '\n';
  return out.str();
}

VspCircuit parse_circuit(const std::string& text) {
  auto lines = tokenize(text, false);
  std::vector<Gate> gates;
  std::optional<std::vector<long long>> labels;
  std::optional<int> output;
  size_t i = 0;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (is_comment(l)) continue;
    if (l.tokens[0] == "label" || l.tokens[0] == "out") break;
    long long idx = to_int(l.tokens[0], l.number);
    if (idx != (long long)gates.size())
      throw ParseError("expected gate index " + std::to_string(gates.size()) + ", got " +
                           l.tokens[0],
                       l.number);
    if (l.tokens.size() < 2) throw ParseError("missing gate kind", l.number);
    const std::string& kind_tok = l.tokens[1];
    GateKind kind;
    if (kind_tok == "INPUT") kind = GateKind::input;
    else if (kind_tok == "AND") kind = GateKind::and_gate;
    else if (kind_tok == "OR") kind = GateKind::or_gate;
    else if (kind_tok == "NOT") kind = GateKind::not_gate;
    else throw ParseError("unknown gate kind '" + kind_tok + "'", l.number);
    Gate g;
    g.kind = kind;
    for (size_t j = 2; j < l.tokens.size(); ++j)
      g.in.push_back(to_index(l.tokens[j], int(gates.size()), "gate input", l.number));
    size_t arity = g.in.size();
    if (kind == GateKind::input && arity != 0)
      throw ParseError("INPUT gate takes no inputs", l.number);
    if (kind == GateKind::not_gate && arity != 1)
      throw ParseError("NOT gate takes exactly one input", l.number);
    if ((kind == GateKind::and_gate || kind == GateKind::or_gate) && (arity < 1 || arity > 2))
      throw ParseError("AND/OR gate takes one or two inputs", l.number);
    gates.push_back(std::move(g));
  }
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (is_comment(l)) continue;
    if (l.tokens[0] == "out") break;
    if (l.tokens[0] != "label")
      throw ParseError("expected 'label', 'out', or a gate line", l.number);
    if (l.tokens.size() != 3) throw ParseError("expected 'label idx v'", l.number);
    if (!labels) labels.emplace(gates.size(), 0);
    int idx = to_index(l.tokens[1], int(gates.size()), "gate index", l.number);
    (*labels)[idx] = to_int(l.tokens[2], l.number);
  }
  const Line& out_line = expect_line(lines, i, "'out idx' line");
  if (out_line.tokens.size() != 2 || out_line.tokens[0] != "out")
    throw ParseError("expected final 'out idx' line", out_line.number);
  output = to_index(out_line.tokens[1], int(gates.size()), "output gate", out_line.number);
  ++i;
  if (i < lines.size())
    throw ParseError("unexpected content after the output line", lines[i].number);
  if (gates.empty()) throw ParseError("circuit has no gates", out_line.number);
  return make_circuit(std::move(gates), *output, std::move(labels));
}

std::string serialize(const VspCircuit& c) {
  std::ostringstream out;
  for (int i = 0; i < c.num_gates(); ++i) {
    const Gate& g = c.gates[i];
    out << i << ' ';
    switch (g.kind) {
      case GateKind::input: out << "INPUT"; break;
      case GateKind::and_gate: out << "AND"; break;
      case GateKind::or_gate: out << "OR"; break;
      case GateKind::not_gate: out << "NOT"; break;
    }
    for (int j : g.in) out << ' ' << j;
    out << '\n';
  }
  if (c.labels)
    for (int i = 0; i < c.num_gates(); ++i)
      out << "label " << i << ' ' << (*c.labels)[i] << '\n';
  out << "out " << c.output << '\n';
  return out.str();
}

Instance parse_instance(Format format, const std::string& text) {
  switch (format) {
    case Format::dimacs_cnf: return parse_cnf(text);
    case Format::setsys: return parse_set_system(text);
    case Format::graph: return parse_graph(text);
    case Format::subsetsum: return parse_subset_sum(text);
    case Format::circuit: return parse_circuit(text);
  }
  throw ParameterError("unknown format");
}

std::string serialize_instance(const Instance& inst) {
  return std::visit([](const auto& x) { return serialize(x); }, inst);
}

Format instance_format(const Instance& inst) {
  struct Visitor {
    Format operator()(const CnfFormula&) const { return Format::dimacs_cnf; }
    Format operator()(const SetSystem&) const { return Format::setsys; }
    Format operator()(const Graph&) const { return Format::graph; }
    Format operator()(const SubsetSumInstance&) const { return Format::subsetsum; }
    Format operator()(const VspCircuit&) const { return Format::circuit; }
  };
  return std::visit(Visitor{}, inst);
}

}  // namespace redkit
