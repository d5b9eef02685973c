#include "openmarkov/dsl.hpp"

#include <set>
#include <sstream>

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

enum class Tok { Word, Arrow, LBrace, RBrace, Colon, Semi, Comma, At, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string where(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

bool is_punct(char c) {
  return c == '{' || c == '}' || c == ':' || c == ';' || c == ',' || c == '@' || c == '#';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++k;
    }
  };
  while (k < text.size()) {
    const char c = text[k];
    if (is_space(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (k < text.size() && text[k] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t cl = col;
    if (text.substr(k, 2) == "->") {
      out.push_back({Tok::Arrow, "->", l, cl});
      advance(2);
      continue;
    }
    if (is_punct(c)) {
      static constexpr std::string_view chars = "{}:;,@";
      static constexpr Tok kinds[] = {Tok::LBrace, Tok::RBrace, Tok::Colon,
                                      Tok::Semi,   Tok::Comma,  Tok::At};
      out.push_back({kinds[chars.find(c)], std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    const std::size_t start = k;
    while (k < text.size() && !is_space(text[k]) && !is_punct(text[k]) &&
           text.substr(k, 2) != "->") {
      advance(1);
    }
    out.push_back({Tok::Word, std::string(text.substr(start, k - start)), l, cl});
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

bool is_identifier(std::string_view word) {
  if (word.empty()) return false;
  for (const char c : word) {
    const auto u = static_cast<unsigned char>(c);
    const bool ok = (u >= 0x80) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '\'';
    if (!ok) return false;
  }
  return true;
}

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Word: return "a name";
    case Tok::Arrow: return "'->'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::At: return "'@'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Document document() {
    const Token& head = peek();
    Document doc;
    if (head.kind == Tok::Word && head.text == "process") {
      doc = process();
    } else if (head.kind == Tok::Word && head.text == "morphism") {
      doc = morphism();
    } else {
      syntax(head, "expected 'process' or 'morphism'");
    }
    expect(Tok::End);
    return doc;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  [[noreturn]] static void syntax(const Token& at, const std::string& message) {
    fail(ErrorCode::SyntaxError, where(at.line, at.column) + message + ", found '" + at.text + "'");
  }
  [[noreturn]] static void semantic(const Token& at, const std::string& message) {
    fail(ErrorCode::SemanticError, where(at.line, at.column) + message);
  }
  const Token& expect(Tok kind) {
    if (peek().kind != kind) syntax(peek(), "expected " + std::string(describe(kind)));
    return next();
  }
  const Token& identifier() {
    const Token& t = expect(Tok::Word);
    if (!is_identifier(t.text)) syntax(t, "invalid name");
    return t;
  }
  void keyword(std::string_view word) {
    const Token& t = peek();
    if (t.kind != Tok::Word || t.text != word) syntax(t, "expected '" + std::string(word) + "'");
    next();
  }
  bool at_section_header() const { return peek().kind == Tok::Word && peek(1).kind == Tok::Colon; }

  // (a -> b ,)* ;   with an optional trailing comma
  std::vector<std::pair<const Token*, const Token*>> pair_list() {
    std::vector<std::pair<const Token*, const Token*>> out;
    while (!accept(Tok::Semi)) {
      const Token& from = identifier();
      expect(Tok::Arrow);
      const Token& to = identifier();
      out.emplace_back(&from, &to);
      if (!accept(Tok::Comma)) {
        expect(Tok::Semi);
        break;
      }
    }
    return out;
  }

  ProcessDoc process() {
    keyword("process");
    ProcessDoc doc;
    doc.name = identifier().text;
    expect(Tok::LBrace);
    std::set<std::string> seen;
    std::set<std::string, std::less<>> states;
    std::vector<std::pair<const Token*, const Token*>> inputs;
    std::vector<std::pair<const Token*, const Token*>> outputs;
    std::vector<const Token*> edge_sites;
    while (!accept(Tok::RBrace)) {
      const Token& header = expect(Tok::Word);
      expect(Tok::Colon);
      if (!seen.insert(header.text).second) semantic(header, "repeated section '" + header.text + "'");
      if (header.text == "states") {
        while (!accept(Tok::Semi)) {
          const Token& s = identifier();
          if (!states.insert(s.text).second) semantic(s, "duplicate state '" + s.text + "'");
          doc.states.push_back(s.text);
          if (!accept(Tok::Comma)) {
            expect(Tok::Semi);
            break;
          }
        }
      } else if (header.text == "edges") {
        while (peek().kind != Tok::RBrace && !at_section_header()) {
          if (accept(Tok::Semi)) continue;
          const Token& from = identifier();
          expect(Tok::Arrow);
          const Token& to = identifier();
          expect(Tok::At);
          const Token& rate = expect(Tok::Word);
          Rational value;
          try {
            value = parse_rational(rate.text);
          } catch (const Error& e) {
            syntax(rate, "expected a rate");
          }
          expect(Tok::Semi);
          edge_sites.push_back(&from);
          doc.edges.push_back(Edge{from.text, to.text, value});
          if (sgn(value) < 0) semantic(rate, "negative rate " + rate.text);
          if (from.text == to.text) semantic(from, "self-loop on '" + from.text + "'");
        }
      } else if (header.text == "inputs") {
        inputs = pair_list();
      } else if (header.text == "outputs") {
        outputs = pair_list();
      } else {
        semantic(header, "unknown section '" + header.text + "'");
      }
    }
    if (!seen.contains("states")) semantic(peek(), "process '" + doc.name + "' has no states section");

    for (std::size_t k = 0; k < doc.edges.size(); ++k) {
      for (const auto* label : {&doc.edges[k].src, &doc.edges[k].dst}) {
        if (!states.contains(*label)) semantic(*edge_sites[k], "undeclared state '" + *label + "'");
      }
    }
    doc.inputs = boundary(inputs, states, "input");
    doc.outputs = boundary(outputs, states, "output");
    return doc;
  }

  LabelTable boundary(const std::vector<std::pair<const Token*, const Token*>>& entries,
                      const std::set<std::string, std::less<>>& states, const std::string& kind) {
    LabelTable out;
    std::set<std::string> labels;
    std::set<std::string> targets;
    for (const auto& [label, state] : entries) {
      if (!labels.insert(label->text).second) {
        semantic(*label, "duplicate " + kind + " '" + label->text + "'");
      }
      if (!states.contains(state->text)) {
        semantic(*state, "undeclared state '" + state->text + "'");
      }
      if (!targets.insert(state->text).second) {
        semantic(*state, kind + "s are not injective at '" + state->text + "'");
      }
      out.emplace_back(label->text, state->text);
    }
    return out;
  }

  MorphismDoc morphism() {
    keyword("morphism");
    MorphismDoc doc;
    doc.name = identifier().text;
    expect(Tok::Colon);
    doc.source = identifier().text;
    expect(Tok::Arrow);
    doc.target = identifier().text;
    expect(Tok::LBrace);
    std::set<std::string> seen;
    while (!accept(Tok::RBrace)) {
      const Token& header = expect(Tok::Word);
      expect(Tok::Colon);
      if (!seen.insert(header.text).second) semantic(header, "repeated section '" + header.text + "'");
      LabelTable table;
      std::set<std::string> keys;
      for (const auto& [from, to] : pair_list()) {
        if (!keys.insert(from->text).second) semantic(*from, "'" + from->text + "' mapped twice");
        table.emplace_back(from->text, to->text);
      }
      if (header.text == "f") {
        doc.f = std::move(table);
      } else if (header.text == "p") {
        doc.p = std::move(table);
      } else if (header.text == "g") {
        doc.g = std::move(table);
      } else {
        semantic(header, "unknown section '" + header.text + "'");
      }
    }
    if (!seen.contains("p")) semantic(peek(), "morphism '" + doc.name + "' has no p section");
    return doc;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_table(std::ostringstream& out, const std::string& header, const LabelTable& table) {
  out << "  " << header << ":";
  for (std::size_t k = 0; k < table.size(); ++k) {
    out << (k == 0 ? " " : ", ") << table[k].first << " -> " << table[k].second;
  }
  out << ";\n";
}

}  // namespace

Document parse(std::string_view text) { return Parser(text).document(); }

ProcessDoc parse_process(std::string_view text) {
  Document doc = parse(text);
  if (auto* p = std::get_if<ProcessDoc>(&doc)) return std::move(*p);
  fail(ErrorCode::SemanticError, "expected a process, found a morphism");
}

MorphismDoc parse_morphism(std::string_view text) {
  Document doc = parse(text);
  if (auto* m = std::get_if<MorphismDoc>(&doc)) return std::move(*m);
  fail(ErrorCode::SemanticError, "expected a morphism, found a process");
}

std::string print(const ProcessDoc& doc) {
  std::ostringstream out;
  out << "process " << doc.name << " {\n  states:";
  for (std::size_t k = 0; k < doc.states.size(); ++k) {
    out << (k == 0 ? " " : ", ") << doc.states[k];
  }
  out << ";\n  edges:\n";
  for (const auto& e : doc.edges) {
    out << "    " << e.src << " -> " << e.dst << " @ " << to_string(e.rate) << ";\n";
  }
  print_table(out, "inputs", doc.inputs);
  print_table(out, "outputs", doc.outputs);
  out << "}\n";
  return out.str();
}

std::string print(const MorphismDoc& doc) {
  std::ostringstream out;
  out << "morphism " << doc.name << " : " << doc.source << " -> " << doc.target << " {\n";
  if (doc.f) print_table(out, "f", *doc.f);
  print_table(out, "p", doc.p);
  if (doc.g) print_table(out, "g", *doc.g);
  out << "}\n";
  return out.str();
}

OpenMarkov to_open_markov(const ProcessDoc& doc) {
  const FinSet states(doc.states);
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  for (const auto& entry : doc.inputs) input_labels.push_back(entry.first);
  for (const auto& entry : doc.outputs) output_labels.push_back(entry.first);
  return OpenMarkov(table_map(doc.inputs, FinSet(input_labels), states),
                    table_map(doc.outputs, FinSet(output_labels), states),
                    MarkovProcess::from_edges(states, doc.edges));
}

ProcessDoc to_process_doc(const std::string& name, const OpenMarkov& m) {
  ProcessDoc doc;
  doc.name = name;
  doc.states = m.states().labels();
  const RatMatrix& h = m.generator();
  for (std::size_t j = 0; j < h.cols(); ++j) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (i != j && sgn(h(i, j)) != 0) doc.edges.push_back(Edge{m.states()[j], m.states()[i], h(i, j)});
    }
  }
  for (std::size_t s = 0; s < m.inputs().size(); ++s) {
    doc.inputs.emplace_back(m.inputs()[s], m.states()[m.input_leg()(s)]);
  }
  for (std::size_t t = 0; t < m.outputs().size(); ++t) {
    doc.outputs.emplace_back(m.outputs()[t], m.states()[m.output_leg()(t)]);
  }
  return doc;
}

FinMap table_map(const LabelTable& table, const FinSet& dom, const FinSet& cod) {
  try {
    return FinMap::from_pairs(dom, cod, table);
  } catch (const Error& e) {
    fail(ErrorCode::SemanticError, e.what());
  }
}

FinSet table_image(const LabelTable& table) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& entry : table) {
    if (seen.insert(entry.second).second) labels.push_back(entry.second);
  }
  return FinSet(std::move(labels));
}

OpenMarkovMorphism to_morphism(const MorphismDoc& doc, const OpenMarkov& source,
                               const OpenMarkov& target) {
  if (!doc.f || !doc.g) {
    fail(ErrorCode::SemanticError, "morphism '" + doc.name + "' needs f, p and g tables");
  }
  return OpenMarkovMorphism{source, target, table_map(*doc.f, source.inputs(), target.inputs()),
                            table_map(doc.p, source.states(), target.states()),
                            table_map(*doc.g, source.outputs(), target.outputs())};
}

}  // namespace openmarkov
