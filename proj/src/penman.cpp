// Copyright 2026 The xamr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xamr/penman.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace xamr {
namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

bool iends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         iequals(s.substr(s.size() - suffix.size()), suffix);
}

bool istarts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && iequals(s.substr(0, prefix.size()), prefix);
}

// Roles that end in "-of" but are not inverses of anything.
bool is_non_inverse_of_role(std::string_view role) {
  if (iequals(role, "consist-of")) return true;
  if (istarts_with(role, "prep-") && iends_with(role, "-of")) return true;
  return false;
}

bool is_number_token(const std::string &tok) {
  if (tok.empty()) return false;
  char *end = nullptr;
  std::strtod(tok.c_str(), &end);
  return end == tok.c_str() + tok.size();
}

// AMR symbol constants that may appear unquoted in attribute position.
bool is_known_symbol(const std::string &tok) {
  static const std::set<std::string> kSymbols = {
      "-", "+", "imperative", "interrogative", "expressive"};
  return kSymbols.count(tok) > 0;
}

// Lowercase letters optionally followed by digits: the conventional shape
// of an AMR variable (w, b2, ii, g3).
bool is_variable_shaped(const std::string &tok) {
  if (tok.empty()) return false;
  size_t i = 0;
  while (i < tok.size() && tok[i] >= 'a' && tok[i] <= 'z') ++i;
  if (i == 0) return false;
  while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') ++i;
  return i == tok.size();
}

struct Token {
  enum Kind { LParen, RParen, Slash, Role, Atom, Str, End } kind = End;
  std::string text;  // role text without ':', string text without quotes
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::End;
      return tok;
    }
    char c = text_[pos_];
    if (c == '(') { advance(); tok.kind = Token::LParen; return tok; }
    if (c == ')') { advance(); tok.kind = Token::RParen; return tok; }
    if (c == '/') { advance(); tok.kind = Token::Slash; return tok; }
    if (c == '"') return lex_string(tok);
    if (c == ':') {
      advance();
      tok.kind = Token::Role;
      tok.text = lex_atom_text();
      if (tok.text.empty())
        throw ParseError("empty role label", tok.line, tok.column);
      return tok;
    }
    tok.kind = Token::Atom;
    tok.text = lex_atom_text();
    return tok;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') { ++line_; column_ = 1; } else { ++column_; }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  Token lex_string(Token tok) {
    advance();  // opening quote
    tok.kind = Token::Str;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
        advance();
        out.push_back(text_[pos_]);
        advance();
      } else {
        out.push_back(text_[pos_]);
        advance();
      }
    }
    if (pos_ >= text_.size())
      throw ParseError("unterminated string literal", tok.line, tok.column);
    advance();  // closing quote
    tok.text = std::move(out);
    return tok;
  }

  std::string lex_atom_text() {
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
          c == ')' || c == '/')
        break;
      out.push_back(c);
      advance();
    }
    return out;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// A role instance read from the surface text, in document order. Targets
// that were bare atoms stay unresolved until all variables are known.
struct RawRelation {
  std::string source;
  std::string role;
  enum TargetKind { NodeVar, BareAtom, StringLit } target_kind;
  std::string target;
  int line = 1;
  int column = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const PenmanOptions &opts)
      : lexer_(text), opts_(opts) {}

  AmrGraph parse() {
    tok_ = lexer_.next();
    expect(Token::LParen, "expected '('");
    graph_.root = parse_node();
    if (tok_.kind != Token::End)
      throw ParseError("unbalanced parentheses: trailing content", tok_.line,
                       tok_.column);
    resolve();
    return std::move(graph_);
  }

 private:
  void expect(Token::Kind kind, const char *msg) {
    if (tok_.kind != kind) throw ParseError(msg, tok_.line, tok_.column);
  }

  // Parses "( var / concept relation* )" with tok_ on the '('. Returns the
  // introduced variable.
  std::string parse_node() {
    Token open = tok_;
    tok_ = lexer_.next();
    if (tok_.kind != Token::Atom)
      throw ParseError("expected a variable after '('", tok_.line, tok_.column);
    std::string var = tok_.text;
    Token var_tok = tok_;
    tok_ = lexer_.next();
    if (tok_.kind != Token::Slash)
      throw ParseError("missing '/' in node introduction", tok_.line,
                       tok_.column);
    tok_ = lexer_.next();
    if (tok_.kind != Token::Atom)
      throw ParseError("expected a concept after '/'", tok_.line, tok_.column);
    if (graph_.nodes.count(var))
      throw ParseError("duplicate definition of variable '" + var + "'",
                       var_tok.line, var_tok.column);
    graph_.nodes[var] = tok_.text;
    tok_ = lexer_.next();

    while (tok_.kind == Token::Role) {
      RawRelation rel;
      rel.source = var;
      rel.role = tok_.text;
      rel.line = tok_.line;
      rel.column = tok_.column;
      tok_ = lexer_.next();
      switch (tok_.kind) {
        case Token::LParen:
          rel.target_kind = RawRelation::NodeVar;
          rel.target = parse_node();
          break;
        case Token::Atom:
          rel.target_kind = RawRelation::BareAtom;
          rel.target = tok_.text;
          rel.line = tok_.line;
          rel.column = tok_.column;
          tok_ = lexer_.next();
          break;
        case Token::Str:
          rel.target_kind = RawRelation::StringLit;
          rel.target = tok_.text;
          tok_ = lexer_.next();
          break;
        default:
          throw ParseError("expected a value after role ':" + rel.role + "'",
                           tok_.line, tok_.column);
      }
      raw_.push_back(std::move(rel));
    }
    if (tok_.kind == Token::End)
      throw ParseError("unbalanced parentheses: missing ')'", open.line,
                       open.column);
    expect(Token::RParen, "expected ')'");
    tok_ = lexer_.next();
    return var;
  }

  void add_edge(const RawRelation &rel, const std::string &target_var) {
    if (iends_with(rel.role, "-of") && !is_non_inverse_of_role(rel.role)) {
      graph_.edges.push_back(
          {target_var, rel.role.substr(0, rel.role.size() - 3), rel.source});
    } else {
      graph_.edges.push_back({rel.source, rel.role, target_var});
    }
  }

  // Classifies deferred targets once every variable definition is known.
  void resolve() {
    for (const RawRelation &rel : raw_) {
      switch (rel.target_kind) {
        case RawRelation::NodeVar:
          add_edge(rel, rel.target);
          break;
        case RawRelation::StringLit:
          graph_.attributes.push_back(
              {rel.source, rel.role, rel.target, ConstantKind::String});
          break;
        case RawRelation::BareAtom:
          if (graph_.nodes.count(rel.target)) {
            add_edge(rel, rel.target);
          } else if (is_number_token(rel.target)) {
            graph_.attributes.push_back(
                {rel.source, rel.role, rel.target, ConstantKind::Number});
          } else if (!is_known_symbol(rel.target) &&
                     is_variable_shaped(rel.target) && !opts_.lenient_refs) {
            throw ParseError(
                "reference to undefined variable '" + rel.target + "'",
                rel.line, rel.column);
          } else {
            graph_.attributes.push_back(
                {rel.source, rel.role, rel.target, ConstantKind::Symbol});
          }
          break;
      }
    }
  }

  Lexer lexer_;
  PenmanOptions opts_;
  Token tok_;
  AmrGraph graph_;
  std::vector<RawRelation> raw_;
};

std::string format_constant(const AmrAttribute &attr) {
  if (attr.kind != ConstantKind::String) return attr.value;
  std::string out = "\"";
  for (char c : attr.value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

AmrGraph parse_penman(std::string_view text, const PenmanOptions &opts) {
  Parser parser(text, opts);
  return parser.parse();
}

std::string serialize_penman(const AmrGraph &graph) {
  if (!graph.nodes.count(graph.root))
    throw DataError("serialize: root '" + graph.root + "' is not a node");

  struct Adj {
    size_t edge;
    bool inverted;
  };
  std::unordered_map<std::string, std::vector<Adj>> adjacency;
  for (size_t i = 0; i < graph.edges.size(); ++i) {
    const AmrEdge &e = graph.edges[i];
    adjacency[e.source].push_back({i, false});
    if (e.target != e.source) adjacency[e.target].push_back({i, true});
  }
  std::unordered_map<std::string, std::vector<const AmrAttribute *>> attrs;
  for (const AmrAttribute &a : graph.attributes) attrs[a.source].push_back(&a);

  std::vector<bool> emitted(graph.edges.size(), false);
  std::unordered_set<std::string> visited;
  std::ostringstream out;

  // Depth-first spanning traversal; edges crossing into visited territory
  // become bare re-entrant references.
  auto emit = [&](auto &&self, const std::string &var) -> void {
    visited.insert(var);
    out << '(' << var << " / " << graph.nodes.at(var);
    for (const AmrAttribute *a : attrs[var])
      out << " :" << a->relation << ' ' << format_constant(*a);
    for (const Adj &adj : adjacency[var]) {
      if (emitted[adj.edge]) continue;
      emitted[adj.edge] = true;
      const AmrEdge &e = graph.edges[adj.edge];
      const std::string &other = adj.inverted ? e.source : e.target;
      out << " :" << e.relation << (adj.inverted ? "-of" : "") << ' ';
      if (visited.count(other))
        out << other;
      else
        self(self, other);
    }
    out << ')';
  };
  emit(emit, graph.root);

  if (visited.size() != graph.nodes.size())
    throw DataError("serialize: graph is not connected");
  return out.str();
}

std::vector<std::string> check_graph(const AmrGraph &graph) {
  std::vector<std::string> problems;
  if (graph.nodes.empty()) {
    problems.push_back("graph has no nodes");
    return problems;
  }
  if (!graph.nodes.count(graph.root))
    problems.push_back("root '" + graph.root + "' is not a defined node");
  for (const AmrEdge &e : graph.edges) {
    if (!graph.nodes.count(e.source))
      problems.push_back("edge source '" + e.source + "' is undefined");
    if (!graph.nodes.count(e.target))
      problems.push_back("edge target '" + e.target + "' is undefined");
  }
  for (const AmrAttribute &a : graph.attributes)
    if (!graph.nodes.count(a.source))
      problems.push_back("attribute source '" + a.source + "' is undefined");

  // Connectivity ignoring edge direction.
  std::unordered_map<std::string, std::vector<std::string>> undirected;
  for (const AmrEdge &e : graph.edges) {
    if (graph.nodes.count(e.source) && graph.nodes.count(e.target)) {
      undirected[e.source].push_back(e.target);
      undirected[e.target].push_back(e.source);
    }
  }
  std::unordered_set<std::string> seen;
  std::vector<std::string> stack;
  if (graph.nodes.count(graph.root)) {
    stack.push_back(graph.root);
    seen.insert(graph.root);
  }
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const std::string &w : undirected[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  for (const auto &[var, label] : graph.nodes) {
    (void)label;
    if (!seen.count(var))
      problems.push_back("node '" + var + "' is unreachable from the root");
  }
  return problems;
}

namespace {

std::string trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_blank(const std::string &s) { return trim(s).empty(); }

}  // namespace

std::vector<CorpusEntry> read_corpus(const std::string &path,
                                     const CorpusReadOptions &opts,
                                     std::vector<CorpusDiagnostic> *diagnostics) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);

  std::vector<CorpusEntry> entries;
  std::unordered_set<std::string> seen_ids;

  std::string line;
  int lineno = 0;
  bool in_block = false;
  int block_start = 0;
  std::string id;
  std::optional<std::string> snt;
  std::string graph_text;

  auto report = [&](const std::string &entry_id, int at, const std::string &msg) {
    if (opts.strict)
      throw DataError("corpus " + path + ", entry '" + entry_id + "': " + msg);
    if (diagnostics) diagnostics->push_back({entry_id, at, msg});
  };

  auto flush = [&]() {
    if (!in_block) return;
    in_block = false;
    std::string entry_id = id;
    bool synthetic = entry_id.empty();
    if (synthetic) entry_id = "line:" + std::to_string(block_start);
    if (is_blank(graph_text)) {
      report(entry_id, block_start, "block has no graph");
    } else if (!synthetic && !seen_ids.insert(entry_id).second) {
      report(entry_id, block_start, "duplicate entry id");
    } else {
      try {
        CorpusEntry entry;
        entry.id = entry_id;
        entry.synthetic_id = synthetic;
        entry.sentence = snt;
        entry.graph = parse_penman(graph_text, opts.penman);
        entries.push_back(std::move(entry));
      } catch (const ParseError &e) {
        report(entry_id, block_start, e.what());
      }
    }
    id.clear();
    snt.reset();
    graph_text.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) {
      flush();
      continue;
    }
    if (!in_block) {
      in_block = true;
      block_start = lineno;
    }
    if (line[0] == '#') {
      std::string t = trim(line.substr(1));
      if (t.rfind("::id", 0) == 0) {
        std::istringstream fields(t.substr(4));
        fields >> id;
      } else if (t.rfind("::snt", 0) == 0) {
        std::string text = t.substr(5);
        if (!text.empty() && text[0] == ' ') text.erase(0, 1);
        snt = text;
      }
      continue;
    }
    graph_text += line;
    graph_text += '\n';
  }
  flush();
  return entries;
}

void write_corpus(const std::vector<CorpusEntry> &entries, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file: " + path);
  for (const CorpusEntry &entry : entries) {
    out << "# ::id " << entry.id << '\n';
    if (entry.sentence) out << "# ::snt " << *entry.sentence << '\n';
    out << serialize_penman(entry.graph) << '\n' << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace xamr
