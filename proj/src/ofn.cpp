// Copyright 2026 The ontodiv Authors
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

#include "ontodiv/ofn.hpp"

#include <spdlog/spdlog.h>

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ontodiv/errors.hpp"

namespace ontodiv {

namespace {

enum class TokenType { kOpen, kClose, kEquals, kIri, kName, kString, kLang, kCaret, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':' || c >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;
    const char c = text_[pos_];
    switch (c) {
      case '(':
        advance();
        tok.type = TokenType::kOpen;
        return tok;
      case ')':
        advance();
        tok.type = TokenType::kClose;
        return tok;
      case '=':
        advance();
        tok.type = TokenType::kEquals;
        return tok;
      case '<':
        return lex_iri(tok);
      case '"':
        return lex_string(tok);
      case '@':
        advance();
        tok.type = TokenType::kLang;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
          tok.text += advance();
        }
        if (tok.text.empty()) throw ParseError("empty language tag", tok.line, tok.column);
        return tok;
      case '^':
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '^') {
          throw ParseError("expected '^^'", tok.line, tok.column);
        }
        advance();
        tok.type = TokenType::kCaret;
        return tok;
      default:
        break;
    }
    if (!is_name_char(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "'", tok.line, tok.column);
    }
    tok.type = TokenType::kName;
    while (pos_ < text_.size() && is_name_char(static_cast<unsigned char>(text_[pos_]))) {
      tok.text += advance();
    }
    return tok;
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token lex_iri(Token tok) {
    advance();
    tok.type = TokenType::kIri;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw ParseError("unterminated IRI", tok.line, tok.column);
      }
      const char c = advance();
      if (c == '>') break;
      tok.text += c;
    }
    if (tok.text.empty()) throw ParseError("empty IRI", tok.line, tok.column);
    return tok;
  }

  Token lex_string(Token tok) {
    advance();
    tok.type = TokenType::kString;
    while (true) {
      if (pos_ >= text_.size()) throw ParseError("unterminated string", tok.line, tok.column);
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw ParseError("unterminated string", tok.line, tok.column);
        c = advance();
      }
      tok.text += c;
    }
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

constexpr std::string_view kKnownUnsupported[] = {
    "Import", "Annotation", "DataProperty", "AnnotationProperty", "Datatype",
    "ObjectAllValuesFrom", "ObjectComplementOf", "ObjectOneOf", "ObjectHasValue",
    "ObjectHasSelf", "ObjectMinCardinality", "ObjectMaxCardinality",
    "ObjectExactCardinality", "DataSomeValuesFrom", "DataAllValuesFrom", "DataHasValue",
    "DisjointClasses", "DisjointUnion", "EquivalentObjectProperties",
    "DisjointObjectProperties", "ObjectPropertyDomain", "ObjectPropertyRange",
    "InverseObjectProperties", "FunctionalObjectProperty", "TransitiveObjectProperty",
    "ClassAssertion", "ObjectPropertyAssertion", "ObjectPropertyChain", "ObjectInverseOf",
    "SubDataPropertyOf", "DataPropertyAssertion", "HasKey", "SubAnnotationPropertyOf",
    "AnnotationPropertyDomain", "AnnotationPropertyRange", "SameIndividual",
    "DifferentIndividuals"};

struct Located {
  Axiom axiom;
  int line;
  int column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {
    prefixes_["rdf:"] = std::string(iri::kRdf);
    prefixes_["rdfs:"] = std::string(iri::kRdfs);
    prefixes_["owl:"] = std::string(iri::kOwl);
    prefixes_["xsd:"] = std::string(iri::kXsd);
    prefixes_["skos:"] = std::string(iri::kSkos);
    prefixes_["oboInOwl:"] = std::string(iri::kOboInOwl);
    shift();
  }

  void parse_document() {
    while (cur_.type == TokenType::kName && cur_.text == "Prefix") parse_prefix();
    if (cur_.type != TokenType::kName || cur_.text != "Ontology") {
      fail_construct_or("expected 'Ontology('");
    }
    shift();
    expect(TokenType::kOpen, "'('");
    if (cur_.type == TokenType::kIri || is_iri_name()) {
      ontology_iri_ = take_iri();
      if (cur_.type == TokenType::kIri || is_iri_name()) take_iri();  // version IRI
    }
    while (cur_.type != TokenType::kClose) {
      if (cur_.type == TokenType::kEnd) fail("unexpected end of input, expected ')'");
      parse_axiom();
    }
    shift();
    if (cur_.type != TokenType::kEnd) fail("trailing content after Ontology(...)");
  }

  const std::string& ontology_iri() const { return ontology_iri_; }
  std::vector<Located>& axioms() { return axioms_; }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, cur_.line, cur_.column);
  }

  [[noreturn]] void fail_construct_or(const std::string& message) const {
    if (cur_.type == TokenType::kName) {
      for (auto known : kKnownUnsupported) {
        if (cur_.text == known) fail("unsupported construct '" + cur_.text + "'");
      }
      if (!cur_.text.empty() && std::isupper(static_cast<unsigned char>(cur_.text[0])) &&
          cur_.text.find(':') == std::string::npos) {
        fail("unsupported construct '" + cur_.text + "'");
      }
    }
    fail(message);
  }

  void shift() { cur_ = lexer_.next(); }

  void expect(TokenType type, const char* what) {
    if (cur_.type != type) fail(std::string("expected ") + what);
    shift();
  }

  bool is_iri_name() const {
    return cur_.type == TokenType::kName && cur_.text.find(':') != std::string::npos;
  }

  void parse_prefix() {
    shift();
    expect(TokenType::kOpen, "'('");
    if (cur_.type != TokenType::kName || cur_.text.empty() || cur_.text.back() != ':') {
      fail("expected prefix name ending in ':'");
    }
    std::string name = cur_.text;
    shift();
    expect(TokenType::kEquals, "'='");
    if (cur_.type != TokenType::kIri) fail("expected <IRI> in prefix declaration");
    prefixes_[name] = cur_.text;
    shift();
    expect(TokenType::kClose, "')'");
  }

  std::string take_iri() {
    if (cur_.type == TokenType::kIri) {
      std::string out = cur_.text;
      shift();
      return out;
    }
    if (cur_.type != TokenType::kName) fail("expected IRI");
    const auto colon = cur_.text.find(':');
    if (colon == std::string::npos) fail_construct_or("expected IRI, got '" + cur_.text + "'");
    const std::string prefix = cur_.text.substr(0, colon + 1);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    std::string out = it->second + cur_.text.substr(colon + 1);
    shift();
    return out;
  }

  std::string keyword() const {
    if (cur_.type != TokenType::kName || cur_.text.find(':') != std::string::npos) {
      fail("expected axiom or expression keyword");
    }
    return cur_.text;
  }

  void parse_axiom() {
    const int line = cur_.line;
    const int column = cur_.column;
    const std::string kw = keyword();
    if (kw == "Declaration") {
      shift();
      expect(TokenType::kOpen, "'('");
      const std::string type = keyword();
      EntityKind kind;
      if (type == "Class") {
        kind = EntityKind::kClass;
      } else if (type == "ObjectProperty") {
        kind = EntityKind::kObjectProperty;
      } else if (type == "NamedIndividual") {
        kind = EntityKind::kIndividual;
      } else {
        fail_construct_or("unknown entity type '" + type + "'");
      }
      shift();
      expect(TokenType::kOpen, "'('");
      EntityRef e{take_iri(), kind};
      expect(TokenType::kClose, "')'");
      expect(TokenType::kClose, "')'");
      push(Declaration{std::move(e)}, line, column);
    } else if (kw == "SubClassOf") {
      shift();
      expect(TokenType::kOpen, "'('");
      ClassExpr sub = parse_class_expr();
      ClassExpr sup = parse_class_expr();
      expect(TokenType::kClose, "')' (SubClassOf takes exactly 2 arguments)");
      push(SubClassOf{std::move(sub), std::move(sup)}, line, column);
    } else if (kw == "EquivalentClasses") {
      shift();
      expect(TokenType::kOpen, "'('");
      std::vector<ClassExpr> members;
      while (cur_.type != TokenType::kClose) members.push_back(parse_class_expr());
      if (members.size() < 2) {
        throw ParseError("EquivalentClasses requires ≥ 2 members", line, column);
      }
      shift();
      push(EquivalentClasses{std::move(members)}, line, column);
    } else if (kw == "SubObjectPropertyOf") {
      shift();
      expect(TokenType::kOpen, "'('");
      EntityRef sub = make_property(parse_property_iri());
      EntityRef sup = make_property(parse_property_iri());
      expect(TokenType::kClose, "')'");
      push(SubObjectPropertyOf{std::move(sub), std::move(sup)}, line, column);
    } else if (kw == "AnnotationAssertion") {
      shift();
      expect(TokenType::kOpen, "'('");
      if (cur_.type == TokenType::kName && cur_.text == "Annotation") {
        fail("unsupported construct 'Annotation'");
      }
      AnnotationAssertion a;
      a.property = take_iri();
      a.subject = make_class(take_iri());
      if (cur_.type != TokenType::kString) fail("expected string literal");
      a.literal = cur_.text;
      shift();
      if (cur_.type == TokenType::kLang) {
        a.language = cur_.text;
        shift();
      } else if (cur_.type == TokenType::kCaret) {
        shift();
        take_iri();
      }
      expect(TokenType::kClose, "')'");
      push(std::move(a), line, column);
    } else {
      fail_construct_or("unknown axiom '" + kw + "'");
    }
  }

  std::string parse_property_iri() {
    if (cur_.type == TokenType::kName && cur_.text.find(':') == std::string::npos) {
      fail_construct_or("expected object property IRI");
    }
    return take_iri();
  }

  ClassExpr parse_class_expr() {
    if (cur_.type == TokenType::kIri || is_iri_name()) {
      std::string name = take_iri();
      if (name == std::string(iri::kOwl) + "Thing") return ClassExpr::thing();
      if (name == std::string(iri::kOwl) + "Nothing") return ClassExpr::nothing();
      return ClassExpr::named(std::move(name));
    }
    if (cur_.type != TokenType::kName) fail("expected class expression");
    const int line = cur_.line;
    const int column = cur_.column;
    const std::string kw = cur_.text;
    if (kw == "ObjectIntersectionOf" || kw == "ObjectUnionOf") {
      shift();
      expect(TokenType::kOpen, "'('");
      std::vector<ClassExpr> members;
      while (cur_.type != TokenType::kClose) members.push_back(parse_class_expr());
      if (members.size() < 2) throw ParseError(kw + " requires ≥ 2 members", line, column);
      shift();
      return kw == "ObjectIntersectionOf" ? ClassExpr::intersection(std::move(members))
                                          : ClassExpr::union_of(std::move(members));
    }
    if (kw == "ObjectSomeValuesFrom") {
      shift();
      expect(TokenType::kOpen, "'('");
      EntityRef property = make_property(parse_property_iri());
      ClassExpr filler = parse_class_expr();
      expect(TokenType::kClose, "')'");
      return ClassExpr::some(std::move(property), std::move(filler));
    }
    fail_construct_or("expected class expression");
  }

  void push(Axiom axiom, int line, int column) {
    axioms_.push_back(Located{std::move(axiom), line, column});
  }

  Lexer lexer_;
  Token cur_;
  std::unordered_map<std::string, std::string> prefixes_;
  std::string ontology_iri_;
  std::vector<Located> axioms_;
};

EntityRef resolve_subject(const EntityRef& subject,
                          const std::unordered_map<std::string, EntityKind>& declared) {
  auto it = declared.find(subject.iri);
  return it == declared.end() ? subject : EntityRef{subject.iri, it->second};
}

}  // namespace

Ontology parse_ontology(std::string_view text, const std::set<std::string>& label_properties,
                        std::vector<std::string>* warnings) {
  Parser parser(text);
  parser.parse_document();
  auto& located = parser.axioms();

  std::unordered_map<std::string, EntityKind> declared;
  for (const auto& item : located) {
    if (const auto* decl = std::get_if<Declaration>(&item.axiom)) {
      auto [it, inserted] = declared.emplace(decl->entity.iri, decl->entity.kind);
      if (!inserted && it->second != decl->entity.kind) {
        throw ParseError("entity <" + decl->entity.iri + "> redeclared as " +
                             std::string(to_string(decl->entity.kind)),
                         item.line, item.column);
      }
    }
  }

  std::vector<Axiom> axioms;
  axioms.reserve(located.size());
  std::vector<EntityRef> auto_declared;
  for (auto& item : located) {
    if (auto* a = std::get_if<AnnotationAssertion>(&item.axiom)) {
      a->subject = resolve_subject(a->subject, declared);
    } else if (is_logical(item.axiom)) {
      for (const auto& e : axiom_signature(item.axiom)) {
        auto it = declared.find(e.iri);
        if (it == declared.end()) {
          declared.emplace(e.iri, e.kind);
          auto_declared.push_back(e);
        } else if (it->second != e.kind) {
          throw ParseError("entity <" + e.iri + "> is declared as " +
                               std::string(to_string(it->second)) + " but used as " +
                               std::string(to_string(e.kind)),
                           item.line, item.column);
        }
      }
    }
    axioms.push_back(std::move(item.axiom));
  }
  for (auto& e : auto_declared) {
    std::string message = "auto-declaring undeclared " + std::string(to_string(e.kind)) + " <" +
                          e.iri + ">";
    spdlog::warn("{}", message);
    if (warnings != nullptr) warnings->push_back(std::move(message));
    axioms.push_back(Declaration{std::move(e)});
  }
  return Ontology(parser.ontology_iri(), std::move(axioms), label_properties);
}

Ontology load_ontology(const std::filesystem::path& path,
                       const std::set<std::string>& label_properties) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open ontology file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_ontology(buffer.str(), label_properties);
  } catch (const ParseError& e) {
    throw InputError(path.string() + ":" + e.what());
  }
}

std::string serialize_ontology(const Ontology& ontology) {
  std::string out = "Prefix(owl:=<" + std::string(iri::kOwl) + ">)\n";
  out += "Ontology(";
  if (!ontology.iri().empty()) out += "<" + ontology.iri() + ">";
  out += "\n";
  for (const auto& axiom : ontology.axioms()) {
    out += to_string(axiom);
    out += '\n';
  }
  out += ")\n";
  return out;
}

void save_ontology(const Ontology& ontology, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << serialize_ontology(ontology);
}

}  // namespace ontodiv
