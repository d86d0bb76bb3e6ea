#include "psi/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace psi {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { Ident, Symbol, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string> kKeywords = {"forall", "lam",  "tlam",  "pi",
                                         "where",  "ctx",  "def",   "expect"};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '\''))
        ++j;
      tokens.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)),
                        line, column});
      advance(j - i);
      continue;
    }
    for (std::string_view sym : {"->", "/\\", "=>"}) {
      if (text.substr(i, sym.size()) == sym) {
        tokens.push_back({Token::Kind::Symbol, std::string(sym), line, column});
        advance(sym.size());
        goto next;
      }
    }
    if (std::string_view("()<>,.:[]=").find(c) != std::string_view::npos) {
      tokens.push_back({Token::Kind::Symbol, std::string(1, c), line, column});
      advance(1);
      continue;
    }
    throw ParseError(line, column, std::string("unexpected character '") + c +
                                       "'");
  next:;
  }
  tokens.push_back({Token::Kind::End, "", line, column});
  return tokens;
}

// Placeholder annotation for free variables until the where clause is read.
const TypeVar kUnresolved = "?";

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(std::string_view text) const {
    return peek().kind != Token::Kind::End && peek().text == text;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void error(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::End ? "end of input"
                                                   : "'" + t.text + "'";
    throw ParseError(t.line, t.column, message + ", found " + found);
  }

  void expect(std::string_view text) {
    if (!at(text)) error("expected '" + std::string(text) + "'");
    next();
  }

  std::string identifier(bool upper) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || kKeywords.contains(t.text))
      error(upper ? "expected a type variable" : "expected a term variable");
    bool is_upper = std::isupper(static_cast<unsigned char>(t.text[0]));
    if (is_upper != upper)
      error(upper ? "type variables start with an uppercase letter"
                  : "term variables start with a lowercase letter");
    return next().text;
  }

  // ---- types --------------------------------------------------------------

  Type type() {
    if (at("forall")) {
      next();
      TypeVar binder = identifier(true);
      expect(".");
      return Type::forall(std::move(binder), type());
    }
    Type left = conj();
    if (at("->")) {
      next();
      return Type::arrow(std::move(left), type());
    }
    return left;
  }

  Type conj() {
    Type left = type_operand();
    if (at("/\\")) {
      next();
      return Type::conj(std::move(left), at("forall") ? type() : conj());
    }
    return left;
  }

  Type type_operand() {
    if (at("forall")) return type();
    if (at("(")) {
      next();
      Type t = type();
      expect(")");
      return t;
    }
    return Type::var(identifier(true));
  }

  // ---- terms --------------------------------------------------------------

  bool starts_term() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Symbol) return t.text == "(" || t.text == "<";
    if (t.kind != Token::Kind::Ident) return false;
    if (t.text == "lam" || t.text == "tlam" || t.text == "pi") return true;
    return !kKeywords.contains(t.text) &&
           std::islower(static_cast<unsigned char>(t.text[0]));
  }

  Term term() {
    if (at("lam")) {
      next();
      TermVar name = identifier(false);
      expect(":");
      Type ann = type();
      expect(".");
      scope_.emplace_back(name, ann);
      Term body = term();
      scope_.pop_back();
      return Term::lam(std::move(name), std::move(ann), std::move(body));
    }
    if (at("tlam")) {
      next();
      TypeVar binder = identifier(true);
      expect(".");
      return Term::tlam(std::move(binder), term());
    }
    Term head = atom();
    while (true) {
      if (at("[")) {
        next();
        Type arg = type();
        expect("]");
        head = Term::tapp(std::move(head), std::move(arg));
      } else if (at("lam") || at("tlam")) {
        return Term::app(std::move(head), term());
      } else if (starts_term()) {
        head = Term::app(std::move(head), atom());
      } else {
        return head;
      }
    }
  }

  Term atom() {
    if (at("(")) {
      next();
      Term t = term();
      expect(")");
      return t;
    }
    if (at("<")) {
      next();
      Term left = term();
      expect(",");
      Term right = term();
      expect(">");
      return Term::pair(std::move(left), std::move(right));
    }
    if (at("pi")) {
      next();
      expect("[");
      Type index = type();
      expect("]");
      return Term::proj(std::move(index), atom());
    }
    if (at("lam") || at("tlam")) return term();
    const Token& t = peek();
    TermVar name = identifier(false);
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return Term::var(name, it->second);
    free_.try_emplace(name, std::make_pair(t.line, t.column));
    return Term::var(name, Type::var(kUnresolved));
  }

  // x : T, y : U
  std::vector<std::pair<TermVar, Type>> bindings() {
    std::vector<std::pair<TermVar, Type>> out;
    do {
      if (!out.empty()) next();
      TermVar name = identifier(false);
      expect(":");
      out.emplace_back(std::move(name), type());
    } while (at(","));
    return out;
  }

  // A term plus optional where clause, with free variables resolved.
  Term closed_term(const Context& ctx) {
    free_.clear();
    Term t = term();
    Context annotations = ctx;
    if (at("where")) {
      next();
      for (auto& [name, type] : bindings())
        annotations.insert_or_assign(name, type);
    }
    return resolve(t, annotations);
  }

  Term resolve(const Term& t, const Context& annotations) const {
    for (const auto& [name, where] : free_) {
      if (!annotations.contains(name))
        throw ParseError(where.first, where.second,
                         "free variable '" + name + "' has no annotation");
    }
    std::set<TermVar> bound;
    return resolve(t, annotations, bound);
  }

 private:
  Term resolve(const Term& t, const Context& annotations,
               std::set<TermVar>& bound) const {
    switch (t.kind()) {
      case Term::Kind::Var:
        if (!bound.contains(t.name()) && t.type().is_var() &&
            t.type().name() == kUnresolved)
          return Term::var(t.name(), annotations.at(t.name()));
        return t;
      case Term::Kind::Lam: {
        bool inserted = bound.insert(t.name()).second;
        Term body = resolve(t.body(), annotations, bound);
        if (inserted) bound.erase(t.name());
        return Term::lam(t.name(), t.type(), std::move(body));
      }
      case Term::Kind::App:
        return Term::app(resolve(t.fun(), annotations, bound),
                         resolve(t.arg(), annotations, bound));
      case Term::Kind::Pair:
        return Term::pair(resolve(t.left(), annotations, bound),
                          resolve(t.right(), annotations, bound));
      case Term::Kind::Proj:
        return Term::proj(t.type(), resolve(t.body(), annotations, bound));
      case Term::Kind::TLam:
        return Term::tlam(t.name(), resolve(t.body(), annotations, bound));
      case Term::Kind::TApp:
        return Term::tapp(resolve(t.fun(), annotations, bound), t.type());
    }
    return t;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::pair<TermVar, Type>> scope_;
  std::map<TermVar, std::pair<int, int>> free_;
};

}  // namespace

Type parse_type(std::string_view text) {
  Parser p(text);
  Type t = p.type();
  if (!p.at_end()) p.error("unexpected trailing input");
  return t;
}

Term parse_term(std::string_view text, const Context& ctx) {
  Parser p(text);
  Term t = p.closed_term(ctx);
  if (!p.at_end()) p.error("unexpected trailing input");
  return t;
}

Context parse_context(std::string_view text) {
  Parser p(text);
  Context ctx;
  for (auto& [name, type] : p.bindings()) ctx.insert_or_assign(name, type);
  if (!p.at_end()) p.error("unexpected trailing input");
  return ctx;
}

const Declaration* SourceFile::find(const std::string& name) const {
  for (const auto& d : declarations)
    if (d.name == name) return &d;
  return nullptr;
}

SourceFile parse_source(std::string_view text) {
  SourceFile file;
  file.text = std::string(text);
  Parser p(text);
  Context ctx;
  while (!p.at_end()) {
    int line = p.peek().line;
    if (p.at("ctx")) {
      p.next();
      for (auto& [name, type] : p.bindings()) ctx.insert_or_assign(name, type);
    } else if (p.at("def")) {
      p.next();
      std::string name = p.identifier(false);
      if (file.find(name))
        throw ParseError(line, 1, "duplicate declaration '" + name + "'");
      p.expect("=");
      Term term = p.closed_term(ctx);
      file.declarations.push_back({name, ctx, std::move(term), line});
    } else if (p.at("expect")) {
      p.next();
      std::string name = p.identifier(false);
      const Declaration* decl = file.find(name);
      if (!decl)
        throw ParseError(line, 1, "expectation for unknown '" + name + "'");
      Expectation e{name, Expectation::Kind::HasType, std::nullopt,
                    std::nullopt, line};
      if (p.at(":")) {
        p.next();
        e.type = p.type();
      } else {
        p.expect("=>");
        e.kind = Expectation::Kind::ReducesTo;
        e.term = p.closed_term(decl->ctx);
      }
      file.expectations.push_back(std::move(e));
    } else {
      p.error("expected 'ctx', 'def' or 'expect'");
    }
  }
  return file;
}

SourceFile load_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_source(buffer.str());
}

}  // namespace psi
