#include "psi/alpha.hpp"

#include <string_view>
#include <vector>

namespace psi {

namespace {

// Innermost binding wins; returns -1 for free names.
int level_of(const std::vector<std::string>& env, const std::string& name) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::string canonical_name(int level) { return "@" + std::to_string(level); }

void type_key(const Type& a, std::vector<TypeVar>& env, std::string& out) {
  switch (a.kind()) {
    case Type::Kind::Var: {
      int level = level_of(env, a.name());
      if (level >= 0) {
        out += 'b';
        out += std::to_string(level);
      } else {
        out += 'f';
        out += a.name();
      }
      out += ';';
      return;
    }
    case Type::Kind::Arrow:
    case Type::Kind::Conj:
      out += a.is_arrow() ? '>' : '&';
      type_key(a.left(), env, out);
      type_key(a.right(), env, out);
      return;
    case Type::Kind::Forall:
      out += 'A';
      env.push_back(a.name());
      type_key(a.body(), env, out);
      env.pop_back();
      return;
  }
}

Type type_tree(const Type& a, std::vector<TypeVar>& env) {
  switch (a.kind()) {
    case Type::Kind::Var: {
      int level = level_of(env, a.name());
      return level >= 0 ? Type::var(canonical_name(level)) : a;
    }
    case Type::Kind::Arrow:
      return Type::arrow(type_tree(a.left(), env), type_tree(a.right(), env));
    case Type::Kind::Conj:
      return Type::conj(type_tree(a.left(), env), type_tree(a.right(), env));
    case Type::Kind::Forall: {
      std::string name = canonical_name(static_cast<int>(env.size()));
      env.push_back(a.name());
      Type body = type_tree(a.body(), env);
      env.pop_back();
      return Type::forall(std::move(name), std::move(body));
    }
  }
  return a;
}

struct TermEnv {
  std::vector<TypeVar> types;
  std::vector<TermVar> vars;
};

void term_key(const Term& r, TermEnv& env, std::string& out) {
  switch (r.kind()) {
    case Term::Kind::Var: {
      int level = level_of(env.vars, r.name());
      if (level >= 0) {
        out += 'v';
        out += std::to_string(level);
      } else {
        out += 'x';
        out += r.name();
      }
      out += ';';
      type_key(r.type(), env.types, out);
      return;
    }
    case Term::Kind::Lam:
      out += 'L';
      type_key(r.type(), env.types, out);
      env.vars.push_back(r.name());
      term_key(r.body(), env, out);
      env.vars.pop_back();
      return;
    case Term::Kind::App:
    case Term::Kind::Pair:
      out += r.is_app() ? '@' : 'P';
      term_key(r.first(), env, out);
      term_key(r.second(), env, out);
      return;
    case Term::Kind::Proj:
    case Term::Kind::TApp:
      out += r.is_proj() ? 'p' : 't';
      type_key(r.type(), env.types, out);
      term_key(r.first(), env, out);
      return;
    case Term::Kind::TLam:
      out += 'T';
      env.types.push_back(r.name());
      term_key(r.body(), env, out);
      env.types.pop_back();
      return;
  }
}

Term term_tree(const Term& r, TermEnv& env) {
  switch (r.kind()) {
    case Term::Kind::Var: {
      int level = level_of(env.vars, r.name());
      return Term::var(level >= 0 ? canonical_name(level) : r.name(),
                       type_tree(r.type(), env.types));
    }
    case Term::Kind::Lam: {
      std::string name = canonical_name(static_cast<int>(env.vars.size()));
      Type ann = type_tree(r.type(), env.types);
      env.vars.push_back(r.name());
      Term body = term_tree(r.body(), env);
      env.vars.pop_back();
      return Term::lam(std::move(name), std::move(ann), std::move(body));
    }
    case Term::Kind::App:
      return Term::app(term_tree(r.first(), env), term_tree(r.second(), env));
    case Term::Kind::Pair:
      return Term::pair(term_tree(r.first(), env),
                        term_tree(r.second(), env));
    case Term::Kind::Proj:
      return Term::proj(type_tree(r.type(), env.types),
                        term_tree(r.first(), env));
    case Term::Kind::TApp:
      return Term::tapp(term_tree(r.first(), env),
                        type_tree(r.type(), env.types));
    case Term::Kind::TLam: {
      std::string name = canonical_name(static_cast<int>(env.types.size()));
      env.types.push_back(r.name());
      Term body = term_tree(r.body(), env);
      env.types.pop_back();
      return Term::tlam(std::move(name), std::move(body));
    }
  }
  return r;
}

}  // namespace

std::uint64_t digest_of(const std::string& key) {
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string alpha_key(const Type& a) {
  std::vector<TypeVar> env;
  std::string out;
  out.reserve(a.size() * 3);
  type_key(a, env, out);
  return out;
}

std::string alpha_key(const Term& r) {
  TermEnv env;
  std::string out;
  out.reserve(r.size() * 6);
  term_key(r, env, out);
  return out;
}

AlphaCanonical<Type> alpha_canonical(const Type& a) {
  std::vector<TypeVar> env;
  std::string key = alpha_key(a);
  std::uint64_t digest = digest_of(key);
  return {type_tree(a, env), std::move(key), digest};
}

AlphaCanonical<Term> alpha_canonical(const Term& r) {
  TermEnv env;
  std::string key = alpha_key(r);
  std::uint64_t digest = digest_of(key);
  return {term_tree(r, env), std::move(key), digest};
}

bool alpha_equal(const Type& a, const Type& b) {
  return a.same_node(b) || alpha_key(a) == alpha_key(b);
}

bool alpha_equal(const Term& r, const Term& s) {
  return r.same_node(s) || alpha_key(r) == alpha_key(s);
}

}  // namespace psi
