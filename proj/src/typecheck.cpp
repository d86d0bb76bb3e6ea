#include "psi/typecheck.hpp"

#include <algorithm>

#include "psi/format.hpp"
#include "psi/iso.hpp"

namespace psi {

std::string to_string(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::UnboundVariable:
      return "UnboundVariable";
    case TypeErrorKind::AnnotationMismatch:
      return "AnnotationMismatch";
    case TypeErrorKind::NotAnArrow:
      return "NotAnArrow";
    case TypeErrorKind::NotAConjunction:
      return "NotAConjunction";
    case TypeErrorKind::NotAUniversal:
      return "NotAUniversal";
    case TypeErrorKind::EscapingTypeVariable:
      return "EscapingTypeVariable";
    case TypeErrorKind::ProjectionTypeNotPresent:
      return "ProjectionTypeNotPresent";
  }
  return "?";
}

std::string to_string(const TermPath& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

TypeError::TypeError(TypeErrorKind kind, TermPath path,
                     const std::string& detail)
    : std::runtime_error(to_string(kind) + " at " + to_string(path) + ": " +
                         detail),
      kind_(kind),
      path_(std::move(path)),
      detail_(detail) {}

namespace {

class Synthesizer {
 public:
  Synthesizer(const Context& ctx, Scope scope) : ctx_(ctx), scope_(scope) {}

  Type run(const Term& r) {
    switch (r.kind()) {
      case Term::Kind::Var:
        return var(r);
      case Term::Kind::Lam: {
        scope_stack_.emplace_back(r.name(), r.type());
        Type body = child(r.body(), 0);
        scope_stack_.pop_back();
        return Type::arrow(r.type(), std::move(body));
      }
      case Term::Kind::App: {
        Type fun = child(r.fun(), 0);
        Type arg = child(r.arg(), 1);
        auto result = arrow_residual(fun, arg);
        if (!result)
          fail(TypeErrorKind::NotAnArrow,
               format(fun) + " cannot be applied to " + format(arg));
        return *result;
      }
      case Term::Kind::Pair: {
        Type left = child(r.left(), 0);
        Type right = child(r.right(), 1);
        return Type::conj(std::move(left), std::move(right));
      }
      case Term::Kind::Proj: {
        Type of = child(r.body(), 0);
        if (!conj_residual(of, r.type())) {
          bool single = prime_factors(of).size() < 2;
          fail(single ? TypeErrorKind::NotAConjunction
                      : TypeErrorKind::ProjectionTypeNotPresent,
               format(r.type()) + " is not a strict factor of " + format(of));
        }
        return r.type();
      }
      case Term::Kind::TLam: {
        for (const auto& [name, ann] : free_vars(r.body())) {
          const Type* bound = lookup(name);
          const Type& type = bound ? *bound : ann;
          if (occurs_free(r.name(), type))
            fail(TypeErrorKind::EscapingTypeVariable,
                 r.name() + " is free in the type " + format(type) + " of " +
                     name);
        }
        return Type::forall(r.name(), child(r.body(), 0));
      }
      case Term::Kind::TApp: {
        Type fun = child(r.fun(), 0);
        auto split = forall_strip(fun);
        if (!split)
          fail(TypeErrorKind::NotAUniversal,
               format(fun) + " is not universally quantified");
        return subst_type(split->body, split->binder, r.type());
      }
    }
    return r.type();
  }

 private:
  Type child(const Term& r, int index) {
    path_.push_back(index);
    Type t = run(r);
    path_.pop_back();
    return t;
  }

  const Type* lookup(const TermVar& name) const {
    for (auto it = scope_stack_.rbegin(); it != scope_stack_.rend(); ++it)
      if (it->first == name) return &it->second;
    if (auto it = ctx_.find(name); it != ctx_.end()) return &it->second;
    if (auto it = derived_.find(name); it != derived_.end())
      return &it->second;
    return nullptr;
  }

  Type var(const Term& r) {
    const Type* bound = lookup(r.name());
    if (!bound) {
      if (scope_ == Scope::Closed)
        fail(TypeErrorKind::UnboundVariable, r.name() + " is not bound");
      derived_.emplace(r.name(), r.type());
      return r.type();
    }
    if (!types_isomorphic(*bound, r.type()))
      fail(TypeErrorKind::AnnotationMismatch,
           r.name() + " is annotated " + format(r.type()) +
               " but bound at " + format(*bound));
    return r.type();
  }

  [[noreturn]] void fail(TypeErrorKind kind, const std::string& detail) {
    throw TypeError(kind, path_, detail);
  }

  const Context& ctx_;
  Scope scope_;
  std::vector<std::pair<TermVar, Type>> scope_stack_;
  Context derived_;
  TermPath path_;
};

}  // namespace

Type synthesize(const Context& ctx, const Term& r, Scope scope) {
  return Synthesizer(ctx, scope).run(r);
}

std::optional<Type> try_synthesize(const Context& ctx, const Term& r) {
  try {
    return synthesize(ctx, r);
  } catch (const TypeError&) {
    return std::nullopt;
  }
}

std::optional<Type> try_synthesize(const Term& r) {
  static const Context empty;
  return try_synthesize(empty, r);
}

Judgment judge(const Context& ctx, const Term& r, Scope scope) {
  return {ctx, r, synthesize(ctx, r, scope)};
}

bool check(const Context& ctx, const Term& r, const Type& a, Scope scope) {
  return types_isomorphic(synthesize(ctx, r, scope), a);
}

}  // namespace psi
