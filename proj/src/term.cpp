#include "psi/term.hpp"

namespace psi {

Term Term::var(TermVar name, Type ann) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Var, std::move(name), std::move(ann), Term(), Term(), 1}));
}

Term Term::lam(TermVar name, Type ann, Term body) {
  std::size_t size = 1 + body.size();
  return Term(std::make_shared<const Node>(Node{
      Kind::Lam, std::move(name), std::move(ann), std::move(body), Term(),
      size}));
}

Term Term::app(Term fun, Term arg) {
  std::size_t size = 1 + fun.size() + arg.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::App, {}, Type(), std::move(fun), std::move(arg), size}));
}

Term Term::pair(Term left, Term right) {
  std::size_t size = 1 + left.size() + right.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::Pair, {}, Type(), std::move(left), std::move(right), size}));
}

Term Term::proj(Type at, Term of) {
  std::size_t size = 1 + of.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::Proj, {}, std::move(at), std::move(of), Term(), size}));
}

Term Term::tlam(TypeVar binder, Term body) {
  std::size_t size = 1 + body.size();
  return Term(std::make_shared<const Node>(Node{
      Kind::TLam, std::move(binder), Type(), std::move(body), Term(), size}));
}

Term Term::tapp(Term fun, Type at) {
  std::size_t size = 1 + fun.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::TApp, {}, std::move(at), std::move(fun), Term(), size}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::Lam:
      return a.name() == b.name() && a.type() == b.type() &&
             a.body() == b.body();
    case Term::Kind::App:
    case Term::Kind::Pair:
      return a.first() == b.first() && a.second() == b.second();
    case Term::Kind::Proj:
    case Term::Kind::TApp:
      return a.type() == b.type() && a.first() == b.first();
    case Term::Kind::TLam:
      return a.name() == b.name() && a.body() == b.body();
  }
  return false;
}

namespace {

void collect_ftv(const Term& r, std::set<TypeVar>& bound,
                 std::set<TypeVar>& out) {
  auto add_type = [&](const Type& a) {
    for (const auto& v : free_type_vars(a))
      if (!bound.contains(v)) out.insert(v);
  };
  switch (r.kind()) {
    case Term::Kind::Var:
      add_type(r.type());
      return;
    case Term::Kind::Lam:
      add_type(r.type());
      collect_ftv(r.body(), bound, out);
      return;
    case Term::Kind::App:
    case Term::Kind::Pair:
      collect_ftv(r.first(), bound, out);
      collect_ftv(r.second(), bound, out);
      return;
    case Term::Kind::Proj:
    case Term::Kind::TApp:
      add_type(r.type());
      collect_ftv(r.first(), bound, out);
      return;
    case Term::Kind::TLam: {
      bool inserted = bound.insert(r.name()).second;
      collect_ftv(r.body(), bound, out);
      if (inserted) bound.erase(r.name());
      return;
    }
  }
}

void collect_fv(const Term& r, std::set<TermVar>& bound,
                std::map<TermVar, Type>& out) {
  switch (r.kind()) {
    case Term::Kind::Var:
      if (!bound.contains(r.name())) out.try_emplace(r.name(), r.type());
      return;
    case Term::Kind::Lam: {
      bool inserted = bound.insert(r.name()).second;
      collect_fv(r.body(), bound, out);
      if (inserted) bound.erase(r.name());
      return;
    }
    case Term::Kind::App:
    case Term::Kind::Pair:
      collect_fv(r.first(), bound, out);
      collect_fv(r.second(), bound, out);
      return;
    case Term::Kind::Proj:
    case Term::Kind::TApp:
    case Term::Kind::TLam:
      collect_fv(r.first(), bound, out);
      return;
  }
}

}  // namespace

std::set<TypeVar> free_type_vars(const Term& r) {
  std::set<TypeVar> bound, out;
  collect_ftv(r, bound, out);
  return out;
}

std::set<TypeVar> free_type_vars(const Context& ctx) {
  std::set<TypeVar> out;
  for (const auto& [name, type] : ctx) out.merge(free_type_vars(type));
  return out;
}

std::map<TermVar, Type> free_vars(const Term& r) {
  std::set<TermVar> bound;
  std::map<TermVar, Type> out;
  collect_fv(r, bound, out);
  return out;
}

bool occurs_free(const TermVar& x, const Term& r) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return r.name() == x;
    case Term::Kind::Lam:
      return r.name() != x && occurs_free(x, r.body());
    case Term::Kind::App:
    case Term::Kind::Pair:
      return occurs_free(x, r.first()) || occurs_free(x, r.second());
    case Term::Kind::Proj:
    case Term::Kind::TApp:
    case Term::Kind::TLam:
      return occurs_free(x, r.first());
  }
  return false;
}

namespace {

bool occurs_type_var(const TypeVar& x, const Term& r) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return occurs_free(x, r.type());
    case Term::Kind::Lam:
      return occurs_free(x, r.type()) || occurs_type_var(x, r.body());
    case Term::Kind::App:
    case Term::Kind::Pair:
      return occurs_type_var(x, r.first()) || occurs_type_var(x, r.second());
    case Term::Kind::Proj:
    case Term::Kind::TApp:
      return occurs_free(x, r.type()) || occurs_type_var(x, r.first());
    case Term::Kind::TLam:
      return r.name() != x && occurs_type_var(x, r.body());
  }
  return false;
}

// Rebuilds a node with new children, reusing it when nothing changed.
Term rebuild(const Term& r, const Type& type, const Term& a, const Term& b) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return type.same_node(r.type()) ? r : Term::var(r.name(), type);
    case Term::Kind::Lam:
      if (type.same_node(r.type()) && a.same_node(r.body())) return r;
      return Term::lam(r.name(), type, a);
    case Term::Kind::App:
      if (a.same_node(r.first()) && b.same_node(r.second())) return r;
      return Term::app(a, b);
    case Term::Kind::Pair:
      if (a.same_node(r.first()) && b.same_node(r.second())) return r;
      return Term::pair(a, b);
    case Term::Kind::Proj:
      if (type.same_node(r.type()) && a.same_node(r.first())) return r;
      return Term::proj(type, a);
    case Term::Kind::TApp:
      if (type.same_node(r.type()) && a.same_node(r.first())) return r;
      return Term::tapp(a, type);
    case Term::Kind::TLam:
      return a.same_node(r.body()) ? r : Term::tlam(r.name(), a);
  }
  return r;
}

Term subst_type_impl(const Term& r, const TypeVar& x, const Type& b,
                     const std::set<TypeVar>& b_ftv) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return rebuild(r, subst_type(r.type(), x, b), r, r);
    case Term::Kind::Lam:
      return rebuild(r, subst_type(r.type(), x, b),
                     subst_type_impl(r.body(), x, b, b_ftv), r);
    case Term::Kind::App:
    case Term::Kind::Pair:
      return rebuild(r, r.type(), subst_type_impl(r.first(), x, b, b_ftv),
                     subst_type_impl(r.second(), x, b, b_ftv));
    case Term::Kind::Proj:
    case Term::Kind::TApp:
      return rebuild(r, subst_type(r.type(), x, b),
                     subst_type_impl(r.first(), x, b, b_ftv), r);
    case Term::Kind::TLam: {
      if (r.name() == x || !occurs_type_var(x, r.body())) return r;
      if (b_ftv.contains(r.name())) {
        TypeVar fresh = fresh_name(r.name());
        Term body = subst_type(r.body(), r.name(), Type::var(fresh));
        return Term::tlam(fresh, subst_type_impl(body, x, b, b_ftv));
      }
      return rebuild(r, r.type(), subst_type_impl(r.body(), x, b, b_ftv), r);
    }
  }
  return r;
}

Term rename_impl(const Term& r, const TermVar& x, const TermVar& y) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return r.name() == x ? Term::var(y, r.type()) : r;
    case Term::Kind::Lam:
      if (r.name() == x) return r;
      if (r.name() == y && occurs_free(x, r.body())) {
        TermVar fresh = fresh_name(y);
        Term body = rename_impl(r.body(), y, fresh);
        return Term::lam(fresh, r.type(), rename_impl(body, x, y));
      }
      return rebuild(r, r.type(), rename_impl(r.body(), x, y), r);
    case Term::Kind::App:
    case Term::Kind::Pair:
      return rebuild(r, r.type(), rename_impl(r.first(), x, y),
                     rename_impl(r.second(), x, y));
    case Term::Kind::Proj:
    case Term::Kind::TApp:
    case Term::Kind::TLam:
      return rebuild(r, r.type(), rename_impl(r.first(), x, y), r);
  }
  return r;
}

Term subst_term_impl(const Term& r, const TermVar& x, const Term& s,
                     const std::map<TermVar, Type>& s_fv,
                     const std::set<TypeVar>& s_ftv) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return r.name() == x ? s : r;
    case Term::Kind::Lam: {
      if (r.name() == x || !occurs_free(x, r.body())) return r;
      if (s_fv.contains(r.name())) {
        TermVar fresh = fresh_name(r.name());
        Term body = rename_impl(r.body(), r.name(), fresh);
        return Term::lam(fresh, r.type(),
                         subst_term_impl(body, x, s, s_fv, s_ftv));
      }
      return rebuild(r, r.type(),
                     subst_term_impl(r.body(), x, s, s_fv, s_ftv), r);
    }
    case Term::Kind::App:
    case Term::Kind::Pair:
      return rebuild(r, r.type(),
                     subst_term_impl(r.first(), x, s, s_fv, s_ftv),
                     subst_term_impl(r.second(), x, s, s_fv, s_ftv));
    case Term::Kind::Proj:
    case Term::Kind::TApp:
      return rebuild(r, r.type(),
                     subst_term_impl(r.first(), x, s, s_fv, s_ftv), r);
    case Term::Kind::TLam: {
      if (!occurs_free(x, r.body())) return r;
      if (s_ftv.contains(r.name())) {
        TypeVar fresh = fresh_name(r.name());
        Term body = subst_type(r.body(), r.name(), Type::var(fresh));
        return Term::tlam(fresh, subst_term_impl(body, x, s, s_fv, s_ftv));
      }
      return rebuild(r, r.type(),
                     subst_term_impl(r.body(), x, s, s_fv, s_ftv), r);
    }
  }
  return r;
}

}  // namespace

Term subst_term(const Term& r, const TermVar& x, const Term& s) {
  if (!occurs_free(x, r)) return r;
  return subst_term_impl(r, x, s, free_vars(s), free_type_vars(s));
}

Term subst_type(const Term& r, const TypeVar& x, const Type& b) {
  if (!occurs_type_var(x, r)) return r;
  return subst_type_impl(r, x, b, free_type_vars(b));
}

Term rename_var(const Term& r, const TermVar& x, const TermVar& y) {
  return rename_impl(r, x, y);
}

}  // namespace psi
