#include "psi/type.hpp"

#include <atomic>

namespace psi {

namespace {

std::atomic<std::uint64_t> fresh_counter{0};

}  // namespace

std::string fresh_name(const std::string& base) {
  return base_name(base) + "#" + std::to_string(++fresh_counter);
}

bool is_fresh_name(const std::string& name) {
  return name.find('#') != std::string::npos;
}

std::string base_name(const std::string& name) {
  return name.substr(0, name.find('#'));
}

Type Type::var(TypeVar name) {
  return Type(std::make_shared<const Node>(
      Node{Kind::Var, std::move(name), Type(), Type(), 1}));
}

Type Type::arrow(Type dom, Type cod) {
  std::size_t size = 1 + dom.size() + cod.size();
  return Type(std::make_shared<const Node>(
      Node{Kind::Arrow, {}, std::move(dom), std::move(cod), size}));
}

Type Type::conj(Type left, Type right) {
  std::size_t size = 1 + left.size() + right.size();
  return Type(std::make_shared<const Node>(
      Node{Kind::Conj, {}, std::move(left), std::move(right), size}));
}

Type Type::forall(TypeVar binder, Type body) {
  std::size_t size = 1 + body.size();
  return Type(std::make_shared<const Node>(
      Node{Kind::Forall, std::move(binder), std::move(body), Type(), size}));
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Type::Kind::Var:
      return a.name() == b.name();
    case Type::Kind::Arrow:
    case Type::Kind::Conj:
      return a.left() == b.left() && a.right() == b.right();
    case Type::Kind::Forall:
      return a.name() == b.name() && a.body() == b.body();
  }
  return false;
}

namespace {

void collect_ftv(const Type& a, std::set<TypeVar>& bound,
                 std::set<TypeVar>& out) {
  switch (a.kind()) {
    case Type::Kind::Var:
      if (!bound.contains(a.name())) out.insert(a.name());
      return;
    case Type::Kind::Arrow:
    case Type::Kind::Conj:
      collect_ftv(a.left(), bound, out);
      collect_ftv(a.right(), bound, out);
      return;
    case Type::Kind::Forall: {
      bool inserted = bound.insert(a.name()).second;
      collect_ftv(a.body(), bound, out);
      if (inserted) bound.erase(a.name());
      return;
    }
  }
}

}  // namespace

std::set<TypeVar> free_type_vars(const Type& a) {
  std::set<TypeVar> bound, out;
  collect_ftv(a, bound, out);
  return out;
}

bool occurs_free(const TypeVar& x, const Type& a) {
  switch (a.kind()) {
    case Type::Kind::Var:
      return a.name() == x;
    case Type::Kind::Arrow:
    case Type::Kind::Conj:
      return occurs_free(x, a.left()) || occurs_free(x, a.right());
    case Type::Kind::Forall:
      return a.name() != x && occurs_free(x, a.body());
  }
  return false;
}

namespace {

Type subst_impl(const Type& a, const TypeVar& x, const Type& b,
                const std::set<TypeVar>& b_ftv) {
  switch (a.kind()) {
    case Type::Kind::Var:
      return a.name() == x ? b : a;
    case Type::Kind::Arrow:
    case Type::Kind::Conj: {
      Type l = subst_impl(a.left(), x, b, b_ftv);
      Type r = subst_impl(a.right(), x, b, b_ftv);
      if (l.same_node(a.left()) && r.same_node(a.right())) return a;
      return a.is_arrow() ? Type::arrow(std::move(l), std::move(r))
                          : Type::conj(std::move(l), std::move(r));
    }
    case Type::Kind::Forall: {
      if (a.name() == x || !occurs_free(x, a.body())) return a;
      if (b_ftv.contains(a.name())) {
        Type renamed = rename_binder(a, fresh_name(a.name()));
        return Type::forall(renamed.name(),
                            subst_impl(renamed.body(), x, b, b_ftv));
      }
      Type body = subst_impl(a.body(), x, b, b_ftv);
      if (body.same_node(a.body())) return a;
      return Type::forall(a.name(), std::move(body));
    }
  }
  return a;
}

}  // namespace

Type subst_type(const Type& a, const TypeVar& x, const Type& b) {
  if (!occurs_free(x, a)) return a;
  return subst_impl(a, x, b, free_type_vars(b));
}

Type rename_binder(const Type& forall, const TypeVar& fresh) {
  return Type::forall(
      fresh, subst_type(forall.body(), forall.name(), Type::var(fresh)));
}

Type forall_all(const std::vector<TypeVar>& binders, Type body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    body = Type::forall(*it, std::move(body));
  return body;
}

}  // namespace psi
