#include "psi/oracle.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_set>

namespace psi {

namespace {

// Nameless types. Bound variables are indices counting enclosing binders
// outward from 0.
struct Node;
using Tree = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Bound, Free, Arrow, Conj, Forall } kind;
  int index = 0;
  std::string name;
  Tree a;
  Tree b;
};

Tree bound(int i) { return std::make_shared<const Node>(Node{Node::Kind::Bound, i, {}, {}, {}}); }
Tree free_var(const std::string& n) { return std::make_shared<const Node>(Node{Node::Kind::Free, 0, n, {}, {}}); }
Tree arrow(Tree a, Tree b) { return std::make_shared<const Node>(Node{Node::Kind::Arrow, 0, {}, std::move(a), std::move(b)}); }
Tree conj(Tree a, Tree b) { return std::make_shared<const Node>(Node{Node::Kind::Conj, 0, {}, std::move(a), std::move(b)}); }
Tree forall(Tree a) { return std::make_shared<const Node>(Node{Node::Kind::Forall, 0, {}, std::move(a), {}}); }

Tree from_type(const Type& t, std::vector<TypeVar>& env) {
  switch (t.kind()) {
    case Type::Kind::Var:
      for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
        if (env[static_cast<std::size_t>(i)] == t.name())
          return bound(static_cast<int>(env.size()) - 1 - i);
      return free_var(t.name());
    case Type::Kind::Arrow:
      return arrow(from_type(t.left(), env), from_type(t.right(), env));
    case Type::Kind::Conj:
      return conj(from_type(t.left(), env), from_type(t.right(), env));
    case Type::Kind::Forall: {
      env.push_back(t.name());
      Tree body = from_type(t.body(), env);
      env.pop_back();
      return forall(std::move(body));
    }
  }
  throw std::logic_error("oracle: unknown type kind");
}

Tree from_type(const Type& t) {
  std::vector<TypeVar> env;
  return from_type(t, env);
}

void write_key(const Tree& t, std::string& out) {
  switch (t->kind) {
    case Node::Kind::Bound:
      out += 'i';
      out += std::to_string(t->index);
      out += ';';
      return;
    case Node::Kind::Free:
      out += 'v';
      out += t->name;
      out += ';';
      return;
    case Node::Kind::Arrow:
      out += '>';
      write_key(t->a, out);
      write_key(t->b, out);
      return;
    case Node::Kind::Conj:
      out += '&';
      write_key(t->a, out);
      write_key(t->b, out);
      return;
    case Node::Kind::Forall:
      out += 'A';
      write_key(t->a, out);
      return;
  }
}

std::string key_of(const Tree& t) {
  std::string out;
  write_key(t, out);
  return out;
}

bool uses(const Tree& t, int i) {
  switch (t->kind) {
    case Node::Kind::Bound:
      return t->index == i;
    case Node::Kind::Free:
      return false;
    case Node::Kind::Arrow:
    case Node::Kind::Conj:
      return uses(t->a, i) || uses(t->b, i);
    case Node::Kind::Forall:
      return uses(t->a, i + 1);
  }
  return false;
}

// Adds d to every index >= cutoff.
Tree shift(const Tree& t, int d, int cutoff) {
  switch (t->kind) {
    case Node::Kind::Bound:
      return t->index >= cutoff ? bound(t->index + d) : t;
    case Node::Kind::Free:
      return t;
    case Node::Kind::Arrow:
      return arrow(shift(t->a, d, cutoff), shift(t->b, d, cutoff));
    case Node::Kind::Conj:
      return conj(shift(t->a, d, cutoff), shift(t->b, d, cutoff));
    case Node::Kind::Forall:
      return forall(shift(t->a, d, cutoff + 1));
  }
  return t;
}

bool same(const Tree& x, const Tree& y) { return key_of(x) == key_of(y); }

void root_steps(const Tree& t, std::vector<Tree>& out) {
  using K = Node::Kind;
  const Tree& a = t->a;
  const Tree& b = t->b;
  switch (t->kind) {
    case K::Conj:
      out.push_back(conj(b, a));
      if (b->kind == K::Conj) out.push_back(conj(conj(a, b->a), b->b));
      if (a->kind == K::Conj) out.push_back(conj(a->a, conj(a->b, b)));
      if (a->kind == K::Arrow && b->kind == K::Arrow && same(a->a, b->a))
        out.push_back(arrow(a->a, conj(a->b, b->b)));
      if (a->kind == K::Forall && b->kind == K::Forall)
        out.push_back(forall(conj(a->a, b->a)));
      return;
    case K::Arrow:
      if (b->kind == K::Conj)
        out.push_back(conj(arrow(a, b->a), arrow(a, b->b)));
      if (a->kind == K::Conj) out.push_back(arrow(a->a, arrow(a->b, b)));
      if (b->kind == K::Arrow) out.push_back(arrow(conj(a, b->a), b->b));
      if (b->kind == K::Forall)
        out.push_back(forall(arrow(shift(a, 1, 0), b->a)));
      return;
    case K::Forall:
      if (a->kind == K::Arrow && !uses(a->a, 0))
        out.push_back(arrow(shift(a->a, -1, 0), forall(a->b)));
      if (a->kind == K::Conj)
        out.push_back(conj(forall(a->a), forall(a->b)));
      return;
    default:
      return;
  }
}

void steps(const Tree& t, std::vector<Tree>& out) {
  using K = Node::Kind;
  root_steps(t, out);
  std::vector<Tree> sub;
  switch (t->kind) {
    case K::Arrow:
    case K::Conj: {
      auto make = t->kind == K::Arrow ? arrow : conj;
      steps(t->a, sub);
      for (auto& s : sub) out.push_back(make(s, t->b));
      sub.clear();
      steps(t->b, sub);
      for (auto& s : sub) out.push_back(make(t->a, s));
      return;
    }
    case K::Forall:
      steps(t->a, sub);
      for (auto& s : sub) out.push_back(forall(s));
      return;
    default:
      return;
  }
}

template <typename Stop>
OracleClosure closure(const Tree& start, std::size_t budget, Stop stop) {
  OracleClosure result{{}, true};
  std::vector<Tree> queue{start};
  std::unordered_set<std::string> seen{key_of(start)};
  result.members.push_back(key_of(start));
  if (stop(result.members.back())) return result;
  for (std::size_t next = 0; next < queue.size(); ++next) {
    std::vector<Tree> out;
    steps(queue[next], out);
    for (auto& n : out) {
      std::string k = key_of(n);
      if (seen.contains(k)) continue;
      if (seen.size() >= budget) {
        result.closed = false;
        return result;
      }
      seen.insert(k);
      result.members.push_back(k);
      queue.push_back(std::move(n));
      if (stop(result.members.back())) return result;
    }
  }
  return result;
}

std::vector<Tree> trees_of_size(std::size_t size, int depth,
                                const std::vector<TypeVar>& free_vars,
                                std::map<std::pair<std::size_t, int>,
                                         std::vector<Tree>>& memo) {
  auto it = memo.find({size, depth});
  if (it != memo.end()) return it->second;
  std::vector<Tree> out;
  if (size == 1) {
    for (const auto& v : free_vars) out.push_back(free_var(v));
    for (int i = 0; i < depth; ++i) out.push_back(bound(i));
  } else {
    for (std::size_t left = 1; left + 1 < size; ++left) {
      auto ls = trees_of_size(left, depth, free_vars, memo);
      auto rs = trees_of_size(size - 1 - left, depth, free_vars, memo);
      for (const auto& l : ls)
        for (const auto& r : rs) {
          out.push_back(arrow(l, r));
          out.push_back(conj(l, r));
        }
    }
    for (auto& body : trees_of_size(size - 1, depth + 1, free_vars, memo))
      out.push_back(forall(body));
  }
  memo.emplace(std::make_pair(size, depth), out);
  return out;
}

Type to_type(const Tree& t, int depth) {
  switch (t->kind) {
    case Node::Kind::Bound:
      return Type::var("Z" + std::to_string(depth - 1 - t->index));
    case Node::Kind::Free:
      return Type::var(t->name);
    case Node::Kind::Arrow:
      return Type::arrow(to_type(t->a, depth), to_type(t->b, depth));
    case Node::Kind::Conj:
      return Type::conj(to_type(t->a, depth), to_type(t->b, depth));
    case Node::Kind::Forall:
      return Type::forall("Z" + std::to_string(depth),
                          to_type(t->a, depth + 1));
  }
  throw std::logic_error("oracle: unknown node kind");
}

}  // namespace

std::string oracle_key(const Type& a) { return key_of(from_type(a)); }

std::vector<Type> oracle_steps(const Type& a) {
  std::vector<Tree> out;
  steps(from_type(a), out);
  std::vector<Type> types;
  for (const auto& t : out) types.push_back(to_type(t, 0));
  return types;
}

OracleClosure oracle_closure(const Type& a, std::size_t budget) {
  return closure(from_type(a), budget, [](const std::string&) { return false; });
}

OracleVerdict iso_oracle(const Type& a, const Type& b, std::size_t budget) {
  std::string target = oracle_key(b);
  bool found = false;
  OracleClosure c = closure(from_type(a), budget, [&](const std::string& k) {
    found = k == target;
    return found;
  });
  return {found, c.closed && !found, c.members.size()};
}

std::vector<Type> enumerate_types(const std::vector<TypeVar>& free_vars,
                                  std::size_t max_size) {
  std::map<std::pair<std::size_t, int>, std::vector<Tree>> memo;
  std::vector<Type> out;
  for (std::size_t size = 1; size <= max_size; ++size)
    for (const auto& t : trees_of_size(size, 0, free_vars, memo))
      out.push_back(to_type(t, 0));
  return out;
}

}  // namespace psi
