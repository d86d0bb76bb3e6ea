#include "psi/generator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "psi/alpha.hpp"

namespace psi {

namespace {

const std::vector<TypeVar> kFreePool = {"X", "Y", "Z"};

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

Type build_type(std::mt19937_64& rng, std::size_t size,
                std::vector<TypeVar>& bound,
                const std::vector<TypeVar>& free_vars, double forall_bias) {
  if (size <= 1) {
    std::size_t pick = uniform(rng, 0, free_vars.size() + bound.size() - 1);
    return Type::var(pick < free_vars.size() ? free_vars[pick]
                                             : bound[pick - free_vars.size()]);
  }
  if (size == 2 || chance(rng, forall_bias)) {
    TypeVar w = "W" + std::to_string(bound.size());
    bound.push_back(w);
    Type body = build_type(rng, size - 1, bound, free_vars, forall_bias);
    bound.pop_back();
    return Type::forall(w, body);
  }
  std::size_t left = uniform(rng, 1, size - 2);
  Type a = build_type(rng, left, bound, free_vars, forall_bias);
  Type b = build_type(rng, size - 1 - left, bound, free_vars, forall_bias);
  return chance(rng, 0.5) ? Type::arrow(a, b) : Type::conj(a, b);
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  Term gen(const Type& goal, std::size_t n) {
    if (n <= 1) return leaf(goal);
    std::vector<std::pair<double, std::function<Term()>>> options;
    auto add = [&](double w, std::function<Term()> f) {
      options.emplace_back(w, std::move(f));
    };
    if (goal.is_arrow()) add(3, [&] { return intro_lam(goal, n); });
    if (goal.is_forall()) add(3, [&] { return intro_tlam(goal, n); });
    if (goal.is_conj() && n >= 3) add(3, [&] { return intro_pair(goal, n); });
    if (n >= 4) add(1, [&] { return beta_redex(goal, n); });
    if (n >= 3) add(1.5, [&] { return application(goal, n); });
    if (n >= 4) add(1, [&] { return projected_pair(goal, n); });
    if (n >= 2) add(0.5, [&] { return projection(goal, n); });
    if (n >= 3) add(1, [&] { return type_application(goal, n); });
    add(0.5, [&] { return leaf(goal); });

    double total = 0;
    for (auto& o : options) total += o.first;
    double x = std::uniform_real_distribution<double>(0, total)(rng_);
    for (auto& o : options) {
      if (x < o.first) return o.second();
      x -= o.first;
    }
    return options.back().second();
  }

  Type small_type(std::size_t max_size) {
    std::vector<TypeVar> vars = kFreePool;
    vars.insert(vars.end(), tbound_.begin(), tbound_.end());
    return random_type(rng_, max_size, vars, 0.15);
  }

  std::mt19937_64& rng() { return rng_; }
  const Context& ctx() const { return ctx_; }

 private:
  Term leaf(const Type& goal) {
    std::vector<const std::pair<TermVar, Type>*> matching;
    for (const auto& b : env_)
      if (alpha_equal(b.second, goal)) matching.push_back(&b);
    if (!matching.empty() && chance(rng_, 0.8)) {
      const auto* b = matching[uniform(rng_, 0, matching.size() - 1)];
      return Term::var(b->first, b->second);
    }
    auto ftv = free_type_vars(goal);
    bool escapes = std::any_of(ftv.begin(), ftv.end(), [&](const TypeVar& v) {
      return tbound_.contains(v);
    });
    if (escapes) {
      // A free variable of this type would block the enclosing tlam.
      Type any = Type::forall("W", Type::var("W"));
      return Term::tapp(free_var(any), goal);
    }
    return free_var(goal);
  }

  Term free_var(const Type& ann) {
    std::string key = alpha_key(ann);
    auto it = free_by_type_.find(key);
    if (it == free_by_type_.end()) {
      std::size_t i = free_by_type_.size();
      std::string name(1, static_cast<char>('a' + i % 23));
      if (i >= 23) name += std::to_string(i / 23);
      it = free_by_type_.emplace(key, name).first;
      ctx_.emplace(name, ann);
    }
    return Term::var(it->second, ctx_.at(it->second));
  }

  TermVar fresh_var() { return "x" + std::to_string(++counter_); }
  TypeVar fresh_tvar() { return "U" + std::to_string(++counter_); }

  std::size_t split(std::size_t n) { return uniform(rng_, 1, n - 1); }

  Term with_binding(const TermVar& x, const Type& a,
                    const std::function<Term()>& f) {
    env_.emplace_back(x, a);
    Term t = f();
    env_.pop_back();
    return t;
  }

  Term with_tbinder(const TypeVar& u, const std::function<Term()>& f) {
    tbound_.insert(u);
    Term t = f();
    tbound_.erase(u);
    return t;
  }

  Term intro_lam(const Type& goal, std::size_t n) {
    TermVar x = fresh_var();
    Term body = with_binding(x, goal.left(),
                             [&] { return gen(goal.right(), n - 1); });
    return Term::lam(x, goal.left(), body);
  }

  Term intro_tlam(const Type& goal, std::size_t n) {
    TypeVar u = fresh_tvar();
    Type body_goal = subst_type(goal.body(), goal.name(), Type::var(u));
    Term body = with_tbinder(u, [&] { return gen(body_goal, n - 1); });
    return Term::tlam(u, body);
  }

  Term intro_pair(const Type& goal, std::size_t n) {
    std::size_t left = split(n - 1);
    Term a = gen(goal.left(), left);
    Term b = gen(goal.right(), n - 1 - left);
    return Term::pair(a, b);
  }

  // (lam x^A. body) arg
  Term beta_redex(const Type& goal, std::size_t n) {
    Type a = small_type(3);
    TermVar x = fresh_var();
    std::size_t body_size = split(n - 2);
    Term body = with_binding(x, a, [&] { return gen(goal, body_size); });
    Term arg = gen(a, n - 2 - body_size);
    return Term::app(Term::lam(x, a, body), arg);
  }

  Term application(const Type& goal, std::size_t n) {
    Type a = small_type(3);
    if (n >= 5 && chance(rng_, 0.3)) {
      Type b = small_type(2);
      std::size_t fun_size = uniform(rng_, 1, n - 4);
      std::size_t rest = n - 2 - fun_size;
      std::size_t left = split(rest);
      switch (uniform(rng_, 0, 2)) {
        case 0: {  // f <a, b> with f uncurried
          Term f = gen(Type::arrow(Type::conj(a, b), goal), fun_size);
          Term x = gen(a, left), y = gen(b, rest - left);
          return Term::app(f, Term::pair(x, y));
        }
        case 1: {  // f <a, b> with f curried
          Term f = gen(Type::arrow(a, Type::arrow(b, goal)), fun_size);
          Term x = gen(a, left), y = gen(b, rest - left);
          return Term::app(f, Term::pair(x, y));
        }
        default: {  // f a b with f uncurried
          Term f = gen(Type::arrow(Type::conj(a, b), goal), fun_size);
          Term x = gen(a, left), y = gen(b, rest - left);
          return Term::app(Term::app(f, x), y);
        }
      }
    }
    std::size_t fun_size = split(n - 1);
    Term f = gen(Type::arrow(a, goal), fun_size);
    Term x = gen(a, n - 1 - fun_size);
    return Term::app(f, x);
  }

  // pi_G(<r, s>)
  Term projected_pair(const Type& goal, std::size_t n) {
    Type b = small_type(3);
    std::size_t left = split(n - 2);
    Term r = gen(goal, left);
    Term s = gen(b, n - 2 - left);
    return Term::proj(goal, Term::pair(r, s));
  }

  Term projection(const Type& goal, std::size_t n) {
    Type b = small_type(3);
    return Term::proj(goal, gen(Type::conj(goal, b), n - 1));
  }

  // (tlam U. t)[B] or t'[B], where [U:=B] of t's goal is the goal.
  Term type_application(const Type& goal, std::size_t n) {
    TypeVar u = fresh_tvar();
    Type arg = small_type(2);
    std::vector<Type> candidates;
    subtrees(goal, {}, candidates);
    if (!candidates.empty() && chance(rng_, 0.6))
      arg = candidates[uniform(rng_, 0, candidates.size() - 1)];
    Type inner = abstract(goal, alpha_key(arg), free_type_vars(arg), u, {});
    if (chance(rng_, 0.7)) {
      Term body = with_tbinder(u, [&] { return gen(inner, n - 2); });
      return Term::tapp(Term::tlam(u, body), arg);
    }
    return Term::tapp(gen(Type::forall(u, inner), n - 1), arg);
  }

  // Subtrees whose free variables are not bound inside `a`.
  void subtrees(const Type& a, std::set<TypeVar> bound,
                std::vector<Type>& out) {
    auto ftv = free_type_vars(a);
    if (std::none_of(ftv.begin(), ftv.end(),
                     [&](const TypeVar& v) { return bound.contains(v); }))
      out.push_back(a);
    switch (a.kind()) {
      case Type::Kind::Var:
        return;
      case Type::Kind::Arrow:
      case Type::Kind::Conj:
        subtrees(a.left(), bound, out);
        subtrees(a.right(), bound, out);
        return;
      case Type::Kind::Forall:
        bound.insert(a.name());
        subtrees(a.body(), bound, out);
        return;
    }
  }

  // Replaces some occurrences of the type with key `key` by u.
  Type abstract(const Type& a, const std::string& key,
                const std::set<TypeVar>& ftv, const TypeVar& u,
                std::set<TypeVar> bound) {
    bool safe = std::none_of(ftv.begin(), ftv.end(), [&](const TypeVar& v) {
      return bound.contains(v);
    });
    if (safe && alpha_key(a) == key && chance(rng_, 0.7)) return Type::var(u);
    switch (a.kind()) {
      case Type::Kind::Var:
        return a;
      case Type::Kind::Arrow:
        return Type::arrow(abstract(a.left(), key, ftv, u, bound),
                           abstract(a.right(), key, ftv, u, bound));
      case Type::Kind::Conj:
        return Type::conj(abstract(a.left(), key, ftv, u, bound),
                          abstract(a.right(), key, ftv, u, bound));
      case Type::Kind::Forall:
        bound.insert(a.name());
        return Type::forall(a.name(), abstract(a.body(), key, ftv, u, bound));
    }
    return a;
  }

  std::mt19937_64 rng_;
  Context ctx_;
  std::map<std::string, TermVar> free_by_type_;
  std::vector<std::pair<TermVar, Type>> env_;
  std::set<TypeVar> tbound_;
  int counter_ = 0;
};

}  // namespace

Type random_type(std::mt19937_64& rng, std::size_t max_size,
                 const std::vector<TypeVar>& free_vars, double forall_bias) {
  std::size_t size = uniform(rng, 1, std::max<std::size_t>(1, max_size));
  std::vector<TypeVar> bound;
  return build_type(rng, size, bound, free_vars, forall_bias);
}

GeneratedTerm gen_typed_term(std::size_t size, std::uint64_t seed) {
  size = std::max<std::size_t>(size, 1);
  std::mt19937_64 seeds(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Generator g(seeds());
    Type goal = random_type(g.rng(), std::min<std::size_t>(size, 5), kFreePool);
    Term t = g.gen(goal, size);
    if (t.size() <= size) return {g.ctx(), t, goal};
  }
  Type goal = Type::var("X");
  return {{{"a", goal}}, Term::var("a", goal), goal};
}

GeneratedTerm gen_typed_pair(std::size_t size, std::uint64_t seed) {
  size = std::max<std::size_t>(size, 3);
  std::mt19937_64 seeds(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Generator g(seeds());
    std::size_t left = uniform(g.rng(), 1, size - 2);
    Type a = random_type(g.rng(), 4, kFreePool);
    Type b = random_type(g.rng(), 4, kFreePool);
    Term r = g.gen(a, left);
    Term s = g.gen(b, size - 1 - left);
    Term t = Term::pair(r, s);
    if (t.size() <= size) return {g.ctx(), t, Type::conj(a, b)};
  }
  Type goal = Type::var("X");
  Term x = Term::var("a", goal);
  return {{{"a", goal}}, Term::pair(x, x), Type::conj(goal, goal)};
}

}  // namespace psi
