#include "psi/iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace psi {

std::strong_ordering operator<=>(const CanonType& a, const CanonType& b) {
  std::size_t n = std::min(a.primes.size(), b.primes.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.primes[i] <=> b.primes[i]; c != 0) return c;
  return a.primes.size() <=> b.primes.size();
}

std::strong_ordering operator<=>(const Prime& a, const Prime& b) {
  if (auto c = a.prefix <=> b.prefix; c != 0) return c;
  if (auto c = a.head.index() <=> b.head.index(); c != 0) return c;
  if (a.head.index() == 0) {
    if (auto c = std::get<0>(a.head) <=> std::get<0>(b.head); c != 0) return c;
  } else {
    int c = std::get<1>(a.head).compare(std::get<1>(b.head));
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  if (a.arg.has_value() != b.arg.has_value())
    return a.arg.has_value() ? std::strong_ordering::greater
                             : std::strong_ordering::less;
  if (!a.arg) return std::strong_ordering::equal;
  return *a.arg <=> *b.arg;
}

bool operator==(const CanonType& a, const CanonType& b) {
  return (a <=> b) == 0;
}

bool operator==(const Prime& a, const Prime& b) { return (a <=> b) == 0; }

std::string to_string(const CanonType& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    const Prime& p = c.primes[i];
    if (i) out += ", ";
    if (p.prefix) out += "forall^" + std::to_string(p.prefix) + " ";
    if (p.arg) out += "(" + to_string(*p.arg) + ") -> ";
    if (p.head.index() == 0)
      out += "#" + std::to_string(std::get<0>(p.head));
    else
      out += std::get<1>(p.head);
  }
  return out + "]";
}

PrimeView view_prime(const Type& prime) {
  PrimeView view;
  const Type* t = &prime;
  while (t->is_forall()) {
    view.prefix.push_back(t->name());
    t = &t->body();
  }
  if (t->is_var()) {
    view.head = t->name();
  } else if (t->is_arrow() && t->right().is_var()) {
    view.arg = t->left();
    view.head = t->right().name();
  } else {
    throw std::logic_error("view_prime: not a prime factor shape");
  }
  return view;
}

namespace {

// Renames every prefix binder of `prime` that would capture a name in
// `avoid`. Inner shadowing binders are handled by rename_binder.
Type freshen_prefix(const Type& prime, const std::set<TypeVar>& avoid) {
  if (!prime.is_forall()) return prime;
  Type body = freshen_prefix(prime.body(), avoid);
  Type rebuilt = body.same_node(prime.body())
                     ? prime
                     : Type::forall(prime.name(), std::move(body));
  if (avoid.contains(prime.name()))
    return rename_binder(rebuilt, fresh_name(prime.name()));
  return rebuilt;
}

void raw_prime_factors(const Type& a, std::vector<Type>& out) {
  switch (a.kind()) {
    case Type::Kind::Var:
      out.push_back(a);
      return;
    case Type::Kind::Conj:
      raw_prime_factors(a.left(), out);
      raw_prime_factors(a.right(), out);
      return;
    case Type::Kind::Arrow: {
      std::vector<Type> cod;
      raw_prime_factors(a.right(), cod);
      std::set<TypeVar> avoid = free_type_vars(a.left());
      for (const Type& p : cod) {
        PrimeView v = view_prime(freshen_prefix(p, avoid));
        Type arg = v.arg ? Type::conj(a.left(), *v.arg) : a.left();
        out.push_back(forall_all(
            v.prefix, Type::arrow(std::move(arg), Type::var(v.head))));
      }
      return;
    }
    case Type::Kind::Forall: {
      std::vector<Type> body;
      raw_prime_factors(a.body(), body);
      for (Type& p : body) out.push_back(Type::forall(a.name(), std::move(p)));
      return;
    }
  }
}

std::vector<Type> raw_prime_factors(const Type& a) {
  std::vector<Type> out;
  raw_prime_factors(a, out);
  return out;
}

CanonType canonicalize_in(const Type& a, std::vector<TypeVar>& env);

Prime canonical_prime(const Type& prime, std::vector<TypeVar>& env) {
  PrimeView v = view_prime(prime);
  std::size_t depth = env.size();
  env.insert(env.end(), v.prefix.begin(), v.prefix.end());
  Prime p;
  p.prefix = static_cast<std::uint32_t>(v.prefix.size());
  p.head = v.head;
  for (std::size_t i = env.size(); i-- > 0;) {
    if (env[i] == v.head) {
      p.head = static_cast<std::uint32_t>(i);
      break;
    }
  }
  if (v.arg) p.arg = canonicalize_in(*v.arg, env);
  env.resize(depth);
  return p;
}

CanonType canonicalize_in(const Type& a, std::vector<TypeVar>& env) {
  CanonType c;
  for (const Type& prime : raw_prime_factors(a))
    c.primes.push_back(canonical_prime(prime, env));
  std::sort(c.primes.begin(), c.primes.end());
  return c;
}

struct Factor {
  Prime canon;
  Type type;
};

std::vector<Factor> factors_in(const Type& a, std::vector<TypeVar>& env) {
  std::vector<Factor> out;
  for (Type& prime : raw_prime_factors(a))
    out.push_back({canonical_prime(prime, env), std::move(prime)});
  return out;
}

// Removes one occurrence of each prime of `part` from `whole`; returns the
// leftover denotations, or nothing if `part` is not a sub-multiset.
std::optional<std::vector<Type>> remove_submultiset(
    std::vector<Factor> whole, const CanonType& part) {
  for (const Prime& p : part.primes) {
    auto it = std::find_if(whole.begin(), whole.end(),
                           [&](const Factor& f) { return f.canon == p; });
    if (it == whole.end()) return std::nullopt;
    whole.erase(it);
  }
  std::vector<Type> rest;
  for (Factor& f : whole) rest.push_back(std::move(f.type));
  return rest;
}

}  // namespace

std::vector<Type> prime_factors(const Type& a) {
  std::vector<TypeVar> env;
  std::vector<Factor> factors = factors_in(a, env);
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Factor& x, const Factor& y) {
                     return x.canon < y.canon;
                   });
  std::vector<Type> out;
  for (Factor& f : factors) out.push_back(std::move(f.type));
  return out;
}

CanonType canonicalize(const Type& a) {
  std::vector<TypeVar> env;
  return canonicalize_in(a, env);
}

bool types_isomorphic(const Type& a, const Type& b) {
  return a.same_node(b) || canonicalize(a) == canonicalize(b);
}

Type conjunction_of(std::vector<Type> members) {
  if (members.empty())
    throw std::invalid_argument("conjunction_of: empty multiset");
  std::vector<std::pair<CanonType, Type>> keyed;
  for (Type& m : members) keyed.emplace_back(canonicalize(m), std::move(m));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  Type result = keyed.back().second;
  for (std::size_t i = keyed.size() - 1; i-- > 0;)
    result = Type::conj(keyed[i].second, std::move(result));
  return result;
}

std::optional<Type> conj_residual(const Type& t, const Type& a) {
  std::vector<TypeVar> env;
  auto rest = remove_submultiset(factors_in(t, env), canonicalize(a));
  if (!rest || rest->empty()) return std::nullopt;
  return conjunction_of(std::move(*rest));
}

std::optional<Type> arrow_residual(const Type& t, const Type& s) {
  std::set<TypeVar> avoid = free_type_vars(s);
  std::vector<Type> contributions;
  for (const Type& raw : raw_prime_factors(t)) {
    PrimeView v = view_prime(freshen_prefix(raw, avoid));
    if (!v.arg) return std::nullopt;
    std::vector<TypeVar> env = v.prefix;
    auto rest =
        remove_submultiset(factors_in(*v.arg, env), canonicalize_in(s, env));
    if (!rest) return std::nullopt;
    Type head = Type::var(v.head);
    contributions.push_back(forall_all(
        v.prefix, rest->empty()
                      ? head
                      : Type::arrow(conjunction_of(std::move(*rest)), head)));
  }
  return conjunction_of(std::move(contributions));
}

std::optional<ForallSplit> forall_strip(const Type& t) {
  std::vector<Type> primes = raw_prime_factors(t);
  for (const Type& p : primes)
    if (!p.is_forall()) return std::nullopt;
  TypeVar binder = fresh_name(primes.front().name());
  std::vector<Type> stripped;
  for (const Type& p : primes)
    stripped.push_back(subst_type(p.body(), p.name(), Type::var(binder)));
  return ForallSplit{binder, conjunction_of(std::move(stripped))};
}

}  // namespace psi
