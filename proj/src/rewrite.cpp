#include "psi/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>

#include "psi/alpha.hpp"
#include "psi/iso.hpp"
#include "psi/typecheck.hpp"

namespace psi {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Comm: return "COMM";
    case Rule::Asso: return "ASSO";
    case Rule::DistLam: return "DIST_lam";
    case Rule::DistApp: return "DIST_app";
    case Rule::Curry: return "CURRY";
    case Rule::PCommTLamLam: return "P-COMM_forall_i_imp_i";
    case Rule::PCommTAppLam: return "P-COMM_forall_e_imp_i";
    case Rule::PDistTLamPair: return "P-DIST_forall_i_conj_i";
    case Rule::PDistTAppPair: return "P-DIST_forall_e_conj_i";
    case Rule::PDistTLamProj: return "P-DIST_forall_i_conj_e";
    case Rule::PDistTAppProj: return "P-DIST_forall_e_conj_e";
    case Rule::BetaLam: return "beta_lam";
    case Rule::BetaTLam: return "beta_tlam";
    case Rule::Proj: return "pi";
  }
  return "?";
}

bool is_reduction(Rule rule) {
  return rule == Rule::BetaLam || rule == Rule::BetaTLam || rule == Rule::Proj;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

namespace {

using Out = std::vector<Rewrite>;
using RootFn = void (*)(const Term&, Out&);

void emit(Out& out, Rule rule, bool reversed, Term t) {
  out.push_back({rule, reversed, std::move(t)});
}

// Type of an open subterm, or nothing when it does not type.
std::optional<Type> type_of(const Term& r) { return try_synthesize(r); }

// Renames type binder `from` to `to` inside a term body.
Term rename_tvar(const Term& body, const TypeVar& from, const TypeVar& to) {
  if (from == to) return body;
  return subst_type(body, from, Type::var(to));
}

// Occurrences of `a` in `d` that a substitution [X:=a] could have produced:
// alpha-equal subtrees whose free variables are not bound inside `d`.
void occurrences(const Type& d, const std::string& key,
                 const std::set<TypeVar>& ftv_a, std::set<TypeVar>& bound,
                 std::vector<const Type*>& out) {
  bool clash = std::any_of(ftv_a.begin(), ftv_a.end(), [&](const TypeVar& v) {
    return bound.contains(v);
  });
  if (!clash && alpha_key(d) == key) {
    out.push_back(&d);
    return;
  }
  switch (d.kind()) {
    case Type::Kind::Var:
      return;
    case Type::Kind::Arrow:
    case Type::Kind::Conj:
      occurrences(d.left(), key, ftv_a, bound, out);
      occurrences(d.right(), key, ftv_a, bound, out);
      return;
    case Type::Kind::Forall: {
      bool inserted = bound.insert(d.name()).second;
      occurrences(d.body(), key, ftv_a, bound, out);
      if (inserted) bound.erase(d.name());
      return;
    }
  }
}

// d with the chosen occurrences replaced by the variable x.
Type abstract(const Type& d, const std::set<const Type*>& chosen,
              const TypeVar& x) {
  if (chosen.contains(&d)) return Type::var(x);
  switch (d.kind()) {
    case Type::Kind::Var:
      return d;
    case Type::Kind::Arrow:
      return Type::arrow(abstract(d.left(), chosen, x),
                         abstract(d.right(), chosen, x));
    case Type::Kind::Conj:
      return Type::conj(abstract(d.left(), chosen, x),
                        abstract(d.right(), chosen, x));
    case Type::Kind::Forall:
      return Type::forall(d.name(), abstract(d.body(), chosen, x));
  }
  return d;
}

// Guard of P-DIST_forall_e_conj_e: r : forall X. (B /\ C) for some C.
bool projects_under_forall(const Term& r, const TypeVar& x, const Type& b) {
  auto t = type_of(r);
  if (!t) return false;
  auto split = forall_strip(*t);
  if (!split) return false;
  Type index = subst_type(b, x, Type::var(split->binder));
  return conj_residual(split->body, index).has_value();
}

constexpr std::size_t kMaxAbstractedOccurrences = 10;

void root_equiv(const Term& r, Out& out) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return;

    case Term::Kind::Pair: {
      const Term& a = r.left();
      const Term& b = r.right();
      emit(out, Rule::Comm, false, Term::pair(b, a));
      if (b.is_pair())
        emit(out, Rule::Asso, false,
             Term::pair(Term::pair(a, b.left()), b.right()));
      if (a.is_pair())
        emit(out, Rule::Asso, true,
             Term::pair(a.left(), Term::pair(a.right(), b)));
      // <lam x^A. a, lam y^A. b>  ->  lam z^A. <a, b>
      if (a.is_lam() && b.is_lam() && alpha_equal(a.type(), b.type())) {
        TermVar z = a.name();
        if (z != b.name() && occurs_free(z, b.body())) z = fresh_name(z);
        Term body = Term::pair(rename_var(a.body(), a.name(), z),
                               rename_var(b.body(), b.name(), z));
        emit(out, Rule::DistLam, true, Term::lam(z, a.type(), body));
      }
      // <a c, b c>  ->  <a, b> c
      if (a.is_app() && b.is_app() && alpha_equal(a.arg(), b.arg()))
        emit(out, Rule::DistApp, true,
             Term::app(Term::pair(a.fun(), b.fun()), a.arg()));
      // <tlam X. a, tlam Y. b>  ->  tlam Z. <a, b>
      if (a.is_tlam() && b.is_tlam()) {
        TypeVar z = a.name();
        if (z != b.name() && free_type_vars(b.body()).contains(z))
          z = fresh_name(z);
        Term body = Term::pair(rename_tvar(a.body(), a.name(), z),
                               rename_tvar(b.body(), b.name(), z));
        emit(out, Rule::PDistTLamPair, true, Term::tlam(z, body));
      }
      // <a[A], b[A]>  ->  <a, b>[A]
      if (a.is_tapp() && b.is_tapp() && alpha_equal(a.type(), b.type()))
        emit(out, Rule::PDistTAppPair, true,
             Term::tapp(Term::pair(a.fun(), b.fun()), a.type()));
      return;
    }

    case Term::Kind::Lam: {
      const Term& body = r.body();
      if (body.is_pair())
        emit(out, Rule::DistLam, false,
             Term::pair(Term::lam(r.name(), r.type(), body.left()),
                        Term::lam(r.name(), r.type(), body.right())));
      // lam x^A. tlam X. a  ->  tlam X'. lam x^A. a
      if (body.is_tlam()) {
        TypeVar x = body.name();
        Term inner = body.body();
        if (occurs_free(x, r.type())) {
          TypeVar fresh = fresh_name(x);
          inner = rename_tvar(inner, x, fresh);
          x = fresh;
        }
        emit(out, Rule::PCommTLamLam, true,
             Term::tlam(x, Term::lam(r.name(), r.type(), inner)));
      }
      // lam x^A. a[B]  ->  (lam x^A. a)[B]
      if (body.is_tapp())
        emit(out, Rule::PCommTAppLam, true,
             Term::tapp(Term::lam(r.name(), r.type(), body.fun()),
                        body.type()));
      return;
    }

    case Term::Kind::App: {
      const Term& f = r.fun();
      const Term& c = r.arg();
      if (f.is_pair())
        emit(out, Rule::DistApp, false,
             Term::pair(Term::app(f.left(), c), Term::app(f.right(), c)));
      if (c.is_pair())
        emit(out, Rule::Curry, false,
             Term::app(Term::app(f, c.left()), c.right()));
      if (f.is_app())
        emit(out, Rule::Curry, true,
             Term::app(f.fun(), Term::pair(f.arg(), c)));
      return;
    }

    case Term::Kind::TLam: {
      const Term& body = r.body();
      if (body.is_lam() && !occurs_free(r.name(), body.type()))
        emit(out, Rule::PCommTLamLam, false,
             Term::lam(body.name(), body.type(),
                       Term::tlam(r.name(), body.body())));
      if (body.is_pair())
        emit(out, Rule::PDistTLamPair, false,
             Term::pair(Term::tlam(r.name(), body.left()),
                        Term::tlam(r.name(), body.right())));
      // tlam X. pi_A(a)  ->  pi_{forall X. A}(tlam X. a)
      if (body.is_proj())
        emit(out, Rule::PDistTLamProj, true,
             Term::proj(Type::forall(r.name(), body.type()),
                        Term::tlam(r.name(), body.body())));
      return;
    }

    case Term::Kind::TApp: {
      const Term& f = r.fun();
      const Type& a = r.type();
      if (f.is_lam())
        emit(out, Rule::PCommTAppLam, false,
             Term::lam(f.name(), f.type(), Term::tapp(f.body(), a)));
      if (f.is_pair())
        emit(out, Rule::PDistTAppPair, false,
             Term::pair(Term::tapp(f.left(), a), Term::tapp(f.right(), a)));
      // (pi_{forall X. B} r)[A]  ->  pi_{[X:=A]B}(r[A])
      if (f.is_proj() && f.type().is_forall()) {
        const Type& index = f.type();
        if (projects_under_forall(f.body(), index.name(), index.body()))
          emit(out, Rule::PDistTAppProj, false,
               Term::proj(subst_type(index.body(), index.name(), a),
                          Term::tapp(f.body(), a)));
      }
      return;
    }

    case Term::Kind::Proj: {
      const Type& index = r.type();
      const Term& of = r.body();
      // pi_{forall Y. A}(tlam X. a)  ->  tlam Z. pi_{[Y:=Z]A}([X:=Z]a)
      if (index.is_forall() && of.is_tlam()) {
        TypeVar z = of.name();
        if (z != index.name() && occurs_free(z, index)) z = fresh_name(z);
        Type inner_index = subst_type(index.body(), index.name(), Type::var(z));
        Term inner = rename_tvar(of.body(), of.name(), z);
        emit(out, Rule::PDistTLamProj, false,
             Term::tlam(z, Term::proj(inner_index, inner)));
      }
      // pi_D(a[A])  ->  (pi_{forall X. B} a)[A]  for every B with [X:=A]B = D
      if (of.is_tapp()) {
        const Term& a = of.fun();
        const Type& arg = of.type();
        const Type& d = index;
        std::vector<const Type*> occ;
        std::set<TypeVar> bound;
        occurrences(d, alpha_key(arg), free_type_vars(arg), bound, occ);
        if (occ.size() > kMaxAbstractedOccurrences) return;
        TypeVar x = fresh_name("X");
        for (std::size_t mask = 0; mask < (std::size_t{1} << occ.size());
             ++mask) {
          std::set<const Type*> chosen;
          for (std::size_t i = 0; i < occ.size(); ++i)
            if (mask & (std::size_t{1} << i)) chosen.insert(occ[i]);
          Type b = abstract(d, chosen, x);
          if (!projects_under_forall(a, x, b)) continue;
          emit(out, Rule::PDistTAppProj, true,
               Term::tapp(Term::proj(Type::forall(x, b), a), arg));
        }
      }
      return;
    }
  }
}

void root_reduce(const Term& r, Out& out) {
  switch (r.kind()) {
    case Term::Kind::App:
      if (r.fun().is_lam()) {
        const Term& lam = r.fun();
        auto t = type_of(r.arg());
        if (t && types_isomorphic(*t, lam.type()))
          emit(out, Rule::BetaLam, false,
               subst_term(lam.body(), lam.name(), r.arg()));
      }
      return;
    case Term::Kind::TApp:
      if (r.fun().is_tlam())
        emit(out, Rule::BetaTLam, false,
             subst_type(r.fun().body(), r.fun().name(), r.type()));
      return;
    case Term::Kind::Proj:
      if (r.body().is_pair()) {
        auto t = type_of(r.body().left());
        if (t && types_isomorphic(*t, r.type()))
          emit(out, Rule::Proj, false, r.body().left());
      }
      return;
    default:
      return;
  }
}

// Applies `root` at r and, through congruence, at every subterm.
void everywhere(const Term& r, RootFn root, Out& out) {
  root(r, out);
  auto lift = [&](const Term& child, auto&& wrap) {
    Out sub;
    everywhere(child, root, sub);
    for (auto& s : sub) out.push_back({s.rule, s.reversed, wrap(s.term)});
  };
  switch (r.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Lam:
      lift(r.body(),
           [&](const Term& t) { return Term::lam(r.name(), r.type(), t); });
      return;
    case Term::Kind::App:
      lift(r.fun(), [&](const Term& t) { return Term::app(t, r.arg()); });
      lift(r.arg(), [&](const Term& t) { return Term::app(r.fun(), t); });
      return;
    case Term::Kind::Pair:
      lift(r.left(), [&](const Term& t) { return Term::pair(t, r.right()); });
      lift(r.right(), [&](const Term& t) { return Term::pair(r.left(), t); });
      return;
    case Term::Kind::Proj:
      lift(r.body(), [&](const Term& t) { return Term::proj(r.type(), t); });
      return;
    case Term::Kind::TLam:
      lift(r.body(), [&](const Term& t) { return Term::tlam(r.name(), t); });
      return;
    case Term::Kind::TApp:
      lift(r.fun(), [&](const Term& t) { return Term::tapp(t, r.type()); });
      return;
  }
}

}  // namespace

std::vector<Rewrite> equiv_neighbors(const Term& r) {
  Out out;
  everywhere(r, root_equiv, out);
  return out;
}

std::vector<Rewrite> head_reduce(const Term& r) {
  Out out;
  everywhere(r, root_reduce, out);
  return out;
}

std::size_t default_class_budget() {
  if (const char* env = std::getenv("PSI_DEFAULT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

std::optional<std::size_t> EquivClass::find_key(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EquivClass::find(const Term& t) const {
  return find_key(alpha_key(t));
}

const std::string& EquivClass::representative_key() const {
  return *std::min_element(keys_.begin(), keys_.end());
}

std::vector<Term> EquivClass::witness(std::size_t i) const {
  std::vector<Term> chain;
  while (true) {
    chain.push_back(members_[i]);
    if (i == 0) break;
    i = parent_[i];
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

EquivClass equiv_class(const Term& r, std::size_t budget) {
  EquivClass cls;
  cls.budget_ = budget;
  auto add = [&](const Term& t, std::string key, std::size_t parent) {
    cls.index_.emplace(key, cls.members_.size());
    cls.members_.push_back(t);
    cls.keys_.push_back(std::move(key));
    cls.parent_.push_back(parent);
  };
  add(r, alpha_key(r), 0);
  for (std::size_t next = 0; next < cls.members_.size(); ++next) {
    for (auto& n : equiv_neighbors(cls.members_[next])) {
      std::string key = alpha_key(n.term);
      if (cls.index_.contains(key)) continue;
      if (cls.members_.size() >= budget) {
        cls.exhausted_ = false;
        return cls;
      }
      add(n.term, std::move(key), next);
    }
  }
  return cls;
}

EquivClass equiv_class(const Term& r) {
  return equiv_class(r, default_class_budget());
}

std::vector<Reduct> reducts_of(const EquivClass& cls) {
  std::vector<Reduct> reducts;
  std::unordered_map<std::string, std::size_t> seen;
  const auto& members = cls.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto& red : head_reduce(members[i])) {
      std::string key = alpha_key(red.term);
      if (seen.contains(key)) continue;
      seen.emplace(std::move(key), reducts.size());
      reducts.push_back({std::move(red.term), red.rule, i});
    }
  }
  return reducts;
}

StepResult reduce_step(const Term& r, std::size_t budget) {
  StepResult result{equiv_class(r, budget), {}};
  result.reducts = reducts_of(result.cls);
  return result;
}

StepResult reduce_step(const Term& r) {
  return reduce_step(r, default_class_budget());
}

Tri term_equiv(const Term& r, const Term& s, std::size_t budget) {
  EquivClass cls = equiv_class(r, budget);
  if (cls.contains(s)) return Tri::True;
  return cls.exhausted() ? Tri::False : Tri::Unknown;
}

Tri term_equiv(const Term& r, const Term& s) {
  return term_equiv(r, s, default_class_budget());
}

}  // namespace psi
