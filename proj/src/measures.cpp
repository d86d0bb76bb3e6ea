#include "psi/measures.hpp"

#include <stdexcept>

#include "psi/alpha.hpp"

namespace psi {

std::uint64_t measure_P(const Term& r) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return 0;
    case Term::Kind::Pair:
      return 1 + measure_P(r.left()) + measure_P(r.right());
    default:
      return measure_P(r.first());
  }
}

MeasurePair measures(const Term& r) {
  switch (r.kind()) {
    case Term::Kind::Var:
      return {1, 0};
    case Term::Kind::App: {
      MeasurePair f = measures(r.fun());
      MeasurePair a = measures(r.arg());
      return {f.m + a.m + f.p * a.m, f.p};
    }
    case Term::Kind::Pair: {
      MeasurePair a = measures(r.left());
      MeasurePair b = measures(r.right());
      return {a.m + b.m, 1 + a.p + b.p};
    }
    case Term::Kind::Lam:
    case Term::Kind::Proj:
    case Term::Kind::TLam:
    case Term::Kind::TApp: {
      MeasurePair b = measures(r.first());
      return {1 + b.m + b.p, b.p};
    }
  }
  throw std::logic_error("measures: unknown term kind");
}

std::uint64_t measure_M(const Term& r) { return measures(r).m; }

std::optional<std::size_t> longest_reduction(const Term& r,
                                             std::size_t class_budget,
                                             std::size_t graph_budget) {
  ReductionGraph graph(r, class_budget, graph_budget);
  if (!graph.complete()) return std::nullopt;
  return graph.longest_path();
}

std::optional<std::size_t> longest_reduction(const Term& r) {
  return longest_reduction(r, default_class_budget());
}

std::string to_string(PairShape shape) {
  switch (shape) {
    case PairShape::Pair: return "pair";
    case PairShape::Lam: return "lam";
    case PairShape::App: return "app";
    case PairShape::TLam: return "tlam";
    case PairShape::TApp: return "tapp";
    case PairShape::Unknown: return "unknown";
    case PairShape::Violation: return "violation";
  }
  return "?";
}

PairClassifier::PairClassifier(const Term& r, const Term& s,
                               std::size_t budget)
    : r_(r), s_(s), budget_(budget) {}

const EquivClass& PairClassifier::class_of(const Term& t) {
  std::string key = alpha_key(t);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    EquivClass cls = equiv_class(t, budget_);
    if (!cls.exhausted()) incomplete_ = true;
    it = cache_.emplace(std::move(key), std::move(cls)).first;
  }
  return it->second;
}

// v ~ <w, s> (either order) with r ~ <u, w>.
bool PairClassifier::pair_case_b(const Term& u, const Term& v,
                                 const EquivClass& r, const Term& s) {
  const EquivClass& vs = class_of(v);
  const EquivClass& ss = class_of(s);
  for (const Term& m : vs.members()) {
    if (!m.is_pair()) continue;
    if (ss.contains(m.right()) && r.contains(Term::pair(u, m.left())))
      return true;
    if (ss.contains(m.left()) && r.contains(Term::pair(u, m.right())))
      return true;
  }
  return false;
}

PairClassification PairClassifier::classify_pair(const Term& u,
                                                 const Term& v) {
  const EquivClass& rs = class_of(r_);
  const EquivClass& ss = class_of(s_);
  if ((rs.contains(u) && ss.contains(v)) || (rs.contains(v) && ss.contains(u)))
    return {PairShape::Pair, 'c'};

  if (pair_case_b(u, v, rs, s_) || pair_case_b(v, u, rs, s_) ||
      pair_case_b(u, v, ss, r_) || pair_case_b(v, u, ss, r_))
    return {PairShape::Pair, 'b'};

  // u ~ <t11, t21>, v ~ <t12, t22>, r ~ <t11, t12>, s ~ <t21, t22>
  const EquivClass& us = class_of(u);
  const EquivClass& vs = class_of(v);
  for (const Term& mu : us.members()) {
    if (!mu.is_pair()) continue;
    for (const Term& mv : vs.members()) {
      if (!mv.is_pair()) continue;
      if (rs.contains(Term::pair(mu.left(), mv.left())) &&
          ss.contains(Term::pair(mu.right(), mv.right())))
        return {PairShape::Pair, 'a'};
    }
  }
  return {incomplete_ ? PairShape::Unknown : PairShape::Violation};
}

PairClassification PairClassifier::classify(const Term& t) {
  if (t.is_pair()) return classify_pair(t.left(), t.right());

  const EquivClass& rs = class_of(r_);
  const EquivClass& ss = class_of(s_);
  // Rebuilds t around each component of a pair equivalent to its body.
  auto around = [&](const Term& inner, PairShape shape, auto&& wrap)
      -> PairClassification {
    for (const Term& m : class_of(inner).members()) {
      if (!m.is_pair()) continue;
      if (rs.contains(wrap(m.left())) && ss.contains(wrap(m.right())))
        return {shape};
    }
    return {incomplete_ ? PairShape::Unknown : PairShape::Violation};
  };
  switch (t.kind()) {
    case Term::Kind::Lam:
      return around(t.body(), PairShape::Lam, [&](const Term& a) {
        return Term::lam(t.name(), t.type(), a);
      });
    case Term::Kind::App:
      return around(t.fun(), PairShape::App,
                    [&](const Term& a) { return Term::app(a, t.arg()); });
    case Term::Kind::TLam:
      return around(t.body(), PairShape::TLam,
                    [&](const Term& a) { return Term::tlam(t.name(), a); });
    case Term::Kind::TApp:
      return around(t.fun(), PairShape::TApp,
                    [&](const Term& a) { return Term::tapp(a, t.type()); });
    default:
      return {PairShape::Violation};
  }
}

PairClassification pair_shape_classify(const Term& t, const Term& r,
                                       const Term& s, std::size_t budget) {
  PairClassifier classifier(r, s, budget);
  return classifier.classify(t);
}

}  // namespace psi
