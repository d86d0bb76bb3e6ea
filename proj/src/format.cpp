#include "psi/format.hpp"

#include <map>
#include <set>

namespace psi {

namespace {

void collect_names(const Type& a, std::set<std::string>& out) {
  out.insert(a.name());
  switch (a.kind()) {
    case Type::Kind::Var:
      return;
    case Type::Kind::Arrow:
    case Type::Kind::Conj:
      collect_names(a.left(), out);
      collect_names(a.right(), out);
      return;
    case Type::Kind::Forall:
      collect_names(a.body(), out);
      return;
  }
}

void collect_names(const Term& r, std::set<std::string>& out) {
  out.insert(r.name());
  switch (r.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Lam:
      collect_names(r.type(), out);
      if (r.is_lam()) collect_names(r.body(), out);
      return;
    case Term::Kind::App:
    case Term::Kind::Pair:
      collect_names(r.first(), out);
      collect_names(r.second(), out);
      return;
    case Term::Kind::Proj:
    case Term::Kind::TApp:
      collect_names(r.type(), out);
      collect_names(r.first(), out);
      return;
    case Term::Kind::TLam:
      collect_names(r.body(), out);
      return;
  }
}

// Maps machine-generated names to short names unused elsewhere in the text.
class DisplayNames {
 public:
  explicit DisplayNames(std::set<std::string> names) {
    names.erase("");
    used_ = names;
    for (const auto& name : names) {
      if (!is_fresh_name(name)) continue;
      std::string base = base_name(name);
      if (base.empty()) base = "v";
      for (int n = 1;; ++n) {
        std::string candidate = base + std::to_string(n);
        if (!used_.contains(candidate)) {
          used_.insert(candidate);
          shown_[name] = candidate;
          break;
        }
      }
    }
  }

  const std::string& operator()(const std::string& name) const {
    auto it = shown_.find(name);
    return it == shown_.end() ? name : it->second;
  }

 private:
  std::set<std::string> used_;
  std::map<std::string, std::string> shown_;
};

enum class Slot { Top, ArrowLeft, ArrowRight, ConjLeft, ConjRight };

class Printer {
 public:
  explicit Printer(const DisplayNames& names) : names_(names) {}

  // `tail`: nothing follows this text inside the enclosing group, so a
  // binder's body may extend to the right without parentheses.
  void type(const Type& a, Slot slot, bool tail) {
    switch (a.kind()) {
      case Type::Kind::Var:
        out += names_(a.name());
        return;
      case Type::Kind::Forall:
        if (!tail) return parens([&] { type(a, Slot::Top, true); });
        out += "forall " + names_(a.name()) + ". ";
        type(a.body(), Slot::Top, true);
        return;
      case Type::Kind::Arrow:
        if (slot == Slot::ArrowLeft || slot == Slot::ConjLeft ||
            slot == Slot::ConjRight)
          return parens([&] { type(a, Slot::Top, true); });
        type(a.left(), Slot::ArrowLeft, false);
        out += " -> ";
        type(a.right(), Slot::ArrowRight, tail);
        return;
      case Type::Kind::Conj:
        if (slot == Slot::ConjLeft)
          return parens([&] { type(a, Slot::Top, true); });
        type(a.left(), Slot::ConjLeft, false);
        out += " /\\ ";
        type(a.right(), Slot::ConjRight, tail);
        return;
    }
  }

  enum class Pos { Top, Fun, Arg };

  void term(const Term& r, Pos pos, bool tail) {
    switch (r.kind()) {
      case Term::Kind::Var:
        out += names_(r.name());
        return;
      case Term::Kind::Lam:
      case Term::Kind::TLam:
        if (pos == Pos::Fun || !tail)
          return parens([&] { term(r, Pos::Top, true); });
        if (r.is_lam()) {
          out += "lam " + names_(r.name()) + " : ";
          type(r.type(), Slot::Top, true);
          out += " . ";
        } else {
          out += "tlam " + names_(r.name()) + " . ";
        }
        term(r.body(), Pos::Top, true);
        return;
      case Term::Kind::App:
      case Term::Kind::TApp:
        if (pos == Pos::Arg) return parens([&] { term(r, Pos::Top, true); });
        term(r.fun(), Pos::Fun, false);
        if (r.is_app()) {
          out += ' ';
          term(r.arg(), Pos::Arg, tail);
        } else {
          out += " [";
          type(r.type(), Slot::Top, true);
          out += ']';
        }
        return;
      case Term::Kind::Pair:
        out += '<';
        term(r.left(), Pos::Top, true);
        out += ", ";
        term(r.right(), Pos::Top, true);
        out += '>';
        return;
      case Term::Kind::Proj:
        out += "pi [";
        type(r.type(), Slot::Top, true);
        out += "] ";
        term(r.body(), Pos::Arg, false);
        return;
    }
  }

  std::string out;

 private:
  template <typename F>
  void parens(F&& f) {
    out += '(';
    f();
    out += ')';
  }

  const DisplayNames& names_;
};

}  // namespace

std::string format(const Type& a) {
  std::set<std::string> names;
  collect_names(a, names);
  DisplayNames shown(std::move(names));
  Printer p(shown);
  p.type(a, Slot::Top, true);
  return p.out;
}

std::string format(const Term& r) {
  std::set<std::string> names;
  collect_names(r, names);
  DisplayNames shown(std::move(names));
  Printer p(shown);
  p.term(r, Printer::Pos::Top, true);
  return p.out;
}

std::string format_standalone(const Term& r) {
  std::set<std::string> names;
  collect_names(r, names);
  DisplayNames shown(std::move(names));
  Printer p(shown);
  p.term(r, Printer::Pos::Top, true);
  auto fv = free_vars(r);
  const char* sep = " where ";
  for (const auto& [name, ann] : fv) {
    p.out += sep;
    p.out += shown(name) + " : ";
    p.type(ann, Slot::Top, true);
    sep = ", ";
  }
  return p.out;
}

std::string format(const Context& ctx) {
  std::string out;
  for (const auto& [name, type] : ctx) {
    if (!out.empty()) out += ", ";
    out += name + " : " + format(type);
  }
  return out;
}

}  // namespace psi
