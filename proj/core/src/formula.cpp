#include "iplogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace iplogic {

namespace {

int kind_rank(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Top: return 0;
    case Formula::Kind::Bottom: return 1;
    case Formula::Kind::Atom: return 2;
    case Formula::Kind::Not: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Or: return 5;
    case Formula::Kind::Iff: return 6;
    case Formula::Kind::Imp: return 7;
    case Formula::Kind::RevImp: return 8;
  }
  return 9;  // unreachable
}

}  // namespace

Formula Formula::top() {
  static const Formula f{std::make_shared<const Node>(Node{Kind::Top, "", nullptr, nullptr})};
  return f;
}

Formula Formula::bottom() {
  static const Formula f{std::make_shared<const Node>(Node{Kind::Bottom, "", nullptr, nullptr})};
  return f;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return Formula{std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr})};
}

Formula Formula::negation(Formula f) {
  return Formula{std::make_shared<const Node>(Node{Kind::Not, "", std::move(f.node_), nullptr})};
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula{std::make_shared<const Node>(Node{Kind::And, "", std::move(lhs.node_), std::move(rhs.node_)})};
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula{std::make_shared<const Node>(Node{Kind::Or, "", std::move(lhs.node_), std::move(rhs.node_)})};
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula{std::make_shared<const Node>(Node{Kind::Iff, "", std::move(lhs.node_), std::move(rhs.node_)})};
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return Formula{std::make_shared<const Node>(Node{Kind::Imp, "", std::move(antecedent.node_), std::move(consequent.node_)})};
}

Formula Formula::rev_implication(Formula head, Formula body) {
  return Formula{std::make_shared<const Node>(Node{Kind::RevImp, "", std::move(head.node_), std::move(body.node_)})};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::Atom:
      return a.node_->name == b.node_->name;
    case Formula::Kind::Not:
      return a.child() == b.child();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = kind_rank(a.node_->kind) <=> kind_rank(b.node_->kind); c != 0) return c;
  switch (a.node_->kind) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return std::strong_ordering::equal;
    case Formula::Kind::Atom:
      return a.node_->name <=> b.node_->name;
    case Formula::Kind::Not:
      return a.child() <=> b.child();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(name.front()))) return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return name != "true" && name != "false" && name != "v";
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Atom:
      out.insert(f.name());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.child(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

// Operator priorities in the usual Prolog convention: lower binds tighter.
int priority(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Not: return 525;
    case Formula::Kind::And: return 550;
    case Formula::Kind::Or: return 575;
    case Formula::Kind::Iff: return 600;
    case Formula::Kind::RevImp: return 800;
    case Formula::Kind::Imp: return 1050;
    default: return 0;  // atoms and constants never need parentheses
  }
}

void write(const Formula& f, std::ostream& os, int max_priority) {
  const int p = priority(f.kind());
  const bool parens = p > max_priority;
  if (parens) os << '(';
  switch (f.kind()) {
    case Formula::Kind::Top: os << "true"; break;
    case Formula::Kind::Bottom: os << "false"; break;
    case Formula::Kind::Atom: os << f.name(); break;
    case Formula::Kind::Not:
      os << '~';
      write(f.child(), os, p);
      break;
    case Formula::Kind::And:
      write(f.left(), os, p - 1);
      os << " & ";
      write(f.right(), os, p);
      break;
    case Formula::Kind::Or:
      write(f.left(), os, p - 1);
      os << " v ";
      write(f.right(), os, p);
      break;
    case Formula::Kind::Iff:
      write(f.left(), os, p - 1);
      os << " <-> ";
      write(f.right(), os, p - 1);
      break;
    case Formula::Kind::Imp:
      write(f.left(), os, p - 1);
      os << "->";
      write(f.right(), os, p);
      break;
    case Formula::Kind::RevImp:
      write(f.left(), os, p);
      os << "<-";
      write(f.right(), os, p - 1);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

AtomSet atoms_of(const Formula& f) {
  std::set<std::string> atoms;
  collect_atoms(f, atoms);
  return AtomSet(atoms.begin(), atoms.end());
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  write(f, os, 1200);
  return os;
}

}  // namespace iplogic
