#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace iplogic {

// Immutable propositional formula over named atoms.
//
// Connectives, tightest-binding first as the concrete syntax parses them:
//   ~    negation          (prefix)
//   &    conjunction       (right associative)
//   v    disjunction       (right associative)
//   <->  equivalence       (non associative)
//   <-   reverse implication (left associative; head on the left)
//   ->   implication       (right associative)
//
// Atom names match [a-z][a-zA-Z0-9_]*.  "true" and "false" denote the
// constants and are not atoms; the name "v" is taken by disjunction and is
// rejected as an atom.  Copies share structure and are cheap.
class Formula {
public:
  enum class Kind : std::uint8_t {
    Top,     // true
    Bottom,  // false
    Atom,
    Not,
    And,
    Or,
    Iff,
    Imp,     // a -> b
    RevImp,  // head <- body
  };

  static Formula top();
  static Formula bottom();
  // Throws std::invalid_argument unless the name is a valid, non-reserved atom.
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula rev_implication(Formula head, Formula body);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  // Valid for Atom only.
  const std::string& name() const { return node_->name; }
  // Valid for Not only.  Children are returned as (cheap) handles sharing
  // structure with the parent.
  Formula child() const { return Formula{node_->lhs}; }
  // Valid for binary nodes.  For RevImp, left() is the head and right() the
  // body, mirroring the concrete syntax "head <- body".
  Formula left() const { return Formula{node_->lhs}; }
  Formula right() const { return Formula{node_->rhs}; }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

  // Canonical total order: constants, then atoms by name, then compound
  // formulas by connective (~ & v <-> -> <-) and lexicographically by
  // children.  Used wherever candidate sets are sorted or deduplicated.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

private:
  struct Node {
    Kind kind;
    std::string name;                          // Atom only
    std::shared_ptr<const Node> lhs, rhs;      // Not uses lhs only
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// True iff name is lexically a valid atom: [a-z][a-zA-Z0-9_]* and none of
// the reserved words ("true", "false", "v").
bool is_valid_atom_name(std::string_view name);

// Sorted, duplicate-free list of atom names.
using AtomSet = std::vector<std::string>;

// Atoms occurring in f, sorted ascending; constants contribute nothing.
AtomSet atoms_of(const Formula& f);

// Renders f with minimal parentheses; parse(to_string(f)) == f.
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace iplogic
