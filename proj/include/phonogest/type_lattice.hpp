#pragma once

#include "phonogest/errors.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace phonogest {

/// A set of atoms of a TypeLattice, the denotation of a type.
struct TypeSet {
  std::uint64_t bits = 0;

  bool empty() const { return bits == 0; }
  int count() const { return std::popcount(bits); }
  bool contains(int atom) const { return (bits >> atom) & 1u; }
  bool subset_of(TypeSet other) const { return (bits & ~other.bits) == 0; }
  friend bool operator==(TypeSet, TypeSet) = default;
  friend TypeSet operator&(TypeSet a, TypeSet b) { return {a.bits & b.bits}; }
  friend TypeSet operator|(TypeSet a, TypeSet b) { return {a.bits | b.bits}; }
};

/// Finite type hierarchy. Every named type denotes a non-empty set of atoms;
/// meet is set intersection and complement is taken relative to all atoms.
class TypeLattice {
 public:
  static constexpr int kMaxAtoms = 64;

  int add_atom(const std::string& name) {
    if (names_.count(name)) throw ConfigError("duplicate type name '" + name + "'");
    if (static_cast<int>(atoms_.size()) == kMaxAtoms) throw ConfigError("too many atoms in type lattice");
    int id = static_cast<int>(atoms_.size());
    atoms_.push_back(name);
    TypeSet t{std::uint64_t{1} << id};
    names_[name] = t;
    order_.push_back(name);
    return id;
  }

  /// Registers `name` as the join of `members` (atoms or previously named types).
  void define(const std::string& name, const std::vector<std::string>& members) {
    if (names_.count(name) || name == "bottom" || name == "top")
      throw ConfigError("duplicate type name '" + name + "'");
    if (members.empty()) throw ConfigError("type '" + name + "' has no subtypes");
    TypeSet t;
    for (const auto& m : members) t = t | denotation(m);
    names_[name] = t;
    order_.push_back(name);
  }

  bool has(const std::string& name) const { return name == "top" || name == "bottom" || names_.count(name) > 0; }

  TypeSet denotation(const std::string& name) const {
    if (name == "top") return top();
    if (name == "bottom") return {};
    auto it = names_.find(name);
    if (it == names_.end()) throw ConfigError("unknown type '" + name + "'");
    return it->second;
  }

  TypeSet top() const {
    if (atoms_.size() == 64) return {~std::uint64_t{0}};
    return {(std::uint64_t{1} << atoms_.size()) - 1};
  }

  TypeSet meet(TypeSet a, TypeSet b) const { return a & b; }
  TypeSet join(TypeSet a, TypeSet b) const { return a | b; }
  TypeSet complement(TypeSet a) const { return {top().bits & ~a.bits}; }

  /// Named meet; when the result coincides with an argument that name is kept.
  std::string meet(const std::string& a, const std::string& b) const {
    TypeSet t = meet(denotation(a), denotation(b));
    if (!t.empty() && t == denotation(a)) return a;
    if (!t.empty() && t == denotation(b)) return b;
    return name_of(t);
  }

  /// True iff every atom of `b` is an atom of `a`.
  bool subsumes(const std::string& a, const std::string& b) const {
    return denotation(b).subset_of(denotation(a));
  }

  /// Registered name with exactly this denotation (earliest registered wins),
  /// else a brace list of its atoms.
  std::string name_of(TypeSet t) const {
    if (t.empty()) return "bottom";
    for (const auto& n : order_)
      if (names_.at(n) == t) return n;
    if (t == top()) return "top";
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < atom_count(); ++i) {
      if (!t.contains(i)) continue;
      if (!first) out += "|";
      out += atoms_[i];
      first = false;
    }
    return out + "}";
  }

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  /// Named types in registration order, atoms included.
  const std::vector<std::string>& type_names() const { return order_; }

  int atom_index(const std::string& name) const {
    for (int i = 0; i < atom_count(); ++i)
      if (atoms_[i] == name) return i;
    throw ConfigError("'" + name + "' is not an atom");
  }

 private:
  std::vector<std::string> atoms_;
  std::map<std::string, TypeSet> names_;
  std::vector<std::string> order_;
};

}  // namespace phonogest
