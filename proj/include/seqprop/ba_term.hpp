// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace seqprop {

enum class BAKind : std::uint8_t { True, False, Atom, Var, Not, And, Or };

/// Immutable Boolean-algebra term over the same atom and variable names as Term.
class BATerm {
 public:
  static BATerm t();
  static BATerm f();
  static BATerm atom(std::string name);
  static BATerm var(std::string name);
  static BATerm neg(BATerm x);
  static BATerm conj(BATerm x, BATerm y);
  static BATerm disj(BATerm x, BATerm y);

  BAKind kind() const;
  const std::string& name() const;
  /// Operand of Not, or left operand of And/Or.
  const BATerm& lhs() const;
  const BATerm& rhs() const;
  std::size_t size() const;

 private:
  struct Node;
  BATerm() = default;
  explicit BATerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static BATerm make(BAKind kind, std::string name, const BATerm* a, const BATerm* b);

  std::shared_ptr<const Node> node_;
};

struct BATerm::Node {
  BAKind kind;
  std::string name;
  BATerm kids[2];
  std::size_t size;
};

inline BAKind BATerm::kind() const { return node_->kind; }
inline const std::string& BATerm::name() const { return node_->name; }
inline const BATerm& BATerm::lhs() const { return node_->kids[0]; }
inline const BATerm& BATerm::rhs() const { return node_->kids[1]; }
inline std::size_t BATerm::size() const { return node_->size; }

bool operator==(const BATerm& s, const BATerm& t);
inline bool operator!=(const BATerm& s, const BATerm& t) { return !(s == t); }

}  // namespace seqprop
