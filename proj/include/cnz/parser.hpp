#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cnz/poly.hpp"
#include "cnz/ring.hpp"

namespace cnz {

enum class NodeKind : std::uint8_t { kVar, kConst, kAdd, kSub, kMul, kNeg, kPow };

struct ExprNode {
  NodeKind kind;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
  /// Variable index for kVar, exponent for kPow.
  std::uint64_t payload = 0;
  /// Canonical value for kConst.
  Int constant = 0;
};

/// Unexpanded arithmetic expression. Nodes are stored children-first, so
/// node order is a topological order. Structurally equal subexpressions are
/// shared (hash-consed).
class ExprDag {
 public:
  ExprDag(RingSpec ring, std::size_t arity) : ring_(ring), arity_(arity) {}

  const RingSpec& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  const std::vector<ExprNode>& nodes() const { return nodes_; }
  std::uint32_t root() const { return root_; }
  void set_root(std::uint32_t id);

  std::uint32_t var(std::size_t index);
  std::uint32_t constant(const Int& value);
  std::uint32_t add(std::uint32_t a, std::uint32_t b);
  std::uint32_t sub(std::uint32_t a, std::uint32_t b);
  std::uint32_t mul(std::uint32_t a, std::uint32_t b);
  std::uint32_t neg(std::uint32_t a);
  std::uint32_t pow(std::uint32_t a, std::uint64_t exponent);

  /// Copies the nodes of `other` into this DAG and returns the id of its root.
  std::uint32_t import(const ExprDag& other);

  /// DAG for a - b (no simplification).
  static ExprDag difference(const ExprDag& a, const ExprDag& b);

 private:
  using Key = std::tuple<NodeKind, std::uint32_t, std::uint32_t, std::uint64_t, Int>;

  std::uint32_t intern(ExprNode node);

  RingSpec ring_;
  std::size_t arity_;
  std::vector<ExprNode> nodes_;
  std::map<Key, std::uint32_t> index_;
  std::uint32_t root_ = 0;
};

inline constexpr std::uint64_t kMaxExponent = 1'000'000;

/// Grammar:
///   expr   := term (("+" | "-") term)*
///   term   := ("-")* factor ("*" factor)*
///   factor := atom ("^" uint)?
///   atom   := ident | int | "(" expr ")"
/// Identifiers are the declared names, or x1..xN for N = vars.size().
ExprDag parse_dag(std::string_view text, const std::vector<std::string>& vars, RingSpec ring);

/// Parses and expands into sparse form.
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars, RingSpec ring);

/// Expands a DAG into a polynomial.
Polynomial expand(const ExprDag& dag);

/// Variable names for texts without a declaration: x1..xK when every
/// identifier has that form (K the largest index seen), otherwise the
/// distinct identifiers in order of first appearance.
std::vector<std::string> infer_variables(std::string_view text);

}  // namespace cnz
