#include "cnz/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "cnz/error.hpp"

namespace cnz {

void ExprDag::set_root(std::uint32_t id) {
  if (id >= nodes_.size()) throw Error(ErrorCode::kInvalidArgument, "root id out of range");
  root_ = id;
}

std::uint32_t ExprDag::intern(ExprNode node) {
  Key key{node.kind, node.lhs, node.rhs, node.payload, node.constant};
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  index_.emplace(std::move(key), id);
  return id;
}

std::uint32_t ExprDag::var(std::size_t index) {
  if (index >= arity_) throw Error(ErrorCode::kUnknownVariable, "variable index out of range");
  return intern({NodeKind::kVar, 0, 0, index, 0});
}

std::uint32_t ExprDag::constant(const Int& value) {
  return intern({NodeKind::kConst, 0, 0, 0, ring_.canonical(value)});
}

std::uint32_t ExprDag::add(std::uint32_t a, std::uint32_t b) { return intern({NodeKind::kAdd, a, b}); }
std::uint32_t ExprDag::sub(std::uint32_t a, std::uint32_t b) { return intern({NodeKind::kSub, a, b}); }
std::uint32_t ExprDag::mul(std::uint32_t a, std::uint32_t b) { return intern({NodeKind::kMul, a, b}); }
std::uint32_t ExprDag::neg(std::uint32_t a) { return intern({NodeKind::kNeg, a, 0}); }

std::uint32_t ExprDag::pow(std::uint32_t a, std::uint64_t exponent) {
  return intern({NodeKind::kPow, a, 0, exponent});
}

std::uint32_t ExprDag::import(const ExprDag& other) {
  if (!(other.ring_ == ring_) || other.arity_ != arity_) {
    throw Error(ErrorCode::kRingMismatch, "importing a DAG over a different ring or arity");
  }
  std::vector<std::uint32_t> remap(other.nodes_.size());
  for (std::size_t i = 0; i < other.nodes_.size(); ++i) {
    ExprNode node = other.nodes_[i];
    node.lhs = remap[node.lhs];
    node.rhs = remap[node.rhs];
    remap[i] = intern(std::move(node));
  }
  return other.nodes_.empty() ? constant(0) : remap[other.root_];
}

ExprDag ExprDag::difference(const ExprDag& a, const ExprDag& b) {
  ExprDag out(a.ring_, a.arity_);
  auto ra = out.import(a);
  auto rb = out.import(b);
  out.set_root(out.sub(ra, rb));
  return out;
}

namespace {

enum class Tok { kIdent, kInt, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::kIdent, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::kInt, std::string(text.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        throw SyntaxError(ErrorCode::kSyntax, std::string("unexpected character '") + c + "'",
                          start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

// x<k> with k >= 1 and no leading zero.
std::optional<std::size_t> indexed_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0' || name.size() > 10) return std::nullopt;
  std::size_t k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    k = k * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return k;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, RingSpec ring)
      : tokens_(tokenize(text)), vars_(vars), dag_(ring, vars.size()) {}

  ExprDag run() {
    auto root = expr();
    if (peek().kind != Tok::kEnd) fail_unexpected();
    dag_.set_root(root);
    return std::move(dag_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail_unexpected() const {
    const auto& t = peek();
    if (t.kind == Tok::kEnd) throw SyntaxError(ErrorCode::kSyntax, "unexpected end of input", t.pos);
    throw SyntaxError(ErrorCode::kSyntax, "unexpected '" + t.text + "'", t.pos);
  }

  std::uint32_t expr() {
    auto lhs = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      bool plus = next().kind == Tok::kPlus;
      auto rhs = term();
      lhs = plus ? dag_.add(lhs, rhs) : dag_.sub(lhs, rhs);
    }
    return lhs;
  }

  std::uint32_t term() {
    std::size_t negations = 0;
    while (peek().kind == Tok::kMinus) {
      next();
      ++negations;
    }
    auto product = factor();
    while (true) {
      auto kind = peek().kind;
      if (kind == Tok::kStar) {
        next();
        product = dag_.mul(product, factor());
      } else if (kind == Tok::kIdent || kind == Tok::kInt || kind == Tok::kLParen) {
        throw SyntaxError(ErrorCode::kSyntax, "implicit multiplication is not allowed", peek().pos);
      } else {
        break;
      }
    }
    return negations % 2 ? dag_.neg(product) : product;
  }

  std::uint32_t factor() {
    auto base = atom();
    if (peek().kind != Tok::kCaret) return base;
    next();
    const auto& tok = peek();
    if (tok.kind != Tok::kInt) {
      throw SyntaxError(ErrorCode::kSyntax, "exponent must be a nonnegative integer", tok.pos);
    }
    next();
    if (tok.text.size() > 7 || std::stoull(tok.text) > kMaxExponent) {
      throw SyntaxError(ErrorCode::kExponentOverflow,
                        "exponent " + tok.text + " exceeds " + std::to_string(kMaxExponent),
                        tok.pos);
    }
    if (peek().kind == Tok::kCaret) {
      throw SyntaxError(ErrorCode::kSyntax, "chained '^' needs parentheses", peek().pos);
    }
    return dag_.pow(base, std::stoull(tok.text));
  }

  std::uint32_t atom() {
    const auto& tok = peek();
    switch (tok.kind) {
      case Tok::kIdent: {
        next();
        return dag_.var(lookup(tok));
      }
      case Tok::kInt: {
        next();
        return dag_.constant(Int(tok.text));
      }
      case Tok::kLParen: {
        next();
        auto inner = expr();
        if (peek().kind != Tok::kRParen) {
          throw SyntaxError(ErrorCode::kSyntax, "expected ')'", peek().pos);
        }
        next();
        return inner;
      }
      default:
        fail_unexpected();
    }
  }

  std::size_t lookup(const Token& tok) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == tok.text) return i;
    }
    if (auto k = indexed_name(tok.text); k && *k <= vars_.size()) return *k - 1;
    throw SyntaxError(ErrorCode::kUnknownVariable, "unknown variable '" + tok.text + "'", tok.pos);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
  ExprDag dag_;
};

}  // namespace

ExprDag parse_dag(std::string_view text, const std::vector<std::string>& vars, RingSpec ring) {
  return Parser(text, vars, ring).run();
}

Polynomial expand(const ExprDag& dag) {
  const auto& ring = dag.ring();
  std::size_t n = dag.arity();
  std::vector<Polynomial> value;
  value.reserve(dag.nodes().size());
  for (const auto& node : dag.nodes()) {
    switch (node.kind) {
      case NodeKind::kVar:
        value.push_back(Polynomial::variable(ring, n, node.payload));
        break;
      case NodeKind::kConst:
        value.push_back(Polynomial::constant(ring, n, node.constant));
        break;
      case NodeKind::kAdd: value.push_back(value[node.lhs] + value[node.rhs]); break;
      case NodeKind::kSub: value.push_back(value[node.lhs] - value[node.rhs]); break;
      case NodeKind::kMul: value.push_back(value[node.lhs] * value[node.rhs]); break;
      case NodeKind::kNeg: value.push_back(-value[node.lhs]); break;
      case NodeKind::kPow: value.push_back(value[node.lhs].pow(node.payload)); break;
    }
  }
  if (value.empty()) return Polynomial(ring, n);
  return value[dag.root()];
}

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars, RingSpec ring) {
  return expand(parse_dag(text, vars, ring));
}

std::vector<std::string> infer_variables(std::string_view text) {
  std::vector<std::string> seen;
  bool all_indexed = true;
  std::size_t max_index = 0;
  for (const auto& tok : tokenize(text)) {
    if (tok.kind != Tok::kIdent) continue;
    if (auto k = indexed_name(tok.text)) {
      max_index = std::max(max_index, *k);
    } else {
      all_indexed = false;
    }
    if (std::find(seen.begin(), seen.end(), tok.text) == seen.end()) seen.push_back(tok.text);
  }
  if (all_indexed) return default_variable_names(max_index);
  return seen;
}

}  // namespace cnz
