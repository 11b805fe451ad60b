#include "dvb/expr.hpp"

#include <algorithm>
#include <sstream>

namespace dvb {

Expr::Expr(double c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConstant;
  n->constant = c;
  node_ = std::move(n);
}

Expr Expr::variable(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVariable;
  n->index = index;
  return Expr(NodePtr(std::move(n)));
}

Expr Expr::unary(Kind k, const Expr& a, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->exponent = exponent;
  n->lhs = a.node_;
  return Expr(NodePtr(std::move(n)));
}

Expr Expr::binary(Kind k, const Expr& a, const Expr& b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(NodePtr(std::move(n)));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kAdd, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kSub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kMul, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Expr::Kind::kNeg, a); }
Expr sin(const Expr& a) { return Expr::unary(Expr::Kind::kSin, a); }
Expr cos(const Expr& a) { return Expr::unary(Expr::Kind::kCos, a); }
Expr exp(const Expr& a) { return Expr::unary(Expr::Kind::kExp, a); }

Expr pow(const Expr& a, int exponent) {
  require(exponent >= 0, "pow: exponent must be non-negative");
  return Expr::unary(Expr::Kind::kPow, a, exponent);
}

namespace {

template <class Node>
std::size_t arity_of(const Node& n) {
  std::size_t a = 0;
  if (n.kind == Expr::Kind::kVariable) a = n.index + 1;
  if (n.lhs) a = std::max(a, arity_of(*n.lhs));
  if (n.rhs) a = std::max(a, arity_of(*n.rhs));
  return a;
}

template <class Node>
void print(const Node& n, std::ostream& os) {
  switch (n.kind) {
    case Expr::Kind::kConstant:
      os << n.constant;
      return;
    case Expr::Kind::kVariable:
      os << 'y' << n.index;
      return;
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kMul: {
      const char op = n.kind == Expr::Kind::kAdd ? '+' : n.kind == Expr::Kind::kSub ? '-' : '*';
      os << '(';
      print(*n.lhs, os);
      os << ' ' << op << ' ';
      print(*n.rhs, os);
      os << ')';
      return;
    }
    case Expr::Kind::kNeg:
      os << "-";
      print(*n.lhs, os);
      return;
    case Expr::Kind::kPow:
      print(*n.lhs, os);
      os << '^' << n.exponent;
      return;
    case Expr::Kind::kSin:
    case Expr::Kind::kCos:
    case Expr::Kind::kExp:
      os << (n.kind == Expr::Kind::kSin ? "sin(" : n.kind == Expr::Kind::kCos ? "cos(" : "exp(");
      print(*n.lhs, os);
      os << ')';
      return;
  }
}

}  // namespace

std::size_t Expr::arity() const { return arity_of(*node_); }

Expr Expr::substitute(std::span<const Expr> replacements) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kConstant:
      return *this;
    case Kind::kVariable:
      require(n.index < replacements.size(), "substitute: missing replacement for coordinate");
      return replacements[n.index];
    case Kind::kAdd:
    case Kind::kSub:
    case Kind::kMul:
      return binary(n.kind, Expr(n.lhs).substitute(replacements), Expr(n.rhs).substitute(replacements));
    case Kind::kNeg:
    case Kind::kPow:
    case Kind::kSin:
    case Kind::kCos:
    case Kind::kExp:
      return unary(n.kind, Expr(n.lhs).substitute(replacements), n.exponent);
  }
  return *this;
}

std::string Expr::to_string() const {
  std::ostringstream os;
  os.precision(17);
  print(*node_, os);
  return os.str();
}

}  // namespace dvb
