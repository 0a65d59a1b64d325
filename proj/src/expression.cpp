#include "nefcone/expression.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

#include "nefcone/error.hpp"

namespace nefcone {

namespace {

// Syntax tree. Atoms keep their source text and offset so resolution
// errors can point at them after the whole input has parsed.
struct Node {
  enum class Kind { Number, Atom, Sum, Product, Negate };
  Kind kind;
  std::size_t offset = 0;
  Rational number;
  std::string atom;
  std::vector<Label> labels;                            // theta[L]
  std::optional<std::pair<GenusMarking, GenusMarking>> pair;  // d{...}
  std::vector<std::unique_ptr<Node>> children;
  std::vector<bool> subtract;  // Sum: sign of each child after the first
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind kind, std::size_t offset) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->offset = offset;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expression();
    skip_space();
    if (pos_ < text_.size()) {
      fail("'+', '-', '*' or end of input");
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorCode::SyntaxError,
                "at offset " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("'") + c + "'");
    }
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    skip_space();
    if (!at_digit()) {
      fail("a digit");
    }
    const std::size_t start = pos_;
    while (at_digit()) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_integer() {
    const std::string d = digits();
    if (d.size() > 6) {
      fail("a small integer");
    }
    return std::stoi(d);
  }

  NodePtr expression() {
    skip_space();
    auto sum = make_node(Node::Kind::Sum, pos_);
    bool negative_first = false;
    if (accept('-')) {
      negative_first = true;
    } else {
      accept('+');
    }
    NodePtr first = product();
    if (negative_first) {
      auto neg = make_node(Node::Kind::Negate, first->offset);
      neg->children.push_back(std::move(first));
      first = std::move(neg);
    }
    sum->children.push_back(std::move(first));
    while (true) {
      if (accept('+')) {
        sum->subtract.push_back(false);
      } else if (accept('-')) {
        sum->subtract.push_back(true);
      } else {
        break;
      }
      sum->children.push_back(product());
    }
    return sum;
  }

  NodePtr product() {
    skip_space();
    auto prod = make_node(Node::Kind::Product, pos_);
    prod->children.push_back(factor());
    while (accept('*')) {
      prod->children.push_back(factor());
    }
    return prod;
  }

  NodePtr factor() {
    skip_space();
    if (accept('(')) {
      NodePtr inner = expression();
      expect(')');
      return inner;
    }
    if (at_digit()) {
      auto n = make_node(Node::Kind::Number, pos_);
      std::string literal = digits();
      if (accept('/')) {
        skip_space();
        const std::size_t den_at = pos_;
        const std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_at;
          fail("a positive denominator");
        }
        literal += "/" + den;
      }
      n->number = parse_rational(literal);
      return n;
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      return atom();
    }
    fail("a number, an atom or '('");
  }

  NodePtr atom() {
    auto n = make_node(Node::Kind::Atom, pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    n->atom = std::string(text_.substr(start, pos_ - start));
    if (n->atom == "theta" && pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      n->atom = "theta[]";
      if (!accept(']')) {
        do {
          n->labels.push_back(small_integer());
        } while (accept(','));
        expect(']');
      }
    } else if (n->atom == "d" && pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      n->atom = "d{}";
      GenusMarking first = marking();
      expect(',');
      GenusMarking second = marking();
      expect('}');
      n->pair.emplace(std::move(first), std::move(second));
    }
    return n;
  }

  // (i,[a,b,...])
  GenusMarking marking() {
    expect('(');
    GenusMarking m;
    m.genus = small_integer();
    expect(',');
    expect('[');
    if (!accept(']')) {
      do {
        m.labels.push_back(small_integer());
      } while (accept(','));
      expect(']');
    }
    expect(')');
    return m;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// A scalar, or a class scaled by nothing further. Products of two classes
// are not linear and are rejected.
struct Value {
  Rational scalar = 1;
  std::optional<DivisorClass> cls;
};

[[noreturn]] void unknown(const Node& n, const Signature& sig, const std::string& why = "") {
  throw Error(ErrorCode::UnknownAtom, "at offset " + std::to_string(n.offset) + ": '" + n.atom +
                                          "' is not a class on " + sig.to_string() +
                                          (why.empty() ? "" : " (" + why + ")"));
}

std::optional<int> numbered(const std::string& name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
    return std::nullopt;
  }
  const std::string rest = name.substr(prefix.size());
  if (rest.size() > 6 || (rest.size() > 1 && rest[0] == '0')) {
    return std::nullopt;
  }
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return std::nullopt;
    }
  }
  return std::stoi(rest);
}

DivisorClass boundary_shorthand(const Node& n, const Signature& sig, char kind, int i) {
  const int g = sig.genus();
  const std::size_t markings = sig.marking_count();
  if (kind == 's') {
    if (markings != 2 || i < 1 || i > g - 1) {
      unknown(n, sig);
    }
    return delta_class(sig, sigma_index(sig, i));
  }
  const int upper = markings == 0 || markings == 1 ? g - 1 : g;
  if (i < 1 || i > upper) {
    unknown(n, sig);
  }
  return delta_class(sig, delta_index(sig, i));
}

DivisorClass resolve_atom(const Node& n, const Signature& sig) {
  try {
    if (n.atom == "lambda") {
      return lambda_class(sig);
    }
    if (n.atom == "dirr") {
      return delta_irr_class(sig);
    }
    if (n.atom == "theta[]") {
      return theta(sig, n.labels);
    }
    if (n.atom == "d{}") {
      return delta_class(sig, canonical_pair(n.pair->first, n.pair->second, sig));
    }
    if (auto named = named_class_from_string(n.atom)) {
      try {
        return named_class(*named, sig);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::WrongHomeSpace) {
          throw;
        }
        throw Error(ErrorCode::WrongSignature,
                    "at offset " + std::to_string(n.offset) + ": " + std::string(e.what()));
      }
    }
    if (auto t = numbered(n.atom, "psi")) {
      if (!sig.has_label(*t)) {
        unknown(n, sig, "no marking " + std::to_string(*t));
      }
      return psi_class(sig, *t);
    }
    if (auto i = numbered(n.atom, "d")) {
      return boundary_shorthand(n, sig, 'd', *i);
    }
    if (auto i = numbered(n.atom, "s")) {
      return boundary_shorthand(n, sig, 's', *i);
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::InvalidPair:
      case ErrorCode::InvalidArgument:
      case ErrorCode::DuplicateLabel:
        unknown(n, sig, e.what());
      default:
        throw;
    }
  }
  unknown(n, sig);
}

Value evaluate(const Node& n, const Signature& sig) {
  switch (n.kind) {
    case Node::Kind::Number:
      return Value{n.number, std::nullopt};
    case Node::Kind::Atom:
      return Value{1, resolve_atom(n, sig)};
    case Node::Kind::Negate: {
      Value v = evaluate(*n.children[0], sig);
      v.scalar = -v.scalar;
      return v;
    }
    case Node::Kind::Product: {
      Value acc;
      for (const auto& child : n.children) {
        Value v = evaluate(*child, sig);
        if (v.cls && acc.cls) {
          throw Error(ErrorCode::SyntaxError,
                      "at offset " + std::to_string(child->offset) + ": a product may contain only one class");
        }
        acc.scalar *= v.scalar;
        if (v.cls) {
          acc.cls = std::move(v.cls);
        }
      }
      return acc;
    }
    case Node::Kind::Sum: {
      Value first = evaluate(*n.children[0], sig);
      if (n.children.size() == 1) {
        return first;
      }
      DivisorClass total(sig);
      auto absorb = [&](const Value& v, bool minus, const Node& at) {
        if (!v.cls) {
          if (v.scalar != 0) {
            throw Error(ErrorCode::SyntaxError,
                        "at offset " + std::to_string(at.offset) + ": a nonzero number is not a class");
          }
          return;
        }
        total += (minus ? -v.scalar : v.scalar) * *v.cls;
      };
      absorb(first, false, *n.children[0]);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        absorb(evaluate(*n.children[i], sig), n.subtract[i - 1], *n.children[i]);
      }
      return Value{1, std::move(total)};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "corrupt expression tree");
}

}  // namespace

DivisorClass parse_divisor(std::string_view text, const Signature& sig) {
  const NodePtr root = Parser(text).parse();
  Value v = evaluate(*root, sig);
  if (!v.cls) {
    if (v.scalar != 0) {
      throw Error(ErrorCode::SyntaxError, "at offset 0: a nonzero number is not a class");
    }
    return DivisorClass(sig);
  }
  return v.scalar * *v.cls;
}

std::string to_text(const DivisorClass& d) {
  if (d.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [element, coeff] : d.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (magnitude != 1) {
      out += to_string(magnitude) + "*";
    }
    out += to_text(element, d.signature());
  }
  return out;
}

}  // namespace nefcone
