#include "milnor/text.hpp"

#include <cctype>

namespace milnor {

namespace {

class Parser {
 public:
  Parser(const ResidueFieldPtr& ctx, std::string_view text) : ctx_(ctx), F_(ctx->field()), s_(text) {}

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, "at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }
  std::size_t pos() const { return pos_; }

  std::int64_t integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected an integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s_[pos_] - '0', &v))
        error("integer out of range");
      ++pos_;
    }
    return neg ? -v : v;
  }

  // t IDX ^ INT, accumulating into alpha.
  void variable_power(Exponent& alpha) {
    expect("t");
    const auto idx = integer();
    if (idx < 1 || idx > ctx_->r()) error("variable index t" + std::to_string(idx) + " exceeds r");
    std::int64_t k = 1;
    if (accept("^")) k = integer();
    if (__builtin_add_overflow(alpha[idx - 1], k, &alpha[idx - 1])) error("exponent overflow");
  }

  bool at_variable() { return peek() == 't'; }

  // A single term c * t^alpha.
  std::pair<Exponent, Fq> term() {
    Exponent alpha(ctx_->r(), 0);
    Fq c = F_.one();
    if (at_variable()) {
      variable_power(alpha);
    } else if (accept("g^")) {
      if (F_.degree() == 1) error("'g^k' coefficients need f > 1");
      c = F_.gen_pow(integer());
    } else {
      c = F_.from_int(integer());
    }
    while (true) {
      skip();
      const auto save = pos_;
      if (!accept("*")) break;
      if (!at_variable()) {
        pos_ = save;
        break;
      }
      variable_power(alpha);
    }
    return {alpha, c};
  }

  LaurentPoly element() {
    LaurentPoly out(ctx_);
    auto [alpha, c] = term();
    out.add_term(alpha, c);
    while (accept("+")) {
      auto [a2, c2] = term();
      out.add_term(a2, c2);
    }
    return out;
  }

  // Sign of the permutation sorting `order` (the indices as written).
  static int sort_sign(std::vector<int> order) {
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (order[i] > order[j]) sign = -sign;
    return sign;
  }

  struct WrittenSet {
    IndexSet set;
    int sign = 1;
    bool dt = false;
    int written = 0;  // number of indices as written, the degree of the term
  };

  WrittenSet written_idxlist(bool dt) {
    expect("[");
    WrittenSet out;
    out.dt = dt;
    std::vector<int> order;
    if (!accept("]")) {
      do {
        const auto idx = integer();
        if (idx < 1 || idx > ctx_->r()) error("index " + std::to_string(idx) + " exceeds r");
        order.push_back(static_cast<int>(idx - 1));
      } while (accept(","));
      expect("]");
    }
    out.written = static_cast<int>(order.size());
    for (int i : order) {
      if (out.set.contains(i)) {
        out.sign = 0;  // repeated index: the wedge vanishes
      }
      out.set.mask |= 1u << i;
    }
    if (out.sign != 0) out.sign = sort_sign(order);
    return out;
  }

  DiffForm form(std::optional<int> degree) {
    std::vector<std::pair<LaurentPoly, std::optional<WrittenSet>>> pieces;
    do {
      LaurentPoly coeff(ctx_);
      skip();
      if (peek() == 'd') {
        // A bare dlog[..] or dt[..] has coefficient 1.
        coeff.add_term(Exponent(ctx_->r(), 0), F_.one());
        if (accept("dlog"))
          pieces.emplace_back(std::move(coeff), written_idxlist(false));
        else if (accept("dt"))
          pieces.emplace_back(std::move(coeff), written_idxlist(true));
        else
          error("expected 'dlog' or 'dt'");
        continue;
      }
      if (accept("(")) {
        coeff = element();
        expect(")");
      } else {
        auto [alpha, c] = term();
        coeff.add_term(alpha, c);
      }
      std::optional<WrittenSet> set;
      skip();
      const auto save = pos_;
      if (accept("*")) {
        if (accept("dlog"))
          set = written_idxlist(false);
        else if (accept("dt"))
          set = written_idxlist(true);
        else
          pos_ = save;
      }
      pieces.emplace_back(std::move(coeff), set);
    } while (accept("+"));
    if (!at_end()) error("unexpected trailing input");

    std::optional<int> deg = degree;
    for (const auto& [coeff, set] : pieces) {
      if (coeff.is_zero() && !set) continue;  // a bare "0" carries no degree
      const int dq = set ? set->written : 0;
      if (deg && *deg != dq) error("terms of mixed degree");
      deg = dq;
    }
    DiffForm out(ctx_, deg.value_or(0));
    for (const auto& [coeff, set] : pieces) {
      if (coeff.is_zero()) continue;
      LaurentPoly c = coeff;
      IndexSet s;
      if (set) {
        s = set->set;
        if (set->sign == 0) continue;
        if (set->sign < 0) c = -c;
        if (set->dt) {
          Exponent shift(ctx_->r(), 0);
          for (int i : s.indices()) shift[i] = 1;
          c = c * LaurentPoly::monomial(ctx_, shift, F_.one());
        }
      }
      for (const auto& [alpha, v] : c.terms()) out.add_term(alpha, s, v);
    }
    return out;
  }

  SymbolExpr symbol() {
    SymbolExpr sym{0, LaurentPoly(ctx_), {}};
    expect("{");
    expect("1");
    expect("+");
    expect("pi");
    sym.m = accept("^") ? integer() : 1;
    expect("*");
    expect("(");
    sym.u = element();
    expect(")");
    while (accept(";")) {
      SymbolEntry entry;
      if (accept("pi")) {
        entry.is_prime = true;
      } else {
        auto [alpha, c] = term();
        entry.alpha = alpha;
        entry.coeff = c;
      }
      sym.tail.push_back(std::move(entry));
    }
    expect("}");
    if (!at_end()) error("unexpected trailing input");
    return sym;
  }

 private:
  const ResidueFieldPtr& ctx_;
  const FiniteField& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string print_monomial(const Exponent& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1) + "^" + std::to_string(alpha[i]);
  }
  return out;
}

std::string print_term(const FiniteField& F, const Exponent& alpha, Fq c) {
  const std::string mono = print_monomial(alpha);
  if (mono.empty()) return print_coeff(F, c);
  if (c == F.one()) return mono;
  return print_coeff(F, c) + "*" + mono;
}

}  // namespace

std::string print_coeff(const FiniteField& F, Fq c) {
  if (F.in_prime_field(c)) return std::to_string(c.v);
  return "g^" + std::to_string(F.log(c));
}

std::string print_exponent(const Exponent& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + ")";
}

LaurentPoly parse_element(const ResidueFieldPtr& ctx, std::string_view text) {
  Parser p(ctx, text);
  auto out = p.element();
  if (!p.at_end()) p.error("unexpected trailing input");
  return out;
}

std::string print_element(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [alpha, c] : f.terms()) {
    if (!out.empty()) out += "+";
    out += print_term(f.field(), alpha, c);
  }
  return out;
}

DiffForm parse_form(const ResidueFieldPtr& ctx, std::string_view text, std::optional<int> degree) {
  Parser p(ctx, text);
  return p.form(degree);
}

std::string print_form(const DiffForm& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const auto& t : w.terms()) {
    if (!out.empty()) out += "+";
    out += print_term(w.field(), t.alpha, t.coeff);
    if (w.degree() > 0) {
      out += "*dlog[";
      bool first = true;
      for (int i : t.set.indices()) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
      }
      out += "]";
    }
  }
  return out;
}

SymbolExpr parse_symbol(const ResidueFieldPtr& ctx, std::string_view text) {
  Parser p(ctx, text);
  return p.symbol();
}

std::string print_symbol(const SymbolExpr& sym) {
  std::string out = "{1+pi^" + std::to_string(sym.m) + "*(" + print_element(sym.u) + ")";
  for (const auto& entry : sym.tail) {
    out += "; ";
    out += entry.is_prime ? "pi" : print_term(sym.u.field(), entry.alpha, entry.coeff);
  }
  return out + "}";
}

}  // namespace milnor
