#pragma once

// Surface syntax for (n,n)-functions:
//
//   func    := term ('+' term)*
//   term    := mono | 'Tr(' mono ')' | 'L{' hexlist '}(' mono ')' | hexconst
//   mono    := [hexconst '*'] 'x^' uint | [hexconst '*'] 'x'
//   hexlist := hexconst (',' hexconst)*      c_0..c_{n-1} of sum c_i X^(2^i)
//   hexconst:= '0x' [0-9a-f]+
//
// Whitespace is ignored between tokens. Tr(...) contributes the field
// constant 0 or 1.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "papnlab/vbf.hpp"

namespace papnlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace expr {

struct Monomial {
  elem coefficient = 1;
  std::uint32_t exponent = 1;
  bool operator==(const Monomial&) const = default;
};
struct TraceTerm {
  Monomial inner;
  bool operator==(const TraceTerm&) const = default;
};
struct LinTerm {
  std::vector<elem> coeffs;  // as written; missing high coefficients are zero
  Monomial inner;
  bool operator==(const LinTerm&) const = default;
};
struct Constant {
  elem value = 0;
  bool operator==(const Constant&) const = default;
};

using Term = std::variant<Monomial, TraceTerm, LinTerm, Constant>;

}  // namespace expr

struct FuncExpr {
  std::vector<expr::Term> terms;
  bool operator==(const FuncExpr&) const = default;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, unsigned n) : src_(src), n_(n), limit_((std::uint64_t{1} << n) - 1) {}

  FuncExpr parse() {
    FuncExpr out;
    out.terms.push_back(term());
    skip_ws();
    while (pos_ < src_.size()) {
      expect('+');
      out.terms.push_back(term());
      skip_ws();
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool at_hex() {
    skip_ws();
    return pos_ + 1 < src_.size() && src_[pos_] == '0' && (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X');
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "', found '" + src_[pos_] + "'", pos_);
    }
    ++pos_;
  }

  elem hexconst() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_hex()) throw ParseError("expected hex constant '0x...'", pos_);
    pos_ += 2;
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < src_.size() && std::isxdigit(static_cast<unsigned char>(src_[pos_]))) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_])));
      v = v * 16 + static_cast<std::uint64_t>(c <= '9' ? c - '0' : c - 'a' + 10);
      if (v > limit_) throw ParseError("constant exceeds GF(2^" + std::to_string(n_) + ")", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("hex constant has no digits", start);
    return static_cast<elem>(v);
  }

  std::uint32_t uint_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      if (v > limit_) throw ParseError("exponent overflow: exceeds 2^n - 1 = " + std::to_string(limit_), start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected decimal exponent", start);
    return static_cast<std::uint32_t>(v);
  }

  expr::Monomial mono() {
    expr::Monomial m;
    if (at_hex()) {
      m.coefficient = hexconst();
      expect('*');
    }
    if (peek() != 'x') {
      if (pos_ >= src_.size()) throw ParseError("expected 'x' but input ended", pos_);
      throw ParseError(std::string("unknown symbol '") + src_[pos_] + "'", pos_);
    }
    ++pos_;
    if (peek() == '^') {
      ++pos_;
      m.exponent = uint_exponent();
    } else {
      m.exponent = 1;
    }
    return m;
  }

  expr::Term term() {
    const char c = peek();
    if (c == 'T') {
      if (src_.substr(pos_, 2) != "Tr") throw ParseError("unknown symbol 'T'", pos_);
      pos_ += 2;
      expect('(');
      expr::TraceTerm t{mono()};
      expect(')');
      return t;
    }
    if (c == 'L') {
      ++pos_;
      expect('{');
      expr::LinTerm t;
      const std::size_t list_start = pos_;
      t.coeffs.push_back(hexconst());
      while (peek() == ',') {
        ++pos_;
        t.coeffs.push_back(hexconst());
      }
      if (t.coeffs.size() > n_)
        throw ParseError("linearized polynomial has more than n = " + std::to_string(n_) + " coefficients", list_start);
      expect('}');
      expect('(');
      t.inner = mono();
      expect(')');
      return t;
    }
    if (at_hex()) {
      const std::size_t save = pos_;
      const elem v = hexconst();
      if (peek() == '*') {
        pos_ = save;
        return mono();
      }
      return expr::Constant{v};
    }
    if (c == 'x') return mono();
    if (c == '\0') throw ParseError("expected a term but input ended", pos_);
    throw ParseError(std::string("unknown symbol '") + c + "'", pos_);
  }

  std::string_view src_;
  unsigned n_;
  std::uint64_t limit_;
  std::size_t pos_ = 0;
};

inline std::string hex(elem v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", v);
  return buf;
}

inline std::string mono_string(const expr::Monomial& m) {
  std::string s = m.coefficient == 1 ? std::string{} : hex(m.coefficient) + "*";
  return s + "x^" + std::to_string(m.exponent);
}

}  // namespace detail

/// Parses src for GF(2^n); throws ParseError carrying the byte offset.
inline FuncExpr parse_expression(std::string_view src, unsigned n) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("field degree out of range");
  return detail::ExprParser(src, n).parse();
}

/// Canonical text; parse_expression(to_string(e)) == e.
inline std::string to_string(const FuncExpr& e) {
  std::string out;
  for (const auto& term : e.terms) {
    if (!out.empty()) out += " + ";
    std::visit(
        [&](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, expr::Monomial>) {
            out += detail::mono_string(t);
          } else if constexpr (std::is_same_v<T, expr::TraceTerm>) {
            out += "Tr(" + detail::mono_string(t.inner) + ")";
          } else if constexpr (std::is_same_v<T, expr::LinTerm>) {
            out += "L{";
            for (std::size_t i = 0; i < t.coeffs.size(); ++i) out += (i ? "," : "") + detail::hex(t.coeffs[i]);
            out += "}(" + detail::mono_string(t.inner) + ")";
          } else {
            out += detail::hex(t.value);
          }
        },
        term);
  }
  return out;
}

inline VBF evaluate(FieldPtr field, const FuncExpr& e) {
  const Field& f = *field;
  std::vector<elem> table(f.size(), 0);
  auto mono_at = [&](const expr::Monomial& m, elem x) {
    if (m.exponent > f.order() || m.coefficient >= f.size()) throw std::invalid_argument("term outside GF(2^n)");
    return f.mul(m.coefficient, f.pow(x, m.exponent));
  };
  for (const auto& term : e.terms) {
    std::visit(
        [&](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, expr::Monomial>) {
            for (elem x = 0; x < f.size(); ++x) table[x] ^= mono_at(t, x);
          } else if constexpr (std::is_same_v<T, expr::TraceTerm>) {
            for (elem x = 0; x < f.size(); ++x) table[x] ^= f.trace(mono_at(t.inner, x));
          } else if constexpr (std::is_same_v<T, expr::LinTerm>) {
            if (t.coeffs.size() > f.n()) throw std::invalid_argument("too many linearized coefficients");
            LinearizedPoly l{t.coeffs};
            l.coeffs.resize(f.n(), 0);
            for (elem x = 0; x < f.size(); ++x) table[x] ^= l.apply(f, mono_at(t.inner, x));
          } else {
            if (t.value >= f.size()) throw std::invalid_argument("constant outside GF(2^n)");
            for (elem x = 0; x < f.size(); ++x) table[x] ^= t.value;
          }
        },
        term);
  }
  return VBF(std::move(field), std::move(table));
}

inline VBF from_expression(FieldPtr field, std::string_view src) {
  const unsigned n = field->n();
  return evaluate(std::move(field), parse_expression(src, n));
}

}  // namespace papnlab
