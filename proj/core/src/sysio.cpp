#include "nullcert/sysio.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "nullcert/error.hpp"

namespace nullcert {

namespace {

constexpr std::size_t kMaxNesting = 256;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string describe(char c) {
  if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
  std::ostringstream os;
  os << "byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
  return os.str();
}

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

/// Tokenizes one line (comments already stripped).
std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = column_offset + i + 1;
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < line.size() && is_digit(line[j])) ++j;
      out.push_back({Tok::number, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      out.push_back({Tok::ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default: throw ParseError(line_no, col, "unexpected character " + describe(c));
    }
    out.push_back({k, line.substr(i, 1), col});
    ++i;
  }
  out.push_back({Tok::end, {}, column_offset + line.size() + 1});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> tokens, const RingPtr& ring, std::size_t line_no)
      : tokens_(std::move(tokens)), ring_(ring), line_(line_no) {}

  Polynomial parse() {
    Polynomial p = expr(0);
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + token_name(peek()));
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  static std::string token_name(const Token& t) {
    if (t.kind == Tok::end) return "end of line";
    return "'" + std::string(t.text) + "'";
  }

  Polynomial expr(std::size_t depth) {
    if (depth > kMaxNesting) fail(peek(), "expression nested too deeply");
    bool negate = false;
    if (peek().kind == Tok::minus) {
      next();
      negate = true;
    }
    Polynomial acc = term(depth);
    if (negate) acc = -acc;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Polynomial rhs = term(depth);
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term(std::size_t depth) {
    const Token& start = peek();
    Polynomial acc = factor(depth);
    while (peek().kind == Tok::star) {
      next();
      Polynomial rhs = factor(depth);
      try {
        acc *= rhs;
      } catch (const ExponentOverflow& e) {
        fail(start, e.what());
      }
    }
    return acc;
  }

  Polynomial factor(std::size_t depth) {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number: {
        std::string text(t.text);
        if (peek().kind == Tok::slash) {
          next();
          const Token& den = next();
          if (den.kind != Tok::number) fail(den, "expected denominator, found " + token_name(den));
          text += "/";
          text += den.text;
          if (den.text.find_first_not_of('0') == std::string_view::npos) fail(den, "zero denominator");
        }
        return Polynomial::constant(ring_, Rational::parse(text));
      }
      case Tok::ident: {
        const auto idx = ring_->registry().find(t.text);
        if (!idx) fail(t, "unknown variable '" + std::string(t.text) + "'");
        Monomial::Exponent power = 1;
        if (peek().kind == Tok::caret) {
          next();
          const Token& e = next();
          if (e.kind != Tok::number) fail(e, "expected exponent, found " + token_name(e));
          power = parse_exponent(e);
        }
        return Polynomial::monomial(ring_, Rational(1), Monomial::variable(ring_->num_vars(), *idx, power));
      }
      case Tok::lparen: {
        Polynomial inner = expr(depth + 1);
        const Token& close = next();
        if (close.kind != Tok::rparen) fail(close, "expected ')', found " + token_name(close));
        return inner;
      }
      default:
        fail(t, "expected a number, variable or '(', found " + token_name(t));
    }
  }

  Monomial::Exponent parse_exponent(const Token& e) const {
    std::uint64_t v = 0;
    for (char c : e.text) {
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > std::numeric_limits<Monomial::Exponent>::max()) fail(e, "exponent too large");
    }
    return static_cast<Monomial::Exponent>(v);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
  std::size_t line_;
};

Polynomial parse_line(std::string_view body, const RingPtr& ring, std::size_t line_no, std::size_t column_offset) {
  return ExprParser(tokenize(body, line_no, column_offset), ring, line_no).parse();
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!is_space(c)) return false;
  }
  return true;
}

std::size_t skip_spaces(std::string_view s, std::size_t i) {
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

bool starts_with_keyword(std::string_view body, std::string_view keyword, std::size_t& after) {
  const std::size_t i = skip_spaces(body, 0);
  if (body.substr(i, keyword.size()) != keyword) return false;
  after = i + keyword.size();
  return true;
}

RingPtr parse_vars(std::string_view body, std::size_t after, std::size_t line_no) {
  std::vector<std::string> names;
  std::set<std::string, std::less<>> seen;
  std::size_t i = after;
  while (true) {
    i = skip_spaces(body, i);
    if (i >= body.size()) break;
    const std::size_t col = i + 1;
    if (!is_ident_start(body[i])) throw ParseError(line_no, col, "expected variable name, found " + describe(body[i]));
    std::size_t j = i;
    while (j < body.size() && is_ident_char(body[j])) ++j;
    if (j < body.size() && !is_space(body[j])) {
      throw ParseError(line_no, j + 1, "unexpected character " + describe(body[j]) + " in variable list");
    }
    std::string name(body.substr(i, j - i));
    if (!seen.insert(name).second) throw ParseError(line_no, col, "duplicate variable '" + name + "'");
    names.push_back(std::move(name));
    i = j;
  }
  if (names.empty()) throw ParseError(line_no, after + 1, "'vars:' declares no variables");
  return make_lex_ring(std::move(names));
}

}  // namespace

SystemDocument parse_document(std::string_view text) {
  RingPtr ring;
  std::vector<Polynomial> polys;
  std::optional<std::string> order_text;
  std::size_t order_line = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view body = strip_comment(text.substr(start, end - start));
    start = end + 1;
    if (blank(body)) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t after = 0;
    if (!ring) {
      if (!starts_with_keyword(body, "vars:", after)) {
        throw ParseError(line_no, skip_spaces(body, 0) + 1, "expected 'vars:' declaration");
      }
      ring = parse_vars(body, after, line_no);
    } else if (starts_with_keyword(body, "order:", after)) {
      if (order_text) throw ParseError(line_no, 1, "duplicate 'order:' directive");
      std::string_view spec = body.substr(skip_spaces(body, after));
      while (!spec.empty() && is_space(spec.back())) spec.remove_suffix(1);
      order_text = std::string(spec);
      order_line = line_no;
    } else {
      Polynomial p = parse_line(body, ring, line_no, 0);
      if (p.is_zero()) throw ParseError(line_no, skip_spaces(body, 0) + 1, "zero polynomial rejected");
      polys.push_back(std::move(p));
    }
    if (end == text.size()) break;
  }
  if (!ring) throw ParseError(line_no == 0 ? 1 : line_no, 1, "empty system: missing 'vars:' declaration");
  if (polys.empty()) throw ParseError(line_no, 1, "empty system: no polynomials given");
  if (order_text) {
    try {
      (void)parse_order(*order_text, ring->registry());
    } catch (const ParseError& e) {
      throw ParseError(order_line, e.column(), e.message());
    }
  }
  return SystemDocument{SystemF(ring, std::move(polys)), std::move(order_text), order_line};
}

SystemF parse_system(std::string_view text) { return parse_document(text).system; }

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (text.find('\n') != std::string_view::npos) {
    throw ParseError(1, text.find('\n') + 1, "expression must be on a single line");
  }
  return parse_line(text, ring, 1, 0);
}

MonomialOrder parse_order(std::string_view text, const VariableRegistry& registry) {
  std::vector<bool> used(registry.size(), false);
  auto take = [&](std::string_view raw, std::size_t col) {
    std::size_t a = 0;
    while (a < raw.size() && is_space(raw[a])) ++a;
    std::size_t b = raw.size();
    while (b > a && is_space(raw[b - 1])) --b;
    const std::string name(raw.substr(a, b - a));
    if (name.empty()) throw ParseError(1, col + a, "missing variable name");
    const auto idx = registry.find(name);
    if (!idx) throw ParseError(1, col + a, "unknown variable '" + name + "'");
    if (used[*idx]) throw ParseError(1, col + a, "duplicate variable '" + name + "'");
    used[*idx] = true;
    return *idx;
  };
  auto split = [&](std::string_view list, std::size_t col) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (true) {
      const auto comma = list.find(',', i);
      const auto piece = list.substr(i, comma == std::string_view::npos ? std::string_view::npos : comma - i);
      out.push_back(take(piece, col + i));
      if (comma == std::string_view::npos) break;
      i = comma + 1;
    }
    return out;
  };
  auto check_complete = [&](std::size_t col) {
    for (std::size_t v = 0; v < registry.size(); ++v) {
      if (!used[v]) throw ParseError(1, col, "order is missing variable '" + registry.name(v) + "'");
    }
  };

  if (text.substr(0, 4) == "lex:") {
    auto sig = split(text.substr(4), 5);
    check_complete(text.size() + 1);
    return MonomialOrder::lex(std::move(sig));
  }
  if (text.substr(0, 6) == "block:") {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t i = 6;
    while (i < text.size()) {
      if (is_space(text[i])) {
        ++i;
        continue;
      }
      if (text[i] != '[') throw ParseError(1, i + 1, "expected '[' to open a block");
      const auto close = text.find(']', i);
      if (close == std::string_view::npos) throw ParseError(1, i + 1, "unterminated block");
      blocks.push_back(split(text.substr(i + 1, close - i - 1), i + 2));
      i = close + 1;
    }
    if (blocks.empty()) throw ParseError(1, 7, "block order without blocks");
    check_complete(text.size() + 1);
    return MonomialOrder::block(std::move(blocks));
  }
  throw ParseError(1, 1, "order must start with 'lex:' or 'block:'");
}

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& reg = p.ring()->registry();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? -t.coeff : t.coeff;
    std::string mono;
    for (std::size_t i = 0; i < reg.size(); ++i) {
      const auto e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += reg.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + "*" + mono;
    }
  }
  return out;
}

std::string render_polynomial(const Polynomial& p, const MonomialOrder& order) {
  if (order == p.ring()->order()) return render_polynomial(p);
  return render_polynomial(embed(p, with_order(p.ring(), order)));
}

std::string render_system(const SystemF& system) {
  std::string out = "vars:";
  for (const auto& n : system.ring()->registry().names()) out += " " + n;
  out += '\n';
  for (const auto& f : system.polys()) out += render_polynomial(f) + "\n";
  return out;
}

}  // namespace nullcert
