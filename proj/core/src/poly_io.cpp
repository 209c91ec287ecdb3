#include <cctype>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eqsym/poly.hpp"

namespace eqsym {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" + text + "'");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return text.substr(start, pos - start);
  }
};

// 't' index; returns the 1-based index.
int parse_var(Cursor& cur, int n) {
  if (!cur.accept('t')) cur.fail("expected variable");
  int idx = 0;
  try {
    idx = std::stoi(cur.digits());
  } catch (const std::exception&) {
    cur.fail("variable index out of range");
  }
  if (idx < 1 || idx > n)
    cur.fail("variable index t" + std::to_string(idx) + " outside [1, " + std::to_string(n) + "]");
  return idx;
}

}  // namespace

ExtPolynomial parse_poly(const std::string& text, int n) {
  check_var_count(n);
  Cursor cur{text};
  ExtPolynomial out(n);
  if (cur.done()) throw ParseError("empty polynomial text");

  bool first = true;
  while (!cur.done()) {
    int sign = +1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (cur.accept('+')) {
      sign = +1;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff(sign);
    bool have_mono = false;
    std::uint64_t mask = 0;
    bool dead = false;  // repeated variable: the whole term is zero

    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      std::string num = cur.digits();
      std::string den = "1";
      if (cur.accept('/')) den = cur.digits();
      coeff *= rational_from_string(num + "/" + den);
      if (cur.accept('*')) {
        have_mono = true;
      }
    } else {
      have_mono = true;
    }

    if (have_mono) {
      // Factors normalize through the monomial product: each step multiplies
      // on the right, accumulating the interchange sign.
      do {
        const int idx = parse_var(cur, n);
        const std::uint64_t bit = var_bit(idx);
        if (mask & bit) {
          dead = true;  // theta_i^2 = 0
        } else if (!dead) {
          if (mul_sign(mask, bit) < 0) coeff = -coeff;
          mask |= bit;
        }
      } while (cur.accept('*'));
    }

    if (!dead) out.add_term(mask, coeff);
  }
  return out;
}

std::string to_string(const ExtPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Reverse map order = lex-descending display.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mask, coeff] = *it;
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mask == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      bool first_var = true;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        if (!first_var) os << "*";
        os << "t" << (std::countr_zero(rest) + 1);
        first_var = false;
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtPolynomial& p) {
  return os << to_string(p);
}

std::string to_json(const ExtPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json subset = nlohmann::json::array();
    for (std::uint64_t rest = it->first; rest != 0; rest &= rest - 1)
      subset.push_back(std::countr_zero(rest) + 1);
    terms.push_back({{"subset", std::move(subset)}, {"coeff", it->second.get_str()}});
  }
  return nlohmann::json{{"n", p.vars()}, {"terms", std::move(terms)}}.dump();
}

ExtPolynomial poly_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("terms") ||
      !j["n"].is_number_integer() || !j["terms"].is_array())
    throw ParseError("polynomial JSON must be {\"n\": int, \"terms\": [...]}");
  const int n = j["n"].get<int>();
  check_var_count(n);
  ExtPolynomial out(n);
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("subset") || !term.contains("coeff") ||
        !term["subset"].is_array() || !term["coeff"].is_string())
      throw ParseError("each term must be {\"subset\": [...], \"coeff\": \"p/q\"}");
    std::vector<int> indices;
    for (const auto& v : term["subset"]) {
      if (!v.is_number_integer()) throw ParseError("subset entries must be integers");
      indices.push_back(v.get<int>());
    }
    const Monomial m = Monomial::from_indices(n, indices);
    out.add_term(m.mask(), rational_from_string(term["coeff"].get<std::string>()));
  }
  return out;
}

}  // namespace eqsym
