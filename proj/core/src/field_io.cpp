#include "pvf/field_io.hpp"

#include <cctype>
#include <sstream>

#include "pvf/errors.hpp"

namespace pvf {

namespace {

class FieldParser {
public:
  FieldParser(const std::string& text, SpaceDescriptor space) : text_(text), space_(space) {}

  PolyVectorField run() {
    PolyVectorField out(space_);
    skip_ws();
    if (done()) throw ParseError("empty field expression", pos_);
    // A bare "0" denotes the zero field.
    if (peek() == '0' && is_only_zero()) return out;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    parse_term(out, sign);
    skip_ws();
    while (!done()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-' between terms", pos_);
      ++pos_;
      parse_term(out, c == '-' ? -1 : 1);
      skip_ws();
    }
    return out;
  }

private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool is_only_zero() const {
    for (size_t i = pos_; i < text_.size(); ++i) {
      char c = text_[i];
      if (i == pos_ ? c != '0' : !std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
  }

  long parse_nat() {
    skip_ws();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) throw ParseError("number too large", pos_);
      ++pos_;
    }
    return v;
  }

  mpq_class parse_rational() {
    long num = parse_nat();
    skip_ws();
    if (!done() && peek() == '/') {
      ++pos_;
      size_t den_pos = pos_;
      long den = parse_nat();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  bool next_is_imaginary() const { return !done() && peek() == 'i'; }

  // coeff := rational | rational 'i' | 'i' | rational ('+'|'-') rational 'i'
  Scalar parse_coeff() {
    skip_ws();
    if (next_is_imaginary()) {
      require_gaussian();
      ++pos_;
      return Scalar::i();
    }
    mpq_class re = parse_rational();
    skip_ws();
    if (next_is_imaginary()) {
      require_gaussian();
      ++pos_;
      return Scalar(mpq_class(0), re);
    }
    if (space_.mode == ScalarMode::gaussian && !done() && (peek() == '+' || peek() == '-')) {
      // Lookahead for the imaginary part; plain separators roll back.
      size_t save = pos_;
      int s = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
      if (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i')) {
        mpq_class im(1);
        if (peek() != 'i') im = parse_rational();
        skip_ws();
        if (next_is_imaginary()) {
          ++pos_;
          return Scalar(re, s < 0 ? mpq_class(-im) : im);
        }
      }
      pos_ = save;
    }
    return Scalar(re);
  }

  void require_gaussian() const {
    if (space_.mode != ScalarMode::gaussian)
      throw ParseError("imaginary coefficient in rational mode", pos_);
  }

  void parse_term(PolyVectorField& out, int sign) {
    skip_ws();
    if (done()) throw ParseError("missing term", pos_);
    Scalar coeff(1);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
      coeff = parse_coeff();
      skip_ws();
      if (done() || peek() != '*') throw ParseError("expected '*' after coefficient", pos_);
      ++pos_;
      skip_ws();
    }
    Monomial mono{std::vector<int>(space_.n, 0)};
    while (!done() && peek() == 'x') {
      ++pos_;
      size_t idx_pos = pos_;
      long idx = parse_nat();
      if (idx < 1 || idx > space_.n)
        throw ParseError("variable index out of range for this space", idx_pos);
      long e = 1;
      skip_ws();
      if (!done() && peek() == '^') {
        ++pos_;
        e = parse_nat();
      }
      mono.exp[idx - 1] += static_cast<int>(e);
      skip_ws();
      if (done() || peek() != '*') throw ParseError("expected '*' after variable", pos_);
      ++pos_;
      skip_ws();
    }
    if (done() || peek() != 'd') throw ParseError("expected direction 'd<k>'", pos_);
    ++pos_;
    size_t dir_pos = pos_;
    long dir = parse_nat();
    if (dir < 1 || dir > space_.n)
      throw ParseError("direction index out of range for this space", dir_pos);
    out.add_term({std::move(mono), static_cast<int>(dir - 1)}, Scalar(sign) * coeff);
  }

  const std::string& text_;
  SpaceDescriptor space_;
  size_t pos_ = 0;
};

// Sign to pull out in front of a term: sign of the real part, falling back
// to the imaginary part.
int display_sign(const Scalar& c) {
  if (sgn(c.real()) != 0) return sgn(c.real());
  return sgn(c.imag());
}

std::string coeff_str(const Scalar& c) {
  // |c| after display-sign extraction; complex parts keep internal signs.
  return c.str();
}

}  // namespace

PolyVectorField parse_field(const std::string& text, SpaceDescriptor space) {
  return FieldParser(text, space).run();
}

std::string format_field(const PolyVectorField& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    int sign = display_sign(c);
    Scalar mag = sign < 0 ? -c : c;
    if (first) {
      if (sign < 0) out += "-";
      first = false;
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    std::string vars;
    for (size_t i = 0; i < key.mono.exp.size(); ++i) {
      int e = key.mono.exp[i];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    std::string head;
    if (!mag.is_one()) head = coeff_str(mag) + "*";
    out += head + (vars.empty() ? "" : vars + "*") + "d" + std::to_string(key.dir + 1);
  }
  return out;
}

std::vector<PolyVectorField> parse_basis_file(const std::string& content,
                                              SpaceDescriptor space) {
  std::vector<PolyVectorField> out;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.push_back(parse_field(line, space));
  }
  return out;
}

}  // namespace pvf
