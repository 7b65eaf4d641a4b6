#include "hecke/linform.hpp"

#include "hecke/errors.hpp"

#include <cctype>

namespace hecke {

LinForm LinForm::symbol(std::string name, const Rational& coeff) {
  LinForm f;
  if (coeff != 0) f.coeffs_.emplace(std::move(name), coeff);
  return f;
}

Rational LinForm::coeff(std::string_view symbol) const {
  auto it = coeffs_.find(symbol);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::set<std::string> LinForm::symbols() const {
  std::set<std::string> out;
  for (const auto& [s, _] : coeffs_) out.insert(s);
  return out;
}

Rational LinForm::evaluate(const ParamVector& at) const {
  Rational value = constant_;
  for (const auto& [s, a] : coeffs_) {
    auto it = at.find(s);
    if (it == at.end()) throw PreconditionError("parameter symbol '" + s + "' is not assigned");
    value += a * it->second;
  }
  return value;
}

Rational LinForm::slope(const ParamVector& direction) const {
  Rational value = 0;
  for (const auto& [s, a] : coeffs_) {
    auto it = direction.find(s);
    if (it != direction.end()) value += a * it->second;
  }
  return value;
}

LinForm LinForm::linear_part() const {
  LinForm f = *this;
  f.constant_ = 0;
  return f;
}

LinForm LinForm::primitive() const {
  if (is_zero()) return *this;
  std::vector<Rational> all;
  for (const auto& [_, a] : coeffs_) all.push_back(a);
  all.push_back(constant_);
  Integer scale = common_denominator(all);
  Integer g = 0;
  for (const auto& a : all) g = boost::multiprecision::gcd(g, Integer(numerator(a * Rational(scale))));
  Rational factor(scale, g);
  const Rational& lead = coeffs_.empty() ? constant_ : coeffs_.begin()->second;
  if (lead < 0) factor = -factor;
  return *this * factor;
}

LinForm& LinForm::operator+=(const LinForm& other) {
  constant_ += other.constant_;
  for (const auto& [s, a] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(s, a);
    if (!inserted) {
      it->second += a;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& other) {
  constant_ -= other.constant_;
  for (const auto& [s, a] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(s, -a);
    if (!inserted) {
      it->second -= a;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LinForm& LinForm::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    constant_ = 0;
    coeffs_.clear();
    return *this;
  }
  constant_ *= scalar;
  for (auto& [_, a] : coeffs_) a *= scalar;
  return *this;
}

LinForm& LinForm::operator/=(const Rational& scalar) {
  if (scalar == 0) throw InternalError("LinForm division by zero");
  return *this *= Rational(1) / scalar;
}

bool operator<(const LinForm& a, const LinForm& b) {
  if (a.coeffs_ != b.coeffs_) return a.coeffs_ < b.coeffs_;
  return a.constant_ < b.constant_;
}

namespace {

// Magnitude of a term: "k1", "3k1", "k1/2", "3k1/2"; constants "3", "1/2".
std::string term_text(const Rational& magnitude, const std::string& symbol) {
  if (symbol.empty()) return to_string(magnitude);
  std::string out;
  if (numerator(magnitude) != 1) out += numerator(magnitude).str();
  out += symbol;
  if (denominator(magnitude) != 1) out += "/" + denominator(magnitude).str();
  return out;
}

}  // namespace

std::string LinForm::to_string() const {
  std::string out;
  auto append = [&](const Rational& a, const std::string& symbol) {
    Rational magnitude = abs_of(a);
    if (out.empty()) {
      out = (a < 0 ? "-" : "") + term_text(magnitude, symbol);
    } else {
      out += (a < 0 ? " - " : " + ") + term_text(magnitude, symbol);
    }
  };
  for (const auto& [s, a] : coeffs_) append(a, s);
  if (constant_ != 0 || out.empty()) append(constant_, "");
  return out;
}

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  LinForm parse() {
    LinForm result;
    skip_space();
    if (at_end()) fail("empty form");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += term() * Rational(sign);
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  LinForm term() {
    Rational coeff = 1;
    bool has_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(digits());
      has_number = true;
      skip_space();
      if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        coeff /= Rational(digits());
        skip_space();
      }
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      std::string name = identifier();
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        coeff /= Rational(digits());
        skip_space();
      }
      return LinForm::symbol(name, coeff);
    }
    if (!has_number) fail("expected a number or a symbol");
    return LinForm(coeff);
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    Integer value(std::string(text_.substr(start, pos_ - start)));
    return value;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse linear form '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinForm LinForm::parse(std::string_view text) { return FormParser(text).parse(); }

ParamVector parse_param_vector(std::string_view text) {
  ParamVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw UsageError("expected symbol=value, got '" + std::string(item) + "'");
      std::string name(item.substr(0, eq));
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      out[name] = parse_rational(item.substr(eq + 1));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const ParamVector& params) {
  std::string out;
  for (const auto& [s, v] : params) {
    if (!out.empty()) out += ",";
    out += s + "=" + to_string(v);
  }
  return out;
}

std::string to_string(const std::vector<LinForm>& forms) {
  std::string out = "[";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i) out += ", ";
    out += forms[i].to_string();
  }
  return out + "]";
}

}  // namespace hecke
