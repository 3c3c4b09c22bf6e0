#include "weil/expression.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <variant>
#include <vector>

#include "weil/error.hpp"

namespace weil {

namespace {

using Value = std::variant<cplx, TestFunction, ParityFunction>;

const char* type_name(const Value& v) {
  switch (v.index()) {
    case 0: return "number";
    case 1: return "test function";
    default: return "parity function";
  }
}

struct Args {
  std::vector<Value> positional;
  std::map<std::string, Value> named;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::parse_error, "expression '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  Value add(const Value& a, const Value& b, double sign) {
    if (a.index() != b.index())
      error(std::string("cannot add ") + type_name(a) + " and " + type_name(b));
    if (auto* x = std::get_if<cplx>(&a)) return *x + sign * std::get<cplx>(b);
    if (auto* f = std::get_if<TestFunction>(&a)) return *f + std::get<TestFunction>(b) * sign;
    return std::get<ParityFunction>(a) + std::get<ParityFunction>(b) * cplx(sign);
  }

  Value scale(const Value& a, cplx c) {
    if (auto* x = std::get_if<cplx>(&a)) return *x * c;
    if (auto* f = std::get_if<TestFunction>(&a)) {
      if (c.imag() != 0.0) error("test functions take real coefficients");
      return *f * c.real();
    }
    return std::get<ParityFunction>(a) * c;
  }

  Value mul(const Value& a, const Value& b) {
    if (auto* x = std::get_if<cplx>(&a)) return scale(b, *x);
    if (auto* y = std::get_if<cplx>(&b)) return scale(a, *y);
    error("products of functions are not supported");
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = add(v, term(), 1.0);
      else if (accept('-'))
        v = add(v, term(), -1.0);
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = mul(v, unary());
      } else if (accept('/')) {
        Value d = unary();
        auto* x = std::get_if<cplx>(&d);
        if (!x) error("division by a function");
        if (*x == cplx(0)) error("division by zero");
        v = scale(v, 1.0 / *x);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return scale(unary(), -1.0);
    if (accept('+')) return unary();
    return primary();
  }

  std::string identifier() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(b, pos_ - b);
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      double x = std::strtod(begin, &end);
      if (end == begin) error("bad number");
      pos_ += std::size_t(end - begin);
      // 2i, 0.5i
      if (pos_ < s_.size() && s_[pos_] == 'i' &&
          (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
        return cplx(0, x);
      }
      return cplx(x);
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) error("unexpected '" + std::string(1, c) + "'");
    std::string name = identifier();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Args args = arguments();
      return call(name, args);
    }
    return constant(name);
  }

  Args arguments() {
    Args a;
    if (accept(')')) return a;
    do {
      skip();
      std::size_t save = pos_;
      std::string key = identifier();
      skip();
      if (!key.empty() && pos_ < s_.size() && s_[pos_] == '=') {
        ++pos_;
        if (a.named.count(key)) error("duplicate argument '" + key + "'");
        a.named.emplace(key, expr());
      } else {
        pos_ = save;
        if (!a.named.empty()) error("positional argument after keyword argument");
        a.positional.push_back(expr());
      }
    } while (accept(','));
    expect(')');
    return a;
  }

  Value constant(const std::string& name) {
    if (name == "pi") return cplx(std::numbers::pi);
    if (name == "e") return cplx(std::numbers::e);
    if (name == "i") return cplx(0, 1);
    if (name == "gauss2") return ParityFunction::gauss2();
    if (name == "oddgauss2" || name == "odd_gauss2") return ParityFunction::odd_gauss2();
    if (name == "zero") return TestFunction::zero();
    error("unknown name '" + name + "'");
  }

  // binds positional and keyword arguments to the parameter list; missing ones use defaults
  std::vector<Value> bind(const std::string& fn, Args& args, const std::vector<std::string>& params,
                          const std::vector<std::optional<Value>>& defaults) {
    if (args.positional.size() > params.size()) error(fn + " takes at most " + std::to_string(params.size()) + " arguments");
    std::vector<std::optional<Value>> out(params.size());
    for (std::size_t k = 0; k < args.positional.size(); ++k) out[k] = args.positional[k];
    for (auto& [key, v] : args.named) {
      std::size_t k = 0;
      while (k < params.size() && params[k] != key) ++k;
      if (k == params.size()) error(fn + " has no argument '" + key + "'");
      if (out[k]) error(fn + ": argument '" + key + "' given twice");
      out[k] = v;
    }
    std::vector<Value> r;
    for (std::size_t k = 0; k < params.size(); ++k) {
      if (!out[k]) out[k] = defaults[k];
      if (!out[k]) error(fn + ": missing argument '" + params[k] + "'");
      r.push_back(*out[k]);
    }
    return r;
  }

  double real(const Value& v, const std::string& what) {
    auto* x = std::get_if<cplx>(&v);
    if (!x || x->imag() != 0.0) error(what + " must be a real number");
    return x->real();
  }
  TestFunction function(const Value& v, const std::string& what) {
    auto* f = std::get_if<TestFunction>(&v);
    if (!f) error(what + " must be a test function");
    return *f;
  }

  Value call(const std::string& name, Args& args) {
    try {
      if (name == "loggauss" || name == "loggaussian") {
        auto v = bind(name, args, {"a", "mu", "sigma"}, {std::nullopt, std::nullopt, std::nullopt});
        return TestFunction::log_gaussian(real(v[0], "a"), real(v[1], "mu"), real(v[2], "sigma"));
      }
      if (name == "logbump") {
        auto v = bind(name, args, {"a", "lo", "hi", "k"}, {std::nullopt, std::nullopt, std::nullopt, cplx(1.0)});
        return TestFunction::log_bump(real(v[0], "a"), real(v[1], "lo"), real(v[2], "hi"), real(v[3], "k"));
      }
      if (name == "shift") {
        auto v = bind(name, args, {"t", "f"}, {std::nullopt, std::nullopt});
        return function(v[1], "f").shifted(real(v[0], "t"));
      }
      if (name == "power") {
        auto v = bind(name, args, {"s", "f"}, {std::nullopt, std::nullopt});
        return function(v[1], "f").scaled_power(real(v[0], "s"));
      }
      if (name == "J") {
        auto v = bind(name, args, {"f"}, {std::nullopt});
        return function(v[0], "f").reflected();
      }
      if (name == "gauss") {
        auto v = bind(name, args, {"c", "k", "alpha"}, {cplx(1.0), cplx(0.0), cplx(1.0)});
        auto* c = std::get_if<cplx>(&v[0]);
        if (!c) error("c must be a number");
        double k = real(v[1], "k");
        if (k < 0 || k != std::floor(k)) error("k must be a non-negative integer");
        return ParityFunction::gaussian(*c, int(k), real(v[2], "alpha"));
      }
    } catch (const NumericError& e) {
      if (e.kind() == ErrorKind::parse_error) throw;
      error(e.what());
    }
    error("unknown function '" + name + "'");
  }
};

}  // namespace

TestFunction parse_test_function(const std::string& text) {
  Value v = Parser(text).parse();
  if (auto* f = std::get_if<TestFunction>(&v)) return *f;
  fail(ErrorKind::parse_error, "expression '" + text + "' is a " + type_name(v) + ", not a test function");
}

ParityFunction parse_parity_function(const std::string& text) {
  Value v = Parser(text).parse();
  if (auto* f = std::get_if<ParityFunction>(&v)) return *f;
  fail(ErrorKind::parse_error, "expression '" + text + "' is a " + type_name(v) + ", not a parity function");
}

}  // namespace weil
