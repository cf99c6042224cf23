#pragma once

#include <cctype>
#include <string>
#include <string_view>

namespace pfres {
namespace detail {

template <Field K>
class PolyParser {
 public:
  PolyParser(const RingPtr<K>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<K> run() {
    Polynomial<K> p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' column " + std::to_string(pos_ + 1) +
                     ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  Polynomial<K> expr() {
    Polynomial<K> acc = product();
    for (;;) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        return acc;
    }
  }
  Polynomial<K> product() {
    Polynomial<K> acc = unary();
    while (eat('*')) acc *= unary();
    return acc;
  }
  Polynomial<K> unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial<K> power() {
    Polynomial<K> base = atom();
    if (!eat('^')) return base;
    std::string e = digits();
    if (e.size() > 3) fail("exponent too large");
    Polynomial<K> r = Polynomial<K>::constant(ring_, ring_->field().one());
    for (int i = std::stoi(e); i > 0; --i) r *= base;
    return r;
  }
  Polynomial<K> atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    const K& k = ring_->field();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto value = k.from_integer(Integer(digits()));
      if (eat('/')) {
        auto den = k.from_integer(Integer(digits()));
        if (k.is_zero(den)) fail("zero denominator");
        value = k.mul(value, k.inv(den));
      }
      return Polynomial<K>::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial<K>::variable(ring_, *index);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const RingPtr<K>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Field K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text) {
  return detail::PolyParser<K>(ring, text).run();
}

}  // namespace pfres
