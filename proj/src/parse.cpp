#include "fibercone/parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  std::uint64_t parse_uint() {
    skip_ws();
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) fail("exponent does not fit in 64 bits");
    if (ptr == begin) fail("expected an unsigned integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ExpVec parse_pair(Cursor& cursor) {
  cursor.expect('(', "'('");
  const std::uint64_t a = cursor.parse_uint();
  cursor.expect(',', "','");
  const std::uint64_t b = cursor.parse_uint();
  cursor.expect(')', "')'");
  return {a, b};
}

ExpVec parse_term(Cursor& cursor) {
  ExpVec term{0, 0};
  bool saw_factor = false;
  while (true) {
    const char c = cursor.peek();
    if (c == 'x' || c == 'y') {
      cursor.accept(c);
      std::uint64_t exponent = 1;
      if (cursor.accept('^')) exponent = cursor.parse_uint();
      if (c == 'x')
        term.a = checked_add(term.a, exponent);
      else
        term.b = checked_add(term.b, exponent);
      saw_factor = true;
    } else if (c == '1' && !saw_factor) {
      cursor.accept('1');
      saw_factor = true;
    } else if (c == '*') {
      cursor.accept('*');
      continue;
    } else {
      break;
    }
  }
  if (!saw_factor) cursor.fail("expected a monomial factor ('x', 'y' or '1')");
  return term;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  Cursor cursor(text);
  if (cursor.eof()) throw InvalidIdeal("empty ideal");
  std::vector<ExpVec> gens;
  const bool pair_form = cursor.peek() == '(';
  while (true) {
    gens.push_back(pair_form ? parse_pair(cursor) : parse_term(cursor));
    if (!cursor.accept(',')) break;
  }
  if (!cursor.eof()) cursor.fail("trailing input after the last monomial");
  return make_ideal(std::move(gens));
}

std::string format_monomial(ExpVec u) {
  if (u.a == 0 && u.b == 0) return "1";
  std::ostringstream os;
  if (u.a > 0) {
    os << 'x';
    if (u.a > 1) os << '^' << u.a;
  }
  if (u.b > 0) {
    if (u.a > 0) os << '*';
    os << 'y';
    if (u.b > 1) os << '^' << u.b;
  }
  return os.str();
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i > 0) os << ", ";
    os << format_monomial(ideal.gens()[i]);
  }
  return os.str();
}

}  // namespace fibercone
