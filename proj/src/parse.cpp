#include "bicyc/parse.hpp"

#include <cctype>
#include <vector>

namespace bicyc {
namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      fail(Errc::SyntaxError, std::string("expected '") + c + "' at position " +
                                  std::to_string(pos_));
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits)
      fail(Errc::SyntaxError,
           "expected an integer at position " + std::to_string(start));
    return std::stoll(text_.substr(start, pos_ - start));
  }
  // comma-separated integers; a single `_` denotes the empty list
  std::vector<int> residue_list() {
    skip_ws();
    if (eat('_')) return {};
    std::vector<int> out;
    out.push_back(static_cast<int>(integer()));
    while (eat(',')) out.push_back(static_cast<int>(integer()));
    return out;
  }
  void done() {
    skip_ws();
    if (pos_ != text_.size())
      fail(Errc::SyntaxError,
           "trailing input at position " + std::to_string(pos_));
  }
  size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  size_t pos_{0};
};

BicirculantParams build(int m, std::vector<int> R, std::vector<int> S,
                        std::vector<int> T, size_t at) {
  try {
    return BicirculantParams::make(m, std::move(R), std::move(S),
                                   std::move(T));
  } catch (const Error& e) {
    fail(Errc::SemanticError,
         std::string(e.what()) + " (near position " + std::to_string(at) + ")");
  }
}

}  // namespace

BicirculantParams parse_params(const std::string& text) {
  Cursor cur(text);
  if (cur.eat_word("GP")) {
    cur.expect('(');
    int m = static_cast<int>(cur.integer());
    cur.expect(',');
    int k = static_cast<int>(cur.integer());
    cur.expect(')');
    cur.done();
    return build(m, {1, -1}, {0}, {k, -k}, cur.pos());
  }
  if (cur.eat_word("I")) {
    cur.expect('(');
    int m = static_cast<int>(cur.integer());
    cur.expect(',');
    int j = static_cast<int>(cur.integer());
    cur.expect(',');
    int k = static_cast<int>(cur.integer());
    cur.expect(')');
    cur.done();
    return build(m, {j, -j}, {0}, {k, -k}, cur.pos());
  }
  if (cur.eat_word("H")) {
    cur.expect('(');
    int m = static_cast<int>(cur.integer());
    cur.expect(';');
    auto S = cur.residue_list();
    cur.expect(')');
    cur.done();
    return build(m, {}, std::move(S), {}, cur.pos());
  }
  if (cur.eat_word("B")) {
    cur.expect('(');
    int m = static_cast<int>(cur.integer());
    cur.expect(';');
    size_t r_at = cur.pos();
    auto R = cur.residue_list();
    cur.expect(';');
    auto S = cur.residue_list();
    cur.expect(';');
    auto T = cur.residue_list();
    cur.expect(')');
    cur.done();
    return build(m, std::move(R), std::move(S), std::move(T), r_at);
  }
  fail(Errc::SyntaxError, "expected B(, GP(, I( or H( at position 0");
}

}  // namespace bicyc
