// Copyright 2026 The twoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoq/cli/angle.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "twoq/errors.hpp"
#include "twoq/matcore.hpp"

namespace twoq::cli {

namespace {

// sum     := product (('+' | '-') product)*
// product := unary (('*' | '/') unary | <implicit> primary)*
// unary   := ('-' | '+') unary | primary
// primary := number | 'pi' | '(' sum ')'
class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  double sum() {
    double v = product();
    for (;;) {
      skip_space();
      if (accept('+')) v += product();
      else if (accept('-')) v -= product();
      else return v;
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      skip_space();
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else if (starts_primary()) v *= primary();
      else return v;
    }
  }

  double unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  double primary() {
    skip_space();
    if (accept('(')) {
      const double v = sum();
      skip_space();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return kPi;
    }
    return number();
  }

  double number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected a number or 'pi'");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  bool starts_primary() const {
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return ch == '(' || text_.substr(pos_, 2) == "pi" || std::isdigit(static_cast<unsigned char>(ch)) || ch == '.';
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw ParseError("bad angle '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_angle(std::string_view text) {
  const double v = AngleParser(text).parse();
  if (!std::isfinite(v)) throw ParseError("angle '" + std::string(text) + "' is not finite");
  return v;
}

}  // namespace twoq::cli
