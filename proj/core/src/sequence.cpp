#include "flowerfr/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "flowerfr/errors.hpp"

namespace flowerfr {

BitSeq::BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw ArgumentError("bit at position " + std::to_string(i + 1) + " is not 0 or 1");
    }
  }
}

bool BitSeq::at(std::size_t pos) const {
  if (pos < 1 || pos > bits_.size()) {
    throw RangeError("position " + std::to_string(pos) + " outside 1.." +
                     std::to_string(bits_.size()));
  }
  return bits_[pos - 1] != 0;
}

std::size_t BitSeq::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t BitSeq::prefix_weight(std::size_t count) const {
  if (count > bits_.size()) {
    throw RangeError("prefix length " + std::to_string(count) + " exceeds sequence length " +
                     std::to_string(bits_.size()));
  }
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(count), std::uint8_t{1}));
}

std::vector<std::size_t> BitSeq::one_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i + 1);
  }
  return out;
}

bool BitSeq::all_ones() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 1; });
}

std::string BitSeq::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

namespace {

class NotationParser {
 public:
  NotationParser(std::string_view text, std::size_t max_length)
      : text_(text), max_length_(max_length) {}

  BitSeq run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("expected a bit or '('", pos_);
    while (pos_ < text_.size()) {
      term();
      skip_space();
    }
    return BitSeq(std::move(out_));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void term() {
    std::vector<std::uint8_t> atom;
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      atom.push_back(static_cast<std::uint8_t>(c - '0'));
      ++pos_;
    } else if (c == '(') {
      ++pos_;
      skip_space();
      while (pos_ < text_.size() && text_[pos_] != ')') {
        const char b = text_[pos_];
        if (b != '0' && b != '1') throw ParseError(unexpected(b, "inside parentheses"), pos_);
        atom.push_back(static_cast<std::uint8_t>(b - '0'));
        ++pos_;
        skip_space();
      }
      if (pos_ == text_.size()) throw ParseError("unclosed '('", pos_);
      if (atom.empty()) throw ParseError("empty parentheses", pos_);
      ++pos_;  // ')'
    } else {
      throw ParseError(unexpected(c, "where a bit or '(' was expected"), pos_);
    }

    std::size_t times = 1;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      times = exponent();
    }
    append(atom, times);
  }

  // A bare exponent is one digit ("(1011)^30^4" is (1011)^3 0^4); longer
  // exponents are braced: "1^{12}".
  std::size_t exponent() {
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return static_cast<std::size_t>(text_[pos_++] - '0');
    }
    if (pos_ == text_.size() || text_[pos_] != '{') {
      throw ParseError("expected a digit or '{' after '^'", pos_);
    }
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        throw LimitError("exponent overflows at position " + std::to_string(start));
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected digits inside '{}'", pos_);
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '}') throw ParseError("expected '}'", pos_);
    ++pos_;
    return value;
  }

  void append(const std::vector<std::uint8_t>& atom, std::size_t times) {
    if (times != 0 && atom.size() > (max_length_ - out_.size()) / times) {
      throw LimitError("expanded sequence exceeds maximum length " + std::to_string(max_length_));
    }
    for (std::size_t t = 0; t < times; ++t) out_.insert(out_.end(), atom.begin(), atom.end());
  }

  static std::string unexpected(char c, const char* where) {
    return std::string("unexpected character '") + c + "' " + where;
  }

  std::string_view text_;
  std::size_t max_length_;
  std::size_t pos_ = 0;
  std::vector<std::uint8_t> out_;
};

}  // namespace

BitSeq parse(std::string_view text, std::size_t max_length) {
  return NotationParser(text, max_length).run();
}

// Prefix-function (KMP border) formulation: the shortest period of a word is
// its length minus the length of its longest proper border.
std::optional<std::size_t> min_period(const BitSeq& s) {
  const auto bits = s.bits();
  const std::size_t len = bits.size();
  if (len == 0) throw RangeError("period of an empty sequence is undefined");

  std::vector<std::size_t> border(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && bits[i] != bits[k]) k = border[k - 1];
    if (bits[i] == bits[k]) ++k;
    border[i] = k;
  }
  const std::size_t period = len - border[len - 1];
  if (period == len) return std::nullopt;
  return period;
}

BitSeq concat(const BitSeq& a, const BitSeq& b) {
  std::vector<std::uint8_t> out(a.bits().begin(), a.bits().end());
  out.insert(out.end(), b.bits().begin(), b.bits().end());
  return BitSeq(std::move(out));
}

BitSeq power(const BitSeq& a, std::size_t times, std::size_t max_length) {
  if (times != 0 && a.length() > max_length / times) {
    throw LimitError("power exceeds maximum length " + std::to_string(max_length));
  }
  std::vector<std::uint8_t> out;
  out.reserve(a.length() * times);
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), a.bits().begin(), a.bits().end());
  return BitSeq(std::move(out));
}

}  // namespace flowerfr
