#include "siteswap/notation.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace siteswap {

namespace {

bool is_space(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

// [offset of first kept byte, trimmed view)
std::pair<std::string_view, std::size_t> trim(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && is_space(text[begin])) ++begin;
  std::size_t end = text.size();
  while (end > begin && is_space(text[end - 1])) --end;
  return {text.substr(begin, end - begin), begin};
}

ThrowSequence parse_compact(std::string_view body, std::size_t base) {
  ThrowSequence seq;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    std::int64_t value = -1;
    if (ch >= '0' && ch <= '9')
      value = ch - '0';
    else if (ch >= 'a' && ch <= 'z')
      value = 10 + (ch - 'a');
    else if (ch >= 'A' && ch <= 'Z')
      value = 10 + (ch - 'A');
    if (value < 0)
      throw ParseError(std::string("unexpected character '") + ch + "'",
                       base + i);
    seq.heights.push_back(value);
  }
  return seq;
}

ThrowSequence parse_list(std::string_view body, std::size_t base) {
  ThrowSequence seq;
  std::size_t pos = 0;
  while (true) {
    // INT := [0-9]+
    const std::size_t token_start = pos;
    if (pos >= body.size() || body[pos] < '0' || body[pos] > '9') {
      if (pos < body.size() && (body[pos] == '-' || body[pos] == '+'))
        throw ParseError("signed numbers are not allowed", base + pos);
      throw ParseError("expected a number", base + pos);
    }
    while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') ++pos;

    std::int64_t value = 0;
    const auto [end, err] = std::from_chars(body.data() + token_start,
                                            body.data() + pos, value);
    if (err == std::errc::result_out_of_range)
      throw ParseError("number out of range for a 64-bit height",
                       base + token_start);
    (void)end;

    seq.heights.push_back(value);

    while (pos < body.size() && is_space(body[pos])) ++pos;
    if (pos == body.size()) break;
    if (body[pos] != ',')
      throw ParseError(std::string("unexpected character '") + body[pos] + "'",
                       base + pos);
    ++pos;  // consume ','
    while (pos < body.size() && is_space(body[pos])) ++pos;
  }
  return seq;
}

char compact_digit(std::int64_t h) {
  if (h <= 9) return static_cast<char>('0' + h);
  return static_cast<char>('a' + (h - 10));
}

}  // namespace

ThrowSequence parse(std::string_view text) {
  const auto [body, base] = trim(text);
  if (body.empty()) throw ParseError("empty input", base);
  const bool has_comma = body.find(',') != std::string_view::npos;
  return has_comma ? parse_list(body, base) : parse_compact(body, base);
}

std::string render(const ThrowSequence& seq, NotationForm form) {
  std::string out;
  if (form == NotationForm::compact) {
    for (const auto h : seq.heights) {
      if (h > 35)
        throw std::domain_error("height " + std::to_string(h) +
                                " is not representable in compact form");
      out.push_back(compact_digit(h));
    }
    return out;
  }
  for (std::size_t i = 0; i < seq.heights.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(seq.heights[i]);
  }
  return out;
}

std::string render_auto(const ThrowSequence& seq) {
  for (const auto h : seq.heights)
    if (h > 35) return render(seq, NotationForm::list);
  return render(seq, NotationForm::compact);
}

}  // namespace siteswap
