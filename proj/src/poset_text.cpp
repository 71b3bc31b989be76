#include "zdposet/poset_text.hpp"

#include <iterator>
#include <sstream>
#include <utility>
#include <vector>

namespace zdp {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

void check_label(std::size_t line, const std::string &label) {
  if (label.find_first_of("<;#") != std::string::npos)
    throw ParseError(line, "label '" + label + "' contains a reserved character");
}

} // namespace

Poset parse_poset(std::string_view text) {
  std::vector<std::string> labels;
  bool have_elements = false;
  std::vector<std::pair<std::string, std::string>> generators;

  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of("\n;", pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const bool newline = end < text.size() && text[end] == '\n';

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);

    if (!line.empty()) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(line_no, "expected 'elements:' or 'rel:'");
      const std::string_view key = trim(line.substr(0, colon));
      const std::string_view body = trim(line.substr(colon + 1));
      if (key == "elements") {
        if (have_elements)
          throw ParseError(line_no, "duplicate 'elements:' line");
        labels = split_ws(body);
        if (labels.empty())
          throw ParseError(line_no, "'elements:' lists no labels");
        for (const auto &l : labels)
          check_label(line_no, l);
        have_elements = true;
      } else if (key == "rel") {
        if (!have_elements)
          throw ParseError(line_no, "'rel:' before 'elements:'");
        const auto lt = body.find('<');
        if (lt == std::string_view::npos || body.find('<', lt + 1) != std::string_view::npos)
          throw ParseError(line_no, "expected 'rel: a < b'");
        auto lhs = split_ws(body.substr(0, lt));
        auto rhs = split_ws(body.substr(lt + 1));
        if (lhs.size() != 1 || rhs.size() != 1)
          throw ParseError(line_no, "expected 'rel: a < b'");
        generators.emplace_back(std::move(lhs[0]), std::move(rhs[0]));
        bool known_a = false, known_b = false;
        for (const auto &l : labels) {
          known_a = known_a || l == generators.back().first;
          known_b = known_b || l == generators.back().second;
        }
        if (!known_a)
          throw ParseError(line_no, "unknown label '" + generators.back().first + "'");
        if (!known_b)
          throw ParseError(line_no, "unknown label '" + generators.back().second + "'");
      } else {
        throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
      }
    }

    if (newline)
      ++line_no;
    pos = end + 1;
  }
  if (!have_elements)
    throw ParseError(line_no, "missing 'elements:' line");
  return build_poset(std::move(labels), generators);
}

Poset read_poset(std::istream &in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_poset(text);
}

namespace {

std::vector<std::string> poset_lines(const Poset &p) {
  std::vector<std::string> lines;
  std::string elements = "elements:";
  for (const auto &l : p.labels())
    elements += ' ' + l;
  lines.push_back(std::move(elements));
  for (const auto &[a, b] : p.covers())
    lines.push_back("rel: " + p.label(a) + " < " + p.label(b));
  return lines;
}

} // namespace

std::string write_poset(const Poset &p) {
  std::string out;
  for (const auto &l : poset_lines(p))
    out += l + '\n';
  return out;
}

std::string encode_poset(const Poset &p) {
  std::string out;
  for (const auto &l : poset_lines(p)) {
    if (!out.empty())
      out += "; ";
    out += l;
  }
  return out;
}

} // namespace zdp
