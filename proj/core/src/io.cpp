#include "foxdiv/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace foxdiv {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

/// One meaningful input line with comments removed. `offset` maps positions
/// in `text` back to 1-based columns of the original line.
struct Line {
  std::size_t number = 0;
  std::string_view text;
  std::size_t offset = 0;

  std::size_t column(std::size_t pos) const { return offset + pos + 1; }
};

std::string_view trim_view(std::string_view s, std::size_t& lead) {
  lead = 0;
  while (lead < s.size() && is_space(s[lead])) ++lead;
  std::size_t end = s.size();
  while (end > lead && is_space(s[end - 1])) --end;
  return s.substr(lead, end - lead);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::size_t lead = 0;
    std::string_view body = trim_view(raw, lead);
    if (!body.empty()) out.push_back({number, body, lead});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

/// Splits `key: value` and returns the value (trimmed) and its position.
std::optional<std::pair<std::string_view, std::size_t>> keyed(
    const Line& line, std::string_view key) {
  if (!line.text.starts_with(key)) return std::nullopt;
  std::size_t pos = key.size();
  while (pos < line.text.size() && is_space(line.text[pos])) ++pos;
  if (pos >= line.text.size() || line.text[pos] != ':') return std::nullopt;
  ++pos;
  std::size_t lead = 0;
  std::string_view value = trim_view(line.text.substr(pos), lead);
  return std::make_pair(value, pos + lead);
}

[[noreturn]] void fail(const Line& line, std::size_t pos,
                       const std::string& message) {
  throw ParseError(message, line.number, line.column(pos));
}

Word word_at(const Line& line, std::string_view text, std::size_t pos,
             const Alphabet& a) {
  try {
    return parse_word(text, a);
  } catch (const ParseError& e) {
    const std::size_t inner = e.column() == 0 ? 0 : e.column() - 1;
    throw ParseError(e.what(), line.number, line.column(pos + inner));
  }
}

bool valid_name(std::string_view name) {
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

/// Whitespace-separated tokens of `text` with their positions.
std::vector<std::pair<std::string_view, std::size_t>> tokens(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    out.emplace_back(text.substr(start, pos - start), start);
  }
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty presentation", 1, 1);

  Presentation p;
  const Line& head = lines.front();
  if (head.text == "group") {
    p.kind = PresentationKind::group;
  } else if (head.text == "semigroup") {
    p.kind = PresentationKind::semigroup;
  } else {
    fail(head, 0, "expected 'group' or 'semigroup'");
  }
  const bool inverses = p.kind == PresentationKind::group;

  bool have_generators = false;
  bool have_order = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (auto gens = keyed(line, "generators")) {
      if (have_generators) fail(line, 0, "duplicate 'generators' line");
      std::vector<std::string> names;
      std::set<std::string_view> seen;
      for (auto [name, pos] : tokens(gens->first)) {
        if (!valid_name(name)) {
          fail(line, gens->second + pos,
               "invalid generator name '" + std::string(name) + "'");
        }
        if (!seen.insert(name).second) {
          fail(line, gens->second + pos,
               "duplicate generator '" + std::string(name) + "'");
        }
        names.emplace_back(name);
      }
      p.alphabet = Alphabet(std::move(names), inverses);
      have_generators = true;
    } else if (auto order = keyed(line, "order")) {
      if (!have_generators) fail(line, 0, "'order' before 'generators'");
      if (have_order) fail(line, 0, "duplicate 'order' line");
      std::vector<Letter> precedence;
      for (auto [token, pos] : tokens(order->first)) {
        Word w = word_at(line, token, order->second + pos, p.alphabet);
        if (w.size() != 1) {
          fail(line, order->second + pos,
               "order entries must be single letters");
        }
        precedence.push_back(w.front());
      }
      try {
        p.alphabet.set_precedence(std::move(precedence));
      } catch (const Error& e) {
        fail(line, order->second, e.what());
      }
      have_order = true;
    } else if (auto rel = keyed(line, "relator")) {
      if (!have_generators) fail(line, 0, "'relator' before 'generators'");
      const std::string_view body = rel->first;
      const std::size_t eq = body.find('=');
      if (eq != std::string_view::npos && body.find('=', eq + 1) != std::string_view::npos) {
        fail(line, rel->second + body.find('=', eq + 1), "more than one '='");
      }
      std::size_t lead = 0;
      std::string_view lhs = trim_view(body.substr(0, eq), lead);
      if (lhs.empty()) fail(line, rel->second, "missing left-hand side");
      Relation r;
      r.lhs = word_at(line, lhs, rel->second + lead, p.alphabet);
      if (eq != std::string_view::npos) {
        std::string_view rhs = trim_view(body.substr(eq + 1), lead);
        if (rhs.empty()) fail(line, rel->second + eq + 1, "missing right-hand side");
        r.rhs = word_at(line, rhs, rel->second + eq + 1 + lead, p.alphabet);
      }
      p.relators.push_back(std::move(r));
    } else {
      fail(line, 0, "unrecognized line '" + std::string(line.text) + "'");
    }
  }
  if (!have_generators) {
    throw ParseError("missing 'generators' line", head.number, 1);
  }
  return p;
}

FamilySpec parse_family(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty family file", 1, 1);
  if (lines.front().text != "family") fail(lines.front(), 0, "expected 'family'");

  FamilySpec spec;
  Alphabet alphabet;
  bool have_ell = false;
  bool have_w = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (auto ell = keyed(line, "y-generators")) {
      if (have_ell) fail(line, 0, "duplicate 'y-generators' line");
      std::size_t value = 0;
      const auto* first = ell->first.data();
      const auto* last = first + ell->first.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || ell->first.empty()) {
        fail(line, ell->second, "expected a count");
      }
      spec.ell = value;
      alphabet = FamilySpec::alphabet_for(value);
      have_ell = true;
    } else if (auto w = keyed(line, "w")) {
      if (!have_ell) fail(line, 0, "'w' before 'y-generators'");
      if (have_w) fail(line, 0, "duplicate 'w' line");
      spec.w = word_at(line, w->first, w->second, alphabet);
      have_w = true;
    } else if (line.text.starts_with("relator")) {
      if (!have_ell) fail(line, 0, "'relator' before 'y-generators'");
      const std::size_t colon = line.text.find(':');
      if (colon == std::string_view::npos) fail(line, 0, "expected 'relator N:'");
      std::size_t lead = 0;
      std::string_view label = trim_view(line.text.substr(7, colon - 7), lead);
      std::size_t index = 0;
      auto [ptr, ec] =
          std::from_chars(label.data(), label.data() + label.size(), index);
      if (label.empty() || ec != std::errc() || ptr != label.data() + label.size()) {
        fail(line, 7 + lead, "expected a relator number");
      }
      if (index != spec.relators.size() + 1) {
        fail(line, 7 + lead,
             "expected relator " + std::to_string(spec.relators.size() + 1));
      }
      const std::string_view body = line.text.substr(colon + 1);
      const std::size_t base = colon + 1;
      const std::size_t semi = body.find(';');
      if (semi == std::string_view::npos) fail(line, base, "expected 'u = ... ; v = ...'");

      FamilyRelator rel;
      auto parse_row = [&](std::string_view part, std::size_t part_pos,
                           std::string_view key, std::vector<Word>& row) {
        std::size_t lead = 0;
        std::string_view trimmed = trim_view(part, lead);
        const std::size_t at = part_pos + lead;
        if (!trimmed.starts_with(key)) {
          fail(line, at, "expected '" + std::string(key) + " ='");
        }
        std::size_t pos = key.size();
        while (pos < trimmed.size() && is_space(trimmed[pos])) ++pos;
        if (pos >= trimmed.size() || trimmed[pos] != '=') {
          fail(line, at + pos, "expected '='");
        }
        ++pos;
        std::string_view list = trimmed.substr(pos);
        std::size_t start = 0;
        while (true) {
          std::size_t comma = list.find(',', start);
          std::string_view item =
              list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                 : comma - start);
          std::size_t item_lead = 0;
          std::string_view word = trim_view(item, item_lead);
          const std::size_t word_pos = at + pos + start + item_lead;
          if (word.empty()) fail(line, word_pos, "empty block (write 1)");
          row.push_back(word_at(line, word, word_pos, alphabet));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
      };
      parse_row(body.substr(0, semi), base, "u", rel.u);
      parse_row(body.substr(semi + 1), base + semi + 1, "v", rel.v);
      spec.relators.push_back(std::move(rel));
    } else {
      fail(line, 0, "unrecognized line '" + std::string(line.text) + "'");
    }
  }
  if (!have_ell) throw ParseError("missing 'y-generators' line", lines.front().number, 1);
  if (!have_w) throw ParseError("missing 'w' line", lines.front().number, 1);
  return spec;
}

ParsedInput parse_input_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  if (lines.front().text == "family") return parse_family(text);
  return parse_presentation(text);
}

ParsedInput parse_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str());
}

namespace {

std::string word_text(const Word& w, const Alphabet& a) {
  return to_string(w, a);
}

}  // namespace

std::string format_presentation(const Presentation& p) {
  std::string out(to_string(p.kind));
  out += "\ngenerators:";
  for (const auto& name : p.alphabet.names()) out += " " + name;
  out += "\norder:";
  for (Letter l : p.alphabet.precedence()) out += " " + to_string(l, p.alphabet);
  out += "\n";
  for (const auto& rel : p.relators) {
    out += "relator: " + word_text(rel.lhs, p.alphabet) + " = " +
           word_text(rel.rhs, p.alphabet) + "\n";
  }
  return out;
}

std::string format_family(const FamilySpec& spec) {
  const Alphabet a = spec.alphabet();
  std::string out = "family\ny-generators: " + std::to_string(spec.ell) +
                    "\nw: " + word_text(spec.w, a) + "\n";
  auto row = [&a](const std::vector<Word>& words) {
    std::string s;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (k > 0) s += ", ";
      s += word_text(words[k], a);
    }
    return s;
  };
  for (std::size_t i = 0; i < spec.relators.size(); ++i) {
    out += "relator " + std::to_string(i + 1) + ": u = " +
           row(spec.relators[i].u) + " ; v = " + row(spec.relators[i].v) + "\n";
  }
  return out;
}

std::string fingerprint(const Presentation& p) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : format_presentation(p)) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace foxdiv
