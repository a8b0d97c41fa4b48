#include "multlab/ringspec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "multlab/errors.hpp"

namespace multlab {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

long long parse_int(const Token& t, std::size_t line, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw RingSpecError(std::string("expected an integer ") + what, line, t.column);
  return v;
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  RingSpec spec;
  bool seen_field = false, seen_vars = false, seen_cap = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    auto toks = split(line);
    if (toks.empty()) continue;
    const Token& key = toks[0];
    if (key.text == "field") {
      if (seen_field) throw RingSpecError("duplicate 'field' line", line_no, key.column);
      if (seen_vars) throw RingSpecError("'field' must precede 'vars'", line_no, key.column);
      if (toks.size() != 2) throw RingSpecError("'field' takes one prime", line_no, key.column);
      long long p = parse_int(toks[1], line_no, "for the field size");
      if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw RingSpecError("field size must be a prime below 2^31", line_no, toks[1].column);
      spec.p = static_cast<std::uint32_t>(p);
      seen_field = true;
    } else if (key.text == "vars") {
      if (seen_vars) throw RingSpecError("duplicate 'vars' line", line_no, key.column);
      if (toks.size() < 2) throw RingSpecError("'vars' needs at least one name", line_no, key.column);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!valid_name(toks[i].text)) throw RingSpecError("invalid variable name", line_no, toks[i].column);
        for (const auto& v : spec.vars)
          if (v == toks[i].text) throw RingSpecError("duplicate variable", line_no, toks[i].column);
        spec.vars.emplace_back(toks[i].text);
      }
      seen_vars = true;
    } else if (key.text == "rel") {
      if (!seen_vars) throw RingSpecError("'rel' before 'vars'", line_no, key.column);
      if (toks.size() < 2) throw RingSpecError("'rel' needs a polynomial", line_no, key.column);
      const std::size_t start = toks[1].column - 1;
      std::string_view body = line.substr(start);
      while (!body.empty() && is_space(body.back())) body.remove_suffix(1);
      try {
        Polynomial f = parse_polynomial(body, spec.vars, PrimeField(spec.p));
        if (!f.is_zero() && f.min_degree() < 2)
          throw RingSpecError("relation has a constant or linear term", line_no, toks[1].column);
      } catch (const ParseError& e) {
        throw RingSpecError(e.what(), line_no, start + 1 + e.offset());
      }
      spec.relations.emplace_back(body);
    } else if (key.text == "cap") {
      if (seen_cap) throw RingSpecError("duplicate 'cap' line", line_no, key.column);
      if (toks.size() != 2) throw RingSpecError("'cap' takes one integer", line_no, key.column);
      long long c = parse_int(toks[1], line_no, "for the degree cap");
      if (c < 1 || c > 64) throw RingSpecError("cap must lie in 1..64", line_no, toks[1].column);
      spec.cap = static_cast<int>(c);
      seen_cap = true;
    } else {
      throw RingSpecError("unknown key '" + std::string(key.text) + "'", line_no, key.column);
    }
  }
  if (!seen_vars) throw RingSpecError("missing 'vars' line", line_no, 1);
  return spec;
}

RingSpec load_ring_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ring file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ring_spec(ss.str());
}

RingPresentation RingSpec::presentation() const { return make_presentation(p, vars, relations); }

FiniteLocalAlgebra RingSpec::build() const { return build_finite_algebra(presentation(), cap); }

std::string RingSpec::to_text() const {
  std::string out = "field " + std::to_string(p) + "\nvars";
  for (const auto& v : vars) out += " " + v;
  out += "\n";
  for (const auto& r : relations) out += "rel " + r + "\n";
  if (cap != kDefaultDegreeCap) out += "cap " + std::to_string(cap) + "\n";
  return out;
}

}  // namespace multlab
