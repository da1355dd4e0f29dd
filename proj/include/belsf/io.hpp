#pragma once

// Line-oriented text formats.  Elements are decimal encodings; blank lines
// and lines starting with '#' are ignored when parsing.
//
//   gf p=<p> e=<e> n=<n>
//   semifield q=<q> n=<n>        + n lines of n comma-separated elements
//   gtf q=<q> n=<n> c=<c> a=<a> b=<b>
//   bel q=<q> n=<n> r=<r>        + r f-lines, then r g-lines
//   rank2 q=<q> n=<n>            + a-line, b-line
//   stab kind=<plain|swap> k=<k> m=<m> gamma=<g> delta=<d>
//   isotopism q=<q> n=<n>        + A-line, B-line, C-line
// where a linearized polynomial line reads [c0,c1,...,c_{n-1}].

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "belsf/bel.hpp"
#include "belsf/errors.hpp"
#include "belsf/gf.hpp"
#include "belsf/gtf.hpp"
#include "belsf/isotopy.hpp"
#include "belsf/linpoly.hpp"
#include "belsf/rank2.hpp"
#include "belsf/semifield.hpp"

namespace belsf::io {

struct Header {
  std::string kind;
  std::map<std::string, std::string> kv;

  const std::string& get(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("header '" + kind + "' is missing " + key + "=");
    return it->second;
  }
  std::uint64_t num(const std::string& key) const;
};

inline std::uint64_t parse_uint(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("malformed integer '" + std::string(s) + "'");
  return v;
}

inline std::uint64_t Header::num(const std::string& key) const { return parse_uint(get(key)); }

inline std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t s = 0;
    while (s < line.size() && line[s] == ' ') ++s;
    line = line.substr(s);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

inline Header parse_header(const std::string& line) {
  Header h;
  std::istringstream in(line);
  in >> h.kind;
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("malformed header token '" + tok + "'");
    h.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return h;
}

inline Elem parse_elem(const Field& F, std::string_view s) {
  const std::uint64_t v = parse_uint(s);
  if (v >= F.order()) throw ParseError("element encoding " + std::to_string(v) + " out of range for q^n = " + std::to_string(F.order()));
  return Elem{static_cast<std::uint32_t>(v)};
}

inline std::vector<Elem> parse_elem_list(const Field& F, std::string_view s) {
  std::vector<Elem> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_elem(F, s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---- formatting ----

inline std::string format_elem(Elem x) { return std::to_string(x.v); }

inline std::string format_linpoly(const LinPoly& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.c[i].v);
  }
  return s + "]";
}

inline LinPoly parse_linpoly(const Field& F, std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("linearized polynomial must read [c0,...,c_{n-1}]");
  LinPoly f{parse_elem_list(F, s.substr(1, s.size() - 2))};
  if (f.c.size() != F.n()) throw ParseError("linearized polynomial needs exactly n coefficients");
  return f;
}

inline std::string format_gf(const Field& F) {
  return "gf p=" + std::to_string(F.p()) + " e=" + std::to_string(F.e()) + " n=" + std::to_string(F.n());
}

inline std::string qn(const Field& F) { return "q=" + std::to_string(F.q()) + " n=" + std::to_string(F.n()); }

inline std::string format_cubical(const Field& F, const CubicalMult& C) {
  std::string s = "semifield " + qn(F) + "\n";
  for (unsigned i = 0; i < C.n; ++i) {
    for (unsigned j = 0; j < C.n; ++j) {
      if (j) s += ",";
      s += std::to_string(C.at(i, j).v);
    }
    s += "\n";
  }
  return s;
}

inline std::string format_gtf(const Field& F, const GtfParams& P) {
  return "gtf " + qn(F) + " c=" + std::to_string(P.c.v) + " a=" + std::to_string(P.a) + " b=" + std::to_string(P.b) + "\n";
}

inline std::string format_bel(const Field& F, const BelConfig& B) {
  std::string s = "bel " + qn(F) + " r=" + std::to_string(B.r) + "\n";
  for (const auto& f : B.f) s += format_linpoly(f) + "\n";
  for (const auto& g : B.g) s += format_linpoly(g) + "\n";
  return s;
}

inline std::string format_rank2(const Field& F, const Rank2Pair& P) {
  return "rank2 " + qn(F) + "\n" + format_linpoly(P.a) + "\n" + format_linpoly(P.b) + "\n";
}

inline std::string format_stab(const StabElement& s) {
  return std::string("stab kind=") + (s.swap ? "swap" : "plain") + " k=" + std::to_string(s.k.v) + " m=" + std::to_string(s.m.v) +
         " gamma=" + std::to_string(s.gamma) + " delta=" + std::to_string(s.delta) + "\n";
}

inline std::string format_isotopism(const Field& F, const Isotopism& T) {
  return "isotopism " + qn(F) + "\n" + format_linpoly(T.A) + "\n" + format_linpoly(T.B) + "\n" + format_linpoly(T.C) + "\n";
}

inline std::string format_elements(const Field& F, const std::vector<Elem>& xs) {
  std::string s = format_gf(F) + "\n";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i].v);
  return s + "\n";
}

// ---- parsing ----

/// First content line of a document.
inline Header document_header(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  return parse_header(lines[0]);
}

/// The field named by a q=/n= header, or by a gf p=/e=/n= header.
inline std::shared_ptr<const Field> field_from_header(const Header& h) {
  if (h.kind == "gf") {
    return std::make_shared<const Field>(static_cast<std::uint32_t>(h.num("p")), static_cast<unsigned>(h.num("e")),
                                         static_cast<unsigned>(h.num("n")));
  }
  return Field::make(h.num("q"), static_cast<unsigned>(h.num("n")));
}

/// Element stream after a gf header; separators are spaces, commas or newlines.
inline std::vector<Elem> parse_elements(const Field& F, const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty() || parse_header(lines[0]).kind != "gf") throw ParseError("expected a 'gf' header");
  std::vector<Elem> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string line = lines[i];
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(parse_elem(F, tok));
  }
  return out;
}

namespace detail {

inline std::vector<std::string> body(const Field& F, const std::string& text, const std::string& kind, std::size_t count,
                                     Header* header = nullptr) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  const Header h = parse_header(lines[0]);
  if (h.kind != kind) throw ParseError("expected a '" + kind + "' header, got '" + h.kind + "'");
  if (h.kind != "stab" && (h.num("q") != F.q() || h.num("n") != F.n())) throw ParseError("header field does not match the context");
  if (header) *header = h;
  if (lines.size() != count + 1) throw ParseError("'" + kind + "' expects " + std::to_string(count) + " body lines, found " + std::to_string(lines.size() - 1));
  return {lines.begin() + 1, lines.end()};
}

}  // namespace detail

inline CubicalMult parse_cubical(const Field& F, const std::string& text) {
  const auto rows = detail::body(F, text, "semifield", F.n());
  CubicalMult C = sf::zero(F);
  for (unsigned i = 0; i < F.n(); ++i) {
    const auto vals = parse_elem_list(F, rows[i]);
    if (vals.size() != F.n()) throw ParseError("semifield row " + std::to_string(i) + " needs n entries");
    for (unsigned j = 0; j < F.n(); ++j) C.at(i, j) = vals[j];
  }
  return C;
}

inline GtfParams parse_gtf(const Field& F, const std::string& text) {
  Header h;
  detail::body(F, text, "gtf", 0, &h);
  const auto a = h.num("a"), b = h.num("b");
  if (a >= F.n() || b >= F.n()) throw ParseError("gtf exponents must lie in [0, n)");
  return GtfParams{parse_elem(F, h.get("c")), static_cast<unsigned>(a), static_cast<unsigned>(b)};
}

inline BelConfig parse_bel(const Field& F, const std::string& text) {
  const Header h = document_header(text);
  const auto r = static_cast<unsigned>(h.num("r"));
  const auto rows = detail::body(F, text, "bel", 2 * std::size_t{r});
  BelConfig B;
  B.r = r;
  for (unsigned i = 0; i < r; ++i) B.f.push_back(parse_linpoly(F, rows[i]));
  for (unsigned i = 0; i < r; ++i) B.g.push_back(parse_linpoly(F, rows[r + i]));
  return B;
}

inline Rank2Pair parse_rank2(const Field& F, const std::string& text) {
  const auto rows = detail::body(F, text, "rank2", 2);
  return {parse_linpoly(F, rows[0]), parse_linpoly(F, rows[1])};
}

inline StabElement parse_stab(const Field& F, const std::string& text) {
  Header h;
  detail::body(F, text, "stab", 0, &h);
  StabElement s;
  const auto& kind = h.get("kind");
  if (kind != "plain" && kind != "swap") throw ParseError("stab kind must be plain or swap");
  s.swap = kind == "swap";
  s.k = parse_elem(F, h.get("k"));
  s.m = parse_elem(F, h.get("m"));
  s.gamma = F.aut(static_cast<long long>(h.num("gamma"))).k;
  s.delta = F.aut(static_cast<long long>(h.num("delta"))).k;
  return s;
}

inline Isotopism parse_isotopism(const Field& F, const std::string& text) {
  const auto rows = detail::body(F, text, "isotopism", 3);
  return {parse_linpoly(F, rows[0]), parse_linpoly(F, rows[1]), parse_linpoly(F, rows[2])};
}

}  // namespace belsf::io
