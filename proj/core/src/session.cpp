#include "golod/session.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "golod/parse.hpp"

namespace golod {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct Piece {
  std::string_view text;
  std::size_t column;  // 1-based column of the first character
};

Piece trim(std::string_view s, std::size_t column) {
  std::size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  return {s.substr(a, b - a), column + a};
}

/// Top-level comma split; parentheses nest.
std::vector<Piece> split_commas(std::string_view s, std::size_t column) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(trim(s.substr(start, i - start), column + start));
      start = i + 1;
    }
  }
  return out;
}

/// Splits off the first whitespace-delimited word.
std::pair<Piece, Piece> first_word(Piece p) {
  std::size_t i = 0;
  while (i < p.text.size() && !is_space(p.text[i])) ++i;
  Piece head{p.text.substr(0, i), p.column};
  return {head, trim(p.text.substr(i), p.column + i)};
}

class SessionParser {
 public:
  SessionParser(std::string_view text, std::filesystem::path base) : text_(text), base_(std::move(base)) {}

  Session run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos, end - pos);
      ++line_no;
      line_ = line_no;
      std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      Piece body = trim(line, 1);
      if (!body.text.empty()) statement(body);
      pos = end + 1;
    }
    if (!session_.ring) throw ParseError("missing ring declaration", line_no, 1);
    return std::move(session_);
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t column) const {
    throw ParseError(what, line_, column);
  }

  void statement(Piece body) {
    auto [kw, rest] = first_word(body);
    if (kw.text == "ring") ring(rest);
    else if (kw.text == "ideal") ideal(rest);
    else if (kw.text == "graph") graph(rest);
    else fail("unknown statement '" + std::string(kw.text) + "'", kw.column);
  }

  void ring(Piece rest) {
    if (session_.ring) fail("a session declares exactly one ring", rest.column);
    std::string_view vars_text = rest.text;
    Piece weights_piece{{}, 0};
    std::size_t w = find_keyword(rest.text, "weights");
    if (w != std::string_view::npos) {
      vars_text = rest.text.substr(0, w);
      weights_piece = trim(rest.text.substr(w + 7), rest.column + w + 7);
    }
    std::vector<std::string> names;
    for (const Piece& v : split_commas(vars_text, rest.column)) {
      if (!is_identifier(v.text)) fail("invalid variable name '" + std::string(v.text) + "'", v.column);
      for (const auto& n : names)
        if (n == v.text) fail("duplicate variable '" + n + "'", v.column);
      names.emplace_back(v.text);
    }
    std::vector<int> weights(names.size(), 1);
    if (w != std::string_view::npos) {
      auto ws = split_commas(weights_piece.text, weights_piece.column);
      if (ws.size() != names.size())
        fail("expected " + std::to_string(names.size()) + " weights, got " + std::to_string(ws.size()),
             weights_piece.column);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        long value = 0;
        try {
          std::size_t used = 0;
          value = std::stol(std::string(ws[i].text), &used);
          if (used != ws[i].text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          fail("invalid weight '" + std::string(ws[i].text) + "'", ws[i].column);
        }
        if (value <= 0) fail("weights must be positive, got " + std::to_string(value), ws[i].column);
        if (value > 1000) fail("weight too large", ws[i].column);
        weights[i] = static_cast<int>(value);
      }
    }
    try {
      session_.ring = Ring::make(std::move(names), std::move(weights));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), rest.column);
    }
  }

  /// Position of a standalone keyword, or npos.
  static std::size_t find_keyword(std::string_view s, std::string_view kw) {
    for (std::size_t at = s.find(kw); at != std::string_view::npos; at = s.find(kw, at + 1)) {
      bool left = at == 0 || is_space(s[at - 1]);
      bool right = at + kw.size() == s.size() || is_space(s[at + kw.size()]);
      if (left && right) return at;
    }
    return std::string_view::npos;
  }

  std::pair<std::string, Piece> named(Piece rest) {
    std::size_t eq = rest.text.find('=');
    if (eq == std::string_view::npos) fail("expected '<name> = ...'", rest.column);
    Piece name = trim(rest.text.substr(0, eq), rest.column);
    if (!is_identifier(name.text)) fail("invalid name '" + std::string(name.text) + "'", name.column);
    std::string n(name.text);
    for (const auto& [other, _] : session_.ideals)
      if (other == n) fail("duplicate name '" + n + "'", name.column);
    for (const auto& [other, _] : session_.graphs)
      if (other == n) fail("duplicate name '" + n + "'", name.column);
    return {n, trim(rest.text.substr(eq + 1), rest.column + eq + 1)};
  }

  void ideal(Piece rest) {
    if (!session_.ring) fail("ideal declared before the ring", rest.column);
    auto [name, value] = named(rest);
    std::vector<Polynomial> gens;
    if (value.text.empty()) fail("ideal needs at least one generator (use 0 for the zero ideal)", value.column);
    for (const Piece& g : split_commas(value.text, value.column)) {
      if (g.text.empty()) fail("empty generator", g.column);
      Polynomial p(session_.ring);
      try {
        p = parse_polynomial(session_.ring, g.text);
      } catch (const ParseError& e) {
        fail(e.message(), g.column + (e.column() > 0 ? e.column() - 1 : 0));
      }
      check_homogeneous(p, g);
      gens.push_back(std::move(p));
    }
    session_.ideals.emplace_back(name, Ideal(session_.ring, std::move(gens)));
  }

  void check_homogeneous(const Polynomial& p, const Piece& g) const {
    if (p.is_homogeneous()) return;
    const Degree expected = p.degree();
    for (const Term& t : p.terms()) {
      Degree d = session_.ring->degree(t.mono);
      if (d == expected) continue;
      Polynomial term = Polynomial::monomial(session_.ring, t.mono, t.coeff);
      fail("generator '" + std::string(g.text) + "' is not homogeneous: term " + term.to_string() +
               " has degree " + std::to_string(d) + ", leading term has degree " + std::to_string(expected),
           g.column);
    }
  }

  void graph(Piece rest) {
    auto [name, value] = named(rest);
    auto [kind, arg] = first_word(value);
    try {
      if (kind.text == "file") {
        if (arg.text.empty()) fail("graph file path missing", arg.column);
        std::filesystem::path path(std::string(arg.text));
        if (path.is_relative() && !base_.empty()) path = base_ / path;
        try {
          session_.graphs.emplace_back(name, Graph::parse(read_text_file(path)));
        } catch (const ParseError& e) {
          // Errors inside a graph file keep their own position.
          fail("in graph file " + path.string() + ": " + e.what(), arg.column);
        }
        return;
      }
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(std::string(arg.text), &used);
        if (used != arg.text.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail("expected a vertex count, got '" + std::string(arg.text) + "'", arg.column);
      }
      if (kind.text == "cycle") session_.graphs.emplace_back(name, Graph::cycle(n));
      else if (kind.text == "path") session_.graphs.emplace_back(name, Graph::path(n));
      else if (kind.text == "complete") session_.graphs.emplace_back(name, Graph::complete(n));
      else fail("unknown graph kind '" + std::string(kind.text) + "' (cycle, path, complete, file)", kind.column);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), value.column);
    }
  }

  std::string_view text_;
  std::filesystem::path base_;
  std::size_t line_ = 0;
  Session session_;
};

}  // namespace

bool Session::has_ideal(std::string_view name) const {
  for (const auto& [n, _] : ideals)
    if (n == name) return true;
  return false;
}

const Ideal& Session::ideal(std::string_view name) const {
  for (const auto& [n, I] : ideals)
    if (n == name) return I;
  throw DomainError("unknown ideal '" + std::string(name) + "'");
}

const Graph& Session::graph(std::string_view name) const {
  for (const auto& [n, G] : graphs)
    if (n == name) return G;
  throw DomainError("unknown graph '" + std::string(name) + "'");
}

Session parse_session(std::string_view text, const std::filesystem::path& base_dir) {
  return SessionParser(text, base_dir).run();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Session load_session(const std::filesystem::path& path) {
  return parse_session(read_text_file(path), path.parent_path());
}

}  // namespace golod
