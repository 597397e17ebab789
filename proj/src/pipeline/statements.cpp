#include "canmap/pipeline/statements.hpp"

#include <cctype>
#include <cstdio>

namespace canmap::pipeline {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string_view strip_brackets(std::string_view s, char open, char close, const std::string& name) {
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ConfigError("statement '" + name + "': malformed bracketed value");
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) throw ConfigError("unbalanced brackets in data listing");
    if (c == ',' && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ConfigError("unbalanced brackets in data listing");
  std::string last = trim(text.substr(start));
  if (!last.empty() || !out.empty()) out.push_back(std::move(last));
  for (const auto& piece : out) {
    if (piece.empty()) throw ConfigError("empty item in data listing");
  }
  return out;
}

std::vector<Statement> parse_statements(std::string_view text) {
  std::vector<Statement> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t semi = text.find(';', pos);
    const std::string chunk = trim(text.substr(pos, semi == std::string_view::npos ? text.npos : semi - pos));
    if (semi == std::string_view::npos) {
      if (!chunk.empty()) throw ConfigError("data listing: statement without terminating ';'");
      break;
    }
    pos = semi + 1;
    if (chunk.empty()) continue;
    const std::size_t assign = chunk.find(":=");
    if (assign == std::string::npos) throw ConfigError("data listing: expected 'name:=value;' near '" + chunk + "'");
    Statement st;
    st.name = trim(std::string_view(chunk).substr(0, assign));
    const std::string value = trim(std::string_view(chunk).substr(assign + 2));
    if (st.name.empty() || value.empty()) throw ConfigError("data listing: empty name or value");
    for (char c : st.name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ConfigError("data listing: bad name '" + st.name + "'");
      }
    }
    if (value.front() == '{') {
      st.kind = Statement::Kind::PointSet;
      for (const auto& item : split_top_level(strip_brackets(value, '{', '}', st.name))) {
        if (item.rfind("P!", 0) != 0) throw ConfigError("statement '" + st.name + "': expected P![...] points");
        st.points.push_back(split_top_level(strip_brackets(trim(item.substr(2)), '[', ']', st.name)));
      }
    } else if (value.front() == '[') {
      st.kind = Statement::Kind::List;
      st.items = split_top_level(strip_brackets(value, '[', ']', st.name));
    } else {
      st.expression = value;
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace canmap::pipeline
