#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canmap::pipeline {

// Missing or corrupted data, bad options: exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One `name:=value;` assignment from a data listing.
struct Statement {
  enum class Kind { Expression, List, PointSet };

  std::string name;
  Kind kind = Kind::Expression;
  std::string expression;                          // Kind::Expression
  std::vector<std::string> items;                  // Kind::List
  std::vector<std::vector<std::string>> points;    // Kind::PointSet, one coordinate list per point
};

// Parses listings such as
//   h:=-x-y-z-w-t;
//   tropes:=[x + y + w, x + z + w];
//   Da:={P![3,3,-2,-2,3],P![4,-r+1,r-5,-r+1,4]};
std::vector<Statement> parse_statements(std::string_view text);

// Splits at commas outside parentheses and brackets; trims each piece.
std::vector<std::string> split_top_level(std::string_view text);

std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex(std::uint64_t v);

}  // namespace canmap::pipeline
