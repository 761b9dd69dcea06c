#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bunpic/root_datum.hpp"

namespace bunpic {

class ParseError : public InvalidSpec {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct FactorSpec {
  std::string name;
  std::optional<int> param;
  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

// SPEC := FACTOR ("*" FACTOR)*, FACTOR := NAME "(" INT ")" | EXC.
struct GroupSpec {
  std::string source;
  std::vector<FactorSpec> factors;

  std::string to_string() const;
  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors == b.factors; }
};

GroupSpec parse_group_spec(const std::string& s);
ReductiveGroupData build_group(const GroupSpec& spec);
ReductiveGroupData build_group(const std::string& s);

}  // namespace bunpic
