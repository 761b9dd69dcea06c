#include "bunpic/group_spec.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace bunpic {

namespace {

constexpr std::array<const char*, 9> kParametric = {"SL", "GL", "PGL", "Sp", "PSp", "Spin", "SO", "PSO", "T"};
constexpr std::array<const char*, 7> kExceptional = {"E6sc", "E6ad", "E7sc", "E7ad", "E8", "F4", "G2"};

bool one_of(const std::string& s, const auto& list) {
  return std::any_of(list.begin(), list.end(), [&](const char* x) { return s == x; });
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  GroupSpec parse() {
    GroupSpec spec;
    spec.source = s_;
    spec.factors.push_back(factor());
    skip();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      spec.factors.push_back(factor());
      skip();
    }
    if (pos_ != s_.size()) throw ParseError(pos_, "expected '*' or end of input");
    return spec;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  FactorSpec factor() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) throw ParseError(start, "expected a group name");
    if (one_of(name, kExceptional)) return {name, std::nullopt};
    if (!one_of(name, kParametric)) throw ParseError(start, "unknown group name '" + name + "'");
    skip();
    expect('(');
    skip();
    std::size_t num_start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (num_start == pos_) throw ParseError(num_start, "expected an integer");
    if (pos_ - num_start > 6) throw ParseError(num_start, "integer too large");
    int n = std::stoi(s_.substr(num_start, pos_ - num_start));
    skip();
    expect(')');
    check_rank(name, n, num_start);
    return {name, n};
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  static void check_rank(const std::string& name, int n, std::size_t at) {
    auto fail = [&](const std::string& rule) { throw ParseError(at, name + "(" + std::to_string(n) + "): " + rule); };
    if (name == "SL" && n < 2) fail("SL requires n >= 2");
    if (name == "PGL" && n < 2) fail("PGL requires n >= 2");
    if (name == "GL" && n < 1) fail("GL requires n >= 1");
    if (name == "T" && n < 1) fail("T requires rank >= 1");
    if ((name == "Sp" || name == "PSp") && (n < 2 || n % 2)) fail("requires an even n >= 2");
    if (name == "Spin" || name == "SO" || name == "PSO") {
      if (n < 3) fail("requires n >= 3");
      if (n % 2 == 0 && n < 6) fail("even orthogonal groups require n >= 6");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

SimpleType orthogonal_type(int n) {
  if (n % 2) return {n == 3 ? Family::A : Family::B, (n - 1) / 2};
  return {Family::D, n / 2};
}

ReductiveGroupData build_factor(const FactorSpec& f) {
  const std::string& nm = f.name;
  if (nm == "E6sc") return simply_connected_group({Family::E, 6});
  if (nm == "E6ad") return adjoint_group({Family::E, 6});
  if (nm == "E7sc") return simply_connected_group({Family::E, 7});
  if (nm == "E7ad") return adjoint_group({Family::E, 7});
  if (nm == "E8") return simply_connected_group({Family::E, 8});
  if (nm == "F4") return simply_connected_group({Family::F, 4});
  if (nm == "G2") return simply_connected_group({Family::G, 2});
  const int n = *f.param;
  ReductiveGroupData g;
  if (nm == "SL") g = simply_connected_group({Family::A, n - 1});
  else if (nm == "GL") g = gl_group(n);
  else if (nm == "PGL") g = adjoint_group({Family::A, n - 1});
  else if (nm == "Sp") g = sp_group(n / 2);
  else if (nm == "PSp") g = adjoint_group({n == 2 ? Family::A : Family::C, n / 2});
  else if (nm == "Spin") g = simply_connected_group(orthogonal_type(n));
  else if (nm == "SO") g = n % 2 ? so_odd_group((n - 1) / 2) : so_even_group(n / 2);
  else if (nm == "PSO") g = adjoint_group(orthogonal_type(n));
  else if (nm == "T") g = torus_group(n);
  else throw InvalidSpec("unknown group " + nm);
  return g;
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : InvalidSpec("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}

std::string GroupSpec::to_string() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "*";
    s += f.name;
    if (f.param) s += "(" + std::to_string(*f.param) + ")";
  }
  return s;
}

GroupSpec parse_group_spec(const std::string& s) { return Parser(s).parse(); }

ReductiveGroupData build_group(const GroupSpec& spec) {
  std::vector<ReductiveGroupData> parts;
  for (const auto& f : spec.factors) {
    ReductiveGroupData g = build_factor(f);
    g.label = FactorSpec(f).name + (f.param ? "(" + std::to_string(*f.param) + ")" : "");
    parts.push_back(std::move(g));
  }
  ReductiveGroupData g = product(parts);
  g.label = spec.to_string();
  validate_root_datum(g);
  return g;
}

ReductiveGroupData build_group(const std::string& s) { return build_group(parse_group_spec(s)); }

}  // namespace bunpic
