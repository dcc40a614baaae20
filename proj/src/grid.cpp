#include "cnz/grid.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cnz/error.hpp"

namespace cnz {

GridSpec::GridSpec(RingSpec ring, std::vector<std::vector<Int>> sets) : ring_(ring) {
  sets_.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) {
      throw Error(ErrorCode::kInvalidArgument, "S_" + std::to_string(i + 1) + " is empty");
    }
    std::vector<Int> canon;
    std::set<Int> seen;
    for (const auto& x : sets[i]) {
      Int c = ring.canonical(x);
      if (!seen.insert(c).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "S_" + std::to_string(i + 1) + " repeats element " + c.str());
      }
      canon.push_back(std::move(c));
    }
    sets_.push_back(std::move(canon));
  }
}

GridSpec GridSpec::uniform(RingSpec ring, std::size_t arity, std::vector<Int> set) {
  return GridSpec(ring, std::vector<std::vector<Int>>(arity, set));
}

GridSpec GridSpec::parse(std::string_view text, RingSpec ring) {
  std::vector<std::vector<Int>> sets;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<Int> set;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      auto b = field.find_first_not_of(" \t\r");
      auto e = field.find_last_not_of(" \t\r");
      if (b == std::string::npos) {
        throw Error(ErrorCode::kInvalidArgument, "empty grid element in line '" + line + "'");
      }
      std::string token = field.substr(b, e - b + 1);
      bool ok = !token.empty();
      for (std::size_t k = 0; k < token.size(); ++k) {
        char c = token[k];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (k == 0 && (c == '-' || c == '+')))) {
          ok = false;
        }
      }
      if (!ok || token == "-" || token == "+") {
        throw Error(ErrorCode::kInvalidArgument, "bad grid element '" + token + "'");
      }
      if (token[0] == '+') token.erase(0, 1);
      set.emplace_back(token);
    }
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw Error(ErrorCode::kInvalidArgument, "grid has no variables");
  return GridSpec(ring, std::move(sets));
}

std::vector<std::uint64_t> GridSpec::sizes() const {
  std::vector<std::uint64_t> out;
  out.reserve(sets_.size());
  for (const auto& s : sets_) out.push_back(s.size());
  return out;
}

Int GridSpec::point_count() const {
  Int count = 1;
  for (const auto& s : sets_) count *= s.size();
  return count;
}

void GridSpec::decode(std::uint64_t index, std::span<std::size_t> digits) const {
  for (std::size_t i = sets_.size(); i-- > 0;) {
    digits[i] = index % sets_[i].size();
    index /= sets_[i].size();
  }
}

std::vector<Int> GridSpec::point(std::uint64_t index) const {
  std::vector<std::size_t> digits(sets_.size());
  decode(index, digits);
  std::vector<Int> out;
  out.reserve(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) out.push_back(sets_[i][digits[i]]);
  return out;
}

std::string GridSpec::to_string() const {
  std::ostringstream out;
  for (const auto& s : sets_) {
    for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << s[k];
    out << '\n';
  }
  return out.str();
}

}  // namespace cnz
