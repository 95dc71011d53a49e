#pragma once

#include <string>
#include <vector>

#include "pcard.hpp"

namespace testing_support {

inline pcard::Str bin(const std::string& s) { return pcard::Str(pcard::Alphabet(2), s); }
inline pcard::Str ter(const std::string& s) { return pcard::Str(pcard::Alphabet(3), s); }

inline std::vector<std::string> symbols(const std::vector<pcard::Str>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.symbols());
  return out;
}

}  // namespace testing_support
