#pragma once

#include <pbundle/integer.hpp>

#include <vector>

namespace oracle {

inline pbundle::Integer big(long long x) { return pbundle::Integer(static_cast<long>(x)); }

inline std::vector<pbundle::Integer> big(const std::vector<long long>& xs) {
  std::vector<pbundle::Integer> out;
  for (long long x : xs) out.push_back(big(x));
  return out;
}

}  // namespace oracle
