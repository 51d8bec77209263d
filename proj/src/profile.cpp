#include "cif/profile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cif/error.hpp"

namespace cif {

void Profile::validate() const {
  if (n < 1 || n > kMaxGroundSet) {
    throw CapExceeded("n=" + std::to_string(n) + " outside [1, " + std::to_string(kMaxGroundSet) + "]");
  }
  if (ks.size() < 2) throw std::invalid_argument("a profile needs r >= 2 uniformities");
  for (int k : ks) {
    if (k < 1 || k > n) throw std::invalid_argument("uniformity " + std::to_string(k) + " outside [1, n]");
  }
  if (istar && *istar >= ks.size()) throw std::invalid_argument("istar outside [1, r]");
}

bool Profile::descending() const { return std::is_sorted(ks.begin(), ks.end(), std::greater<>()); }

std::optional<std::string> Profile::ordered_hypothesis_failure() const {
  if (ks.size() < 2) return "r >= 2";
  if (!descending()) return "k_1 >= k_2 >= ... >= k_r";
  if (n < ks[0] + ks[1]) {
    return "n >= k_1 + k_2 (" + std::to_string(n) + " < " + std::to_string(ks[0] + ks[1]) + ")";
  }
  return std::nullopt;
}

std::optional<std::string> Profile::conditional_hypothesis_failure(std::size_t is) const {
  if (ks.size() < 2) return "r >= 2";
  if (is >= ks.size()) return "istar in [1, r]";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i == is) continue;
    if (n < ks[i] + ks[is]) {
      return "n >= k_" + std::to_string(i + 1) + " + k_istar (" + std::to_string(n) + " < " +
             std::to_string(ks[i] + ks[is]) + ")";
    }
  }
  return std::nullopt;
}

int Profile::kbar(std::size_t is) const {
  int best = -1;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i != is && (best < 0 || ks[i] < best)) best = ks[i];
  }
  return best;
}

std::string Profile::text() const {
  std::string out = "n=" + std::to_string(n) + " k=" + k_list_text(ks);
  if (istar) out += " istar=" + std::to_string(*istar + 1);
  return out;
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("invalid uniformity list: " + text);
    }
    if (pos != item.size()) throw ParseError("invalid uniformity list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty uniformity list");
  return out;
}

std::string k_list_text(const std::vector<int>& ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ks[i]);
  }
  return out;
}

}  // namespace cif
