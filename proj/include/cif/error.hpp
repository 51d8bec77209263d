#ifndef CIF_ERROR_HPP
#define CIF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cif {

/// A theorem or lemma was invoked outside its hypothesis. The message names
/// the failed inequality.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit (ground set, canonicalization, search) was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input (family literals, config files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hard caps. Exceeding any of them raises CapExceeded.
inline constexpr int kMaxGroundSet = 24;
inline constexpr int kMaxCanonicalN = 10;
inline constexpr int kMaxSearchN = 20;

}  // namespace cif

#endif  // CIF_ERROR_HPP
