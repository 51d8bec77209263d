#include "cif/family.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "cif/bigcount.hpp"
#include "cif/error.hpp"

namespace cif {

Family::Family(int n, int k, std::vector<Mask> members) : n_(n), k_(k) {
  validate_kset(KSet{0, n});
  if (k < 0 || k > n) throw std::invalid_argument("uniformity outside [0, n]");
  for (Mask m : members) {
    validate_kset(KSet{m, n});
    if (popcount(m) != k) {
      throw std::invalid_argument("member " + set_text(m) + " does not have size " +
                                  std::to_string(k));
    }
  }
  std::sort(members.begin(), members.end(), lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool Family::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m, lex_less);
}

Family lex_initial(int n, int k, std::uint64_t m) {
  validate_kset(KSet{0, n});
  if (k < 0 || k > n) throw std::invalid_argument("uniformity outside [0, n]");
  if (m > binom(n, k).to_u64()) throw std::out_of_range("prefix length exceeds C(n,k)");
  std::vector<Mask> out;
  out.reserve(m);
  Mask cur = prefix_mask(k);
  for (std::uint64_t i = 0; i < m; ++i) {
    out.push_back(cur);
    next_kset(n, cur);
  }
  return Family(Family::Trusted{}, n, k, std::move(out));
}

bool is_L_initial(const Family& f) {
  return f == lex_initial(f.n(), f.k(), f.size());
}

bool is_cross_intersecting(const Family& a, const Family& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ground-set mismatch");
  for (Mask x : a.members()) {
    for (Mask y : b.members()) {
      if (!meets(x, y)) return false;
    }
  }
  return true;
}

bool is_intersecting(const Family& a) {
  auto ms = a.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!meets(ms[i], ms[j])) return false;
    }
  }
  return true;
}

Family complement_family(const Family& a) {
  const Mask full = ground_mask(a.n());
  std::vector<Mask> out;
  out.reserve(a.size());
  for (Mask m : a.members()) out.push_back(full & ~m);
  return Family(a.n(), a.n() - a.k(), std::move(out));
}

std::string to_text(const Family& f) {
  std::string out = "n=" + std::to_string(f.n()) + " k=" + std::to_string(f.k()) + " {";
  bool first = true;
  for (Mask m : f.members()) {
    if (!first) out += ", ";
    out += set_text(m);
    first = false;
  }
  out += "}";
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(std::string_view lit) {
    skip_ws();
    if (s_.substr(i_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    i_ += lit.size();
  }
  int integer() {
    skip_ws();
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected integer");
    i_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("family literal, offset " + std::to_string(i_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Family parse_family(std::string_view text) {
  Cursor c(text);
  c.expect("n=");
  const int n = c.integer();
  c.expect("k=");
  const int k = c.integer();
  if (n < 1 || n > kMaxGroundSet) c.fail("n outside [1, 24]");
  if (k < 0 || k > n) c.fail("k outside [0, n]");
  c.expect("{");
  std::vector<Mask> members;
  if (!c.eat('}')) {
    do {
      std::vector<int> el{c.integer()};
      while (c.eat('.')) el.push_back(c.integer());
      for (int e : el) {
        if (e < 1 || e > n) c.fail("element " + std::to_string(e) + " outside [1, n]");
      }
      Mask m = mask_of(n, el);
      if (popcount(m) != k || static_cast<int>(el.size()) != k) {
        c.fail("member " + set_text(m) + " is not a " + std::to_string(k) + "-set");
      }
      members.push_back(m);
    } while (c.eat(','));
    if (!c.eat('}')) c.fail("expected '}'");
  }
  if (!c.done()) c.fail("trailing characters");
  return Family(n, k, std::move(members));
}

}  // namespace cif
