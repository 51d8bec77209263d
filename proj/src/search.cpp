#include "cif/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cif/bounds.hpp"
#include "cif/error.hpp"
#include "cif/frontier.hpp"

namespace cif {

namespace {

bool last_member_validated() {
  static std::once_flag once;
  static bool ok = false;
  std::call_once(once, [] { ok = last_member_rule_agrees(12); });
  return ok;
}

class PrefixEngine {
 public:
  PrefixEngine(const Profile& p, const SearchOptions& opts) : r_(p.r()), m_(p.r()) {
    const bool fast = opts.use_last_member && p.n <= 12 && last_member_validated();
    tables_.assign(r_ * r_, nullptr);
    for (std::size_t i = 0; i < r_; ++i) {
      total_.push_back(binom(p.n, p.ks[i]).to_u64());
      lo_.push_back(opts.min_sizes.empty() ? 1 : opts.min_sizes[i]);
      for (std::size_t j = 0; j < r_; ++j) {
        if (i == j) continue;
        const auto key = std::make_pair(p.ks[i], p.ks[j]);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
          it = cache_.emplace(key, fast ? frontier_table_last_member(p.n, key.first, key.second)
                                       : frontier_table(p.n, key.first, key.second)).first;
        }
        tables_[i * r_ + j] = &it->second.f;
      }
    }
    order_.resize(r_);
    for (std::size_t i = 0; i < r_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return total_[a] > total_[b]; });
  }

  void run() { dfs(0, 0, total_); }

  bool found = false;
  std::uint64_t best = 0;
  std::vector<std::vector<std::uint64_t>> vecs;

 private:
  void dfs(std::size_t pos, std::uint64_t partial, const std::vector<std::uint64_t>& ub) {
    const std::size_t c = order_[pos];
    if (ub[c] < lo_[c]) return;
    if (pos + 1 == r_) {
      m_[c] = ub[c];
      record(partial + ub[c]);
      return;
    }
    std::vector<std::uint64_t> next(ub);
    for (std::uint64_t v = ub[c]; v >= lo_[c]; --v) {
      std::uint64_t bound = partial + v;
      bool feasible = true;
      for (std::size_t q = pos + 1; q < r_; ++q) {
        const std::size_t d = order_[q];
        next[d] = std::min(ub[d], (*tables_[c * r_ + d])[v]);
        if (next[d] < lo_[d]) {
          feasible = false;
          break;
        }
        bound += next[d];
      }
      if (feasible && (!found || bound >= best)) {
        m_[c] = v;
        dfs(pos + 1, partial + v, next);
      }
      if (v == 0) break;
    }
  }

  void record(std::uint64_t total) {
    if (!found || total > best) {
      found = true;
      best = total;
      vecs.clear();
    }
    if (total == best) vecs.push_back(m_);
  }

  std::size_t r_;
  std::map<std::pair<int, int>, FrontierTable> cache_;
  std::vector<std::uint64_t> total_;
  std::vector<std::uint64_t> lo_;
  std::vector<const std::vector<std::uint64_t>*> tables_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> m_;
};

void check_caps(const Profile& p) {
  p.validate();
  if (p.n > kMaxSearchN) {
    throw CapExceeded("prefix search: n=" + std::to_string(p.n) + " exceeds " + std::to_string(kMaxSearchN));
  }
}

std::vector<Family> prefix_tuple(const Profile& p, const std::vector<std::uint64_t>& sizes) {
  std::vector<Family> out;
  out.reserve(p.r());
  for (std::size_t i = 0; i < p.r(); ++i) out.push_back(lex_initial(p.n, p.ks[i], sizes[i]));
  return out;
}

}  // namespace

Certificate max_sum_L_initial(const Profile& p, const SearchOptions& opts) {
  check_caps(p);
  if (!opts.min_sizes.empty() && opts.min_sizes.size() != p.r()) {
    throw std::invalid_argument("min_sizes must have one entry per family");
  }
  PrefixEngine engine(p, opts);
  engine.run();
  if (!engine.found) throw HypothesisError("hypothesis violated: no feasible non-empty L-initial tuple for " + p.text());

  Certificate cert;
  cert.profile = p;
  cert.engine = "prefix";
  cert.optimum = engine.best;
  cert.optimal_size_vectors = std::move(engine.vecs);
  std::sort(cert.optimal_size_vectors.begin(), cert.optimal_size_vectors.end());
  cert.optima_count = cert.optimal_size_vectors.size();
  for (std::size_t w = 0; w < cert.optimal_size_vectors.size() && w < opts.max_witnesses; ++w) {
    cert.witnesses.push_back(prefix_tuple(p, cert.optimal_size_vectors[w]));
  }

  std::vector<int> sorted = p.ks;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (p.n >= sorted[0] + sorted[1]) {
    cert.bound = bound_thm17(p.n, sorted).value;
    cert.bound_theorem = "t17";
    cert.bound_agreement = *cert.bound == cert.optimum;
  }
  return cert;
}

Certificate max_sum_L_initial_conditional(const Profile& p) {
  if (!p.istar) throw std::invalid_argument("conditional search needs istar");
  check_caps(p);
  const std::size_t istar = *p.istar;
  if (istar >= p.r()) throw std::invalid_argument("istar out of range");
  if (auto why = p.conditional_hypothesis_failure(istar)) throw HypothesisError("hypothesis violated: " + *why);
  SearchOptions opts;
  opts.min_sizes.assign(p.r(), 1);
  opts.min_sizes[istar] = binom(p.n - 1, p.ks[istar] - 1).to_u64();
  Certificate cert = max_sum_L_initial(p, opts);
  cert.bound = bound_thm16(p.n, p.ks, istar).value;
  cert.bound_theorem = "t16";
  cert.bound_agreement = *cert.bound == cert.optimum;
  return cert;
}

Certificate max_weighted_pair(int n, int k, int l, const BigCount& c, int tau) {
  // weighted_bound validates the hypothesis before any work happens.
  const BigCount bound = weighted_bound(n, k, l, tau, c).value;
  if (n > kMaxSearchN) throw CapExceeded("weighted search: n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxSearchN));
  const std::uint64_t lo = binom(n - tau, l - tau).to_u64();
  const std::uint64_t hi = binom(n - 1, l - 1).to_u64();
  if (lo > hi) throw HypothesisError("hypothesis violated: empty |B| window");

  const FrontierTable t = frontier_table(n, l, k);
  Certificate cert;
  cert.profile = Profile{n, {k, l}, std::nullopt};
  cert.engine = "prefix-weighted";
  bool found = false;
  for (std::uint64_t mb = lo; mb <= hi; ++mb) {
    const std::uint64_t ma = t.f[mb];
    const BigCount value = BigCount{ma} + c * BigCount{mb};
    if (!found || value > cert.optimum) {
      found = true;
      cert.optimum = value;
      cert.optimal_size_vectors.clear();
    }
    if (value == cert.optimum) cert.optimal_size_vectors.push_back({ma, mb});
  }
  std::sort(cert.optimal_size_vectors.begin(), cert.optimal_size_vectors.end());
  cert.optima_count = cert.optimal_size_vectors.size();
  for (std::size_t w = 0; w < cert.optimal_size_vectors.size() && w < 16; ++w) {
    const auto& v = cert.optimal_size_vectors[w];
    cert.witnesses.push_back({lex_initial(n, k, v[0]), lex_initial(n, l, v[1])});
  }
  cert.bound = bound;
  cert.bound_theorem = "t36";
  cert.bound_agreement = bound == cert.optimum;
  return cert;
}

}  // namespace cif
