#include "abac/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_map>

#include "abac/error.hpp"
#include "abac/numeration.hpp"

namespace abac {

namespace {

constexpr std::size_t kDefaultMaxIterations = 100000;

struct StateKey {
  ZSet zset;
  int admissibility = 0;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return ZSetHash{}(k.zset) * 31u + static_cast<std::size_t>(k.admissibility);
  }
};

// Interns the distinct Parikh vectors met in vect(zeta_j) so that tau is a
// union of small integer sets.
class VectIndex {
 public:
  explicit VectIndex(int m) : m_(m) {}

  const std::vector<int>& of(const ClosureTables& t, PairId id) {
    while (per_pair_.size() < t.catalog.size()) {
      std::vector<int> ids;
      for (const auto& v : vect(t.catalog.at(static_cast<PairId>(per_pair_.size() + 1)), m_)) {
        auto [it, fresh] = index_.emplace(v, static_cast<int>(index_.size()));
        ids.push_back(it->second);
      }
      per_pair_.push_back(std::move(ids));
    }
    return per_pair_[id - 1];
  }

  std::size_t distinct() const noexcept { return index_.size(); }

 private:
  int m_;
  std::map<ParikhVector, int> index_;
  std::vector<std::vector<int>> per_pair_;
};

int union_size(const ClosureTables& t, const ZSet& z, VectIndex& vi) {
  std::vector<int> all;
  for (PairId id : z.ids) {
    const auto& v = vi.of(t, id);
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

}  // namespace

const ZSet& ClosureTables::zset(int q) const {
  if (q < 1 || q > state_count()) throw DomainError("no Z-set with index " + std::to_string(q));
  return zsets[static_cast<std::size_t>(q - 1)];
}

std::size_t default_max_iterations() {
  if (const char* env = std::getenv("ABAC_MAX_ITER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxIterations;
}

ClosureTables explore(const Substitution& subst, const ExploreOptions& options) {
  const bool general = !subst.is_m_bonacci();
  const int max_digit = subst.alpha0();
  const std::size_t cap = options.max_iterations ? options.max_iterations : default_max_iterations();

  ClosureTables t;
  t.alpha = subst.alpha();
  t.refined = options.refined.value_or(general);
  t.tracks_admissibility = options.track_admissibility.value_or(general);
  t.d_images.resize(static_cast<std::size_t>(max_digit + 1));

  std::optional<AdmissibilityAutomaton> adm;
  if (t.tracks_admissibility) adm.emplace(subst);

  std::unordered_map<StateKey, int, StateKeyHash> state_of;
  auto find_or_add = [&](ZSet z, int a) {
    StateKey key{std::move(z), a};
    auto it = state_of.find(key);
    if (it != state_of.end()) return it->second;
    t.zsets.push_back(key.zset);
    t.admissibility.push_back(a);
    const int q = static_cast<int>(t.zsets.size());
    state_of.emplace(std::move(key), q);
    return q;
  };

  // Seeds: Z(n) for the one-digit representations n = 1..alpha_0.
  for (int n = 1; n <= max_digit; ++n) {
    ZSet z = base_zset(subst, n, t.refined, t.catalog);
    const int a = adm ? adm->next(adm->start(), n) : 0;
    t.seeds.push_back(find_or_add(std::move(z), a));
  }
  t.progress.push_back({0, 1, static_cast<PairId>(t.catalog.size()), 1, t.state_count()});

  PairId pairs_old = 0;
  PairId pairs_new = static_cast<PairId>(t.catalog.size());
  int states_old = 0;
  int states_new = t.state_count();

  for (int k = 1; states_old < states_new; ++k) {
    if (static_cast<std::size_t>(k) > cap) {
      throw ClosureLimitExceeded("closure did not reach a fixed point within " + std::to_string(cap) +
                                 " iterations");
    }
    for (int d = 0; d <= max_digit; ++d) {
      auto& images = t.d_images[static_cast<std::size_t>(d)];
      for (PairId j = pairs_old + 1; j <= pairs_new; ++j) {
        const FactorPair zeta = t.catalog.at(j);  // copy: intern may reallocate
        std::optional<ZSet> img;
        try {
          img = apply_d(subst, d, zeta, t.refined, t.catalog);
        } catch (const PreconditionError& e) {
          if (!general) throw InvariantViolation(std::string("m-bonacci closure: ") + e.what());
        }
        if (images.size() < j) images.resize(j);
        images[j - 1] = std::move(img);
      }
    }
    const PairId before = pairs_new;
    pairs_old = pairs_new;
    pairs_new = static_cast<PairId>(t.catalog.size());

    t.delta.resize(static_cast<std::size_t>(states_new));
    auto step = [&](int q, int d) {
      auto& row = t.delta[static_cast<std::size_t>(q - 1)];
      row.resize(static_cast<std::size_t>(max_digit + 1), 0);
      int a = 0;
      if (adm) {
        a = adm->next(t.admissibility[static_cast<std::size_t>(q - 1)], d);
        if (a == AdmissibilityAutomaton::kReject) return;
      }
      std::vector<PairId> ids;
      for (PairId j : t.zsets[static_cast<std::size_t>(q - 1)].ids) {
        const auto& img = t.d_images[static_cast<std::size_t>(d)][j - 1];
        if (!img) {
          throw InvariantViolation("D_" + std::to_string(d) + " undefined on " + to_string(t.catalog.at(j)) +
                                   " but digit is admissible in state " + std::to_string(q));
        }
        ids.insert(ids.end(), img->ids.begin(), img->ids.end());
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      row[static_cast<std::size_t>(d)] = find_or_add(ZSet{std::move(ids)}, a);
    };
    if (options.order == SweepOrder::kStateMajor) {
      for (int q = states_old + 1; q <= states_new; ++q)
        for (int d = 0; d <= max_digit; ++d) step(q, d);
    } else {
      for (int d = 0; d <= max_digit; ++d)
        for (int q = states_old + 1; q <= states_new; ++q) step(q, d);
    }
    states_old = states_new;
    states_new = t.state_count();
    t.progress.push_back({k, before + 1, pairs_new, states_old + 1, states_new});
  }
  t.delta.resize(static_cast<std::size_t>(t.state_count()));

  VectIndex vi(subst.m());
  t.tau.reserve(t.zsets.size());
  for (const auto& z : t.zsets) t.tau.push_back(union_size(t, z, vi));
  return t;
}

int output_value(const ClosureTables& tables, int q) {
  if (q < 1 || q > tables.state_count()) throw DomainError("no state " + std::to_string(q));
  return tables.tau[static_cast<std::size_t>(q - 1)];
}

Dfao build_dfao(const ClosureTables& tables) {
  const int radix = tables.max_digit() + 1;
  const int m_states = tables.state_count();
  bool needs_sink = false;
  for (const auto& row : tables.delta)
    for (int to : row) needs_sink |= (to == 0);

  Dfao a;
  a.alpha = tables.alpha;
  a.max_digit = tables.max_digit();
  a.initial = 0;
  const int total = m_states + 1 + (needs_sink ? 1 : 0);
  const int sink = m_states + 1;
  a.transitions.assign(static_cast<std::size_t>(total * radix), 0);
  a.outputs.assign(static_cast<std::size_t>(total), kNoOutput);

  a.set_next(0, 0, 0);
  for (int d = 1; d < radix; ++d) a.set_next(0, d, tables.seeds[static_cast<std::size_t>(d - 1)]);
  for (int q = 1; q <= m_states; ++q) {
    a.outputs[static_cast<std::size_t>(q)] = tables.tau[static_cast<std::size_t>(q - 1)];
    for (int d = 0; d < radix; ++d) {
      const int to = tables.delta[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(d)];
      a.set_next(q, d, to == 0 ? sink : to);
    }
  }
  if (needs_sink)
    for (int d = 0; d < radix; ++d) a.set_next(sink, d, sink);
  return a;
}

}  // namespace abac
