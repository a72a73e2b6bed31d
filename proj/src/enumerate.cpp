#include "effalg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace effalg {

std::string default_label(std::size_t index, std::size_t n) {
  if (index == 0) return "0";
  if (index + 1 == n) return "1";
  return std::string(1, static_cast<char>('a' + index - 1));
}

namespace {

constexpr std::int8_t kUnset = -2;
constexpr std::int8_t kUndef = -1;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

// Depth-first fill of the sum table. Zero is index 0, one is index n-1;
// the free cells are (i,j) with 1 <= i <= j <= n-2 in row-major order.
class TableSearch {
 public:
  TableSearch(std::size_t n, const Poset* order, std::vector<std::string> labels)
      : n_(n), order_(order), labels_(std::move(labels)), table_(n * n, kUnset), used_(n, 0), filled_(n, 0) {
    const Element one = static_cast<Element>(n - 1);
    for (Element x = 0; x < n; ++x) {
      set(0, x, static_cast<std::int8_t>(x));
      set(x, 0, static_cast<std::int8_t>(x));
      used_[x] |= std::uint64_t{1} << x;
    }
    for (Element x = 1; x < n; ++x) {
      set(one, x, kUndef);
      set(x, one, kUndef);
    }
    for (Element i = 1; i + 1 < n; ++i)
      for (Element j = i; j + 1 < n; ++j) cells_.emplace_back(i, j);
    marked_.assign(cells_.size(), false);
  }

  std::size_t cell_count() const { return cells_.size(); }

  /// Values tried for a cell, in order: undefined, then 1..n-1.
  std::vector<std::int8_t> candidates() const {
    std::vector<std::int8_t> v{kUndef};
    for (std::size_t z = 1; z < n_; ++z) v.push_back(static_cast<std::int8_t>(z));
    return v;
  }

  /// Explores the subtree where the first free cell holds `first` (or
  /// everything when there are no free cells).
  void run_branch(std::optional<std::int8_t> first, std::vector<EffectAlgebra>& out) {
    out_ = &out;
    if (cells_.empty()) {
      leaf();
      return;
    }
    if (first) {
      if (assign(0, *first)) descend(1);
      unassign(0, *first);
    } else {
      descend(0);
    }
  }

 private:
  std::int8_t get(Element x, Element y) const { return table_[x * n_ + y]; }
  void set(Element x, Element y, std::int8_t v) { table_[x * n_ + y] = v; }

  void descend(std::size_t k) {
    if (k == cells_.size()) {
      leaf();
      return;
    }
    for (std::int8_t v : candidates()) {
      if (assign(k, v)) descend(k + 1);
      unassign(k, v);
    }
  }

  // Writes cell k and its mirror; false when a pruning rule fires. Always
  // pair with unassign(k, v).
  bool assign(std::size_t k, std::int8_t v) {
    auto [i, j] = cells_[k];
    set(i, j, v);
    set(j, i, v);
    ++filled_[i];
    if (i != j) ++filled_[j];
    marked_[k] = false;
    if (v != kUndef) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      // cancellation: x+y = x+z forces y = z (also excludes x+y = x)
      if ((used_[i] & bit) || (used_[j] & bit)) return false;
      if (order_ && (!order_->leq(i, static_cast<Element>(v)) || !order_->leq(j, static_cast<Element>(v))))
        return false;
      used_[i] |= bit;
      used_[j] |= bit;
      marked_[k] = true;
    }
    const std::size_t middle = n_ - 2;
    const std::uint64_t one_bit = std::uint64_t{1} << (n_ - 1);
    // a complete middle row needs its unique complement
    if (filled_[i] == middle && !(used_[i] & one_bit)) return false;
    if (filled_[j] == middle && !(used_[j] & one_bit)) return false;
    return associative_so_far();
  }

  void unassign(std::size_t k, std::int8_t v) {
    auto [i, j] = cells_[k];
    if (marked_[k]) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      used_[i] &= ~bit;
      used_[j] &= ~bit;
      marked_[k] = false;
    }
    --filled_[i];
    if (i != j) --filled_[j];
    set(i, j, kUnset);
    set(j, i, kUnset);
  }

  bool associative_so_far() const {
    for (Element x = 1; x < n_; ++x)
      for (Element y = 1; y < n_; ++y) {
        const std::int8_t xy = get(x, y);
        if (xy == kUnset) continue;
        for (Element z = 1; z < n_; ++z) {
          const std::int8_t yz = get(y, z);
          if (yz == kUnset) continue;
          std::int8_t left = xy == kUndef ? kUndef : get(static_cast<Element>(xy), z);
          std::int8_t right = yz == kUndef ? kUndef : get(x, static_cast<Element>(yz));
          if (left == kUnset || right == kUnset) continue;
          if (left != right) return false;
        }
      }
    return true;
  }

  void leaf() {
    PartialTable t;
    t.labels = labels_;
    t.zero = 0;
    t.one = static_cast<Element>(n_ - 1);
    t.sum.reserve(n_ * n_);
    for (std::int8_t v : table_)
      t.sum.push_back(v < 0 ? std::nullopt : std::optional<Element>(static_cast<Element>(v)));
    ValidationOutcome res = validate(t);
    if (!res.algebra) return;
    if (order_ && !(res.algebra->order() == *order_)) return;
    out_->push_back(std::move(*res.algebra));
  }

  std::size_t n_;
  const Poset* order_;
  std::vector<std::string> labels_;
  std::vector<std::int8_t> table_;
  std::vector<std::uint64_t> used_;
  std::vector<std::size_t> filled_;
  std::vector<std::pair<Element, Element>> cells_;
  std::vector<bool> marked_;
  std::vector<EffectAlgebra>* out_ = nullptr;
};

}  // namespace

EnumerationResult enumerate_effect_algebras(std::size_t n, const EnumerationOptions& options) {
  const std::size_t cap = options.order ? kMaxConstrainedEnumeration : kMaxEnumeration;
  if (n < kMinEnumeration || n > cap)
    throw std::out_of_range("enumeration supports carriers of 2.." + std::to_string(cap) + " elements");
  std::vector<std::string> labels;
  if (options.order) {
    const Poset& p = *options.order;
    if (p.size() != n || p.bottom() != 0 || p.top() != n - 1)
      throw std::invalid_argument("order constraint must have bottom 0 and top n-1");
    labels = p.labels();
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(default_label(i, n));
  }

  EnumerationResult res;
  res.n = n;
  res.up_to_iso = options.up_to_iso;

  // One branch per value of the first free cell; merged in branch order.
  TableSearch probe(n, options.order, labels);
  std::vector<std::optional<std::int8_t>> branches;
  if (probe.cell_count() == 0) branches.push_back(std::nullopt);
  else
    for (std::int8_t v : probe.candidates()) branches.push_back(v);

  std::vector<std::vector<EffectAlgebra>> found(branches.size());
  const unsigned workers = std::min<unsigned>(resolve_threads(options.threads), branches.size());
  if (workers <= 1) {
    for (std::size_t b = 0; b < branches.size(); ++b) TableSearch(n, options.order, labels).run_branch(branches[b], found[b]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t b; (b = next.fetch_add(1)) < branches.size();)
          TableSearch(n, options.order, labels).run_branch(branches[b], found[b]);
      });
    for (auto& t : pool) t.join();
  }

  std::set<std::vector<std::uint8_t>> seen;
  for (auto& branch : found)
    for (auto& alg : branch) {
      ++res.labeled_count;
      const bool fresh = seen.insert(canonical_form(alg).code).second;
      if (!options.up_to_iso || fresh) res.algebras.push_back(std::move(alg));
    }
  res.iso_count = seen.size();
  return res;
}

namespace {

using Invariant = std::tuple<std::size_t, bool, std::size_t>;

Invariant invariant_of(const EffectAlgebra& e, Element x) {
  std::size_t defined = 0;
  for (Element y = 0; y < e.size(); ++y) defined += e.defined(x, y) ? 1 : 0;
  return {defined, e.comp(x) == x, e.order().down_set(x).size()};
}

std::vector<Element> middle_elements(const EffectAlgebra& e) {
  std::vector<Element> m;
  for (Element x = 0; x < e.size(); ++x)
    if (x != e.zero() && x != e.one()) m.push_back(x);
  return m;
}

std::vector<std::uint8_t> encode(const EffectAlgebra& e, const std::vector<Element>& relabel) {
  const std::size_t n = e.size();
  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) inverse[relabel[x]] = x;
  std::vector<std::uint8_t> code(n * n);
  for (Element p = 0; p < n; ++p)
    for (Element q = 0; q < n; ++q) {
      auto v = e.sum(inverse[p], inverse[q]);
      code[p * n + q] = v ? static_cast<std::uint8_t>(relabel[*v] + 1) : 0;
    }
  return code;
}

// Calls visit(sigma) for every bijection a -> b fixing 0 and 1 that
// transports sums exactly; stops when visit returns false.
template <class Visit>
void for_each_isomorphism(const EffectAlgebra& a, const EffectAlgebra& b, Visit&& visit) {
  const std::size_t n = a.size();
  if (b.size() != n) return;
  constexpr Element kFree = ~Element{0};
  std::vector<Element> sigma(n, kFree);
  std::vector<bool> taken(n, false);
  sigma[a.zero()] = b.zero();
  taken[b.zero()] = true;
  if (n > 1) {
    if (a.zero() == a.one() || b.zero() == b.one()) return;
    sigma[a.one()] = b.one();
    taken[b.one()] = true;
  }
  const std::vector<Element> order = middle_elements(a);
  std::vector<Invariant> inv_a(n), inv_b(n);
  for (Element x = 0; x < n; ++x) {
    inv_a[x] = invariant_of(a, x);
    inv_b[x] = invariant_of(b, x);
  }

  auto consistent = [&]() {
    for (Element x = 0; x < n; ++x) {
      if (sigma[x] == kFree) continue;
      for (Element y = 0; y < n; ++y) {
        if (sigma[y] == kFree) continue;
        auto va = a.sum(x, y);
        auto vb = b.sum(sigma[x], sigma[y]);
        if (va.has_value() != vb.has_value()) return false;
        if (va && sigma[*va] != kFree && sigma[*va] != *vb) return false;
      }
    }
    return true;
  };
  if (!consistent()) return;

  bool stop = false;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == order.size()) {
      if (!visit(sigma)) stop = true;
      return;
    }
    const Element x = order[k];
    for (Element y = 0; y < n && !stop; ++y) {
      if (taken[y] || inv_a[x] != inv_b[y]) continue;
      sigma[x] = y;
      taken[y] = true;
      if (consistent()) self(self, k + 1);
      taken[y] = false;
      sigma[x] = kFree;
    }
  };
  rec(rec, 0);
}

}  // namespace

CanonicalForm canonical_form(const EffectAlgebra& e) {
  const std::size_t n = e.size();
  if (n > kMaxCanonical) throw std::out_of_range("canonical form supports at most 9 elements");
  std::vector<Element> middle = middle_elements(e);
  std::vector<Invariant> inv(n);
  for (Element x = 0; x < n; ++x) inv[x] = invariant_of(e, x);
  std::stable_sort(middle.begin(), middle.end(), [&](Element x, Element y) { return inv[x] < inv[y]; });

  // Blocks of equal invariant; each block is permuted independently.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < middle.size();) {
    std::size_t t = s;
    while (t < middle.size() && inv[middle[t]] == inv[middle[s]]) ++t;
    blocks.emplace_back(s, t);
    s = t;
  }

  CanonicalForm best;
  std::vector<Element> relabel(n);
  relabel[e.zero()] = 0;
  if (n > 1) relabel[e.one()] = static_cast<Element>(n - 1);

  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      for (std::size_t i = 0; i < middle.size(); ++i) relabel[middle[i]] = static_cast<Element>(i + 1);
      auto code = encode(e, relabel);
      if (best.code.empty() || code < best.code) {
        best.code = std::move(code);
        best.relabel = relabel;
      }
      return;
    }
    auto first = middle.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = middle.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

EffectAlgebra permute(const EffectAlgebra& e, const std::vector<Element>& sigma) {
  const std::size_t n = e.size();
  if (sigma.size() != n) throw std::invalid_argument("permutation size differs from carrier");
  PartialTable src = e.table();
  PartialTable t;
  t.labels.resize(n);
  for (Element x = 0; x < n; ++x) t.labels[sigma[x]] = src.labels[x];
  t.zero = sigma[src.zero];
  t.one = sigma[src.one];
  t.sum.assign(n * n, std::nullopt);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (auto v = src.at(x, y)) t.at(sigma[x], sigma[y]) = sigma[*v];
  return make_effect_algebra(t);
}

std::optional<std::vector<Element>> is_isomorphic(const EffectAlgebra& a, const EffectAlgebra& b) {
  std::optional<std::vector<Element>> witness;
  for_each_isomorphism(a, b, [&](const std::vector<Element>& sigma) {
    witness = sigma;
    return false;
  });
  return witness;
}

std::uint64_t automorphism_count(const EffectAlgebra& e) {
  std::uint64_t count = 0;
  for_each_isomorphism(e, e, [&](const std::vector<Element>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace effalg
