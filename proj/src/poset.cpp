#include "effalg/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace effalg {

std::string format_subset(const Subset& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ',';
    first = false;
    out += x < labels.size() ? labels[x] : std::to_string(x);
  }
  out += '}';
  return out;
}

Report Poset::check_order(const std::vector<std::string>& labels, const std::vector<bool>& leq,
                          Element bottom, Element top) {
  Report r;
  r.title = "order";
  const std::size_t n = labels.size();
  auto& shape = r.add("shape");
  if (n == 0 || n > kMaxCarrier || leq.size() != n * n || bottom >= n || top >= n) {
    fail_once(shape, {}, "carrier must have 1..64 elements with an n*n matrix");
    return r;
  }
  auto& distinct = r.add("distinct-labels");
  {
    std::set<std::string> seen;
    for (Element x = 0; x < n; ++x)
      if (!seen.insert(labels[x]).second) fail_once(distinct, {x});
  }
  auto at = [&](Element x, Element y) { return leq[x * n + y]; };
  auto& refl = r.add("reflexive");
  for (Element x = 0; x < n; ++x)
    if (!at(x, x)) fail_once(refl, {x});
  auto& anti = r.add("antisymmetric");
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (at(x, y) && at(y, x)) fail_once(anti, {x, y});
  auto& trans = r.add("transitive");
  for (Element x = 0; x < n && trans.status == ClauseStatus::pass; ++x)
    for (Element y = 0; y < n; ++y)
      if (at(x, y))
        for (Element z = 0; z < n; ++z)
          if (at(y, z) && !at(x, z)) fail_once(trans, {x, y, z});
  auto& bounds = r.add("bounded");
  for (Element x = 0; x < n; ++x)
    if (!at(bottom, x) || !at(x, top)) fail_once(bounds, {x});
  return r;
}

Poset::Poset(std::vector<std::string> labels, const std::vector<bool>& leq, Element bottom,
             Element top)
    : labels_(std::move(labels)), bottom_(bottom), top_(top) {
  Report r = check_order(labels_, leq, bottom, top);
  if (!r.ok()) throw std::invalid_argument("not a bounded poset:\n" + format_report(r, labels_));
  const std::size_t n = labels_.size();
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (leq[x * n + y]) {
        up_[x] |= std::uint64_t{1} << y;
        down_[y] |= std::uint64_t{1} << x;
      }
}

std::optional<Element> Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

std::vector<bool> Poset::matrix() const {
  const std::size_t n = size();
  std::vector<bool> m(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) m[x * n + y] = leq(x, y);
  return m;
}

namespace {
void require_carrier(const Poset& p, const Subset& a) {
  if (a.carrier_size() != p.size()) throw std::invalid_argument("subset carrier does not match poset");
}
}  // namespace

Subset lower_cone(const Poset& p, const Subset& a) {
  require_carrier(p, a);
  Subset out = p.full_set();
  for (Element y : a) out &= p.down_set(y);
  return out;
}

Subset upper_cone(const Poset& p, const Subset& a) {
  require_carrier(p, a);
  Subset out = p.full_set();
  for (Element y : a) out &= p.up_set(y);
  return out;
}

bool set_leq(const Poset& p, const Subset& a, const Subset& b) {
  require_carrier(p, b);
  // A <= B iff B lies in U(A); U(empty) is everything.
  return b.is_subset_of(upper_cone(p, a));
}

bool comparable(const Poset& p, Element x, Element y) { return p.leq(x, y) || p.leq(y, x); }

Report validate_involution(const Poset& p, const Involution& inv) {
  Report r;
  r.title = "involution";
  const std::size_t n = p.size();
  auto& perm = r.add("permutation");
  if (inv.map.size() != n) {
    fail_once(perm, {}, "map size differs from carrier");
    return r;
  }
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    if (inv.map[x] >= n) {
      fail_once(perm, {x}, "image outside carrier");
      return r;
    }
    if (hit[inv.map[x]]) fail_once(perm, {x});
    hit[inv.map[x]] = true;
  }
  auto& invol = r.add("involutive");
  for (Element x = 0; x < n; ++x)
    if (inv(inv(x)) != x) fail_once(invol, {x});
  auto& anti = r.add("antitone");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.leq(x, y) && !p.leq(inv(y), inv(x))) fail_once(anti, {x, y});
  auto& bounds = r.add("swaps-bounds");
  if (inv(p.bottom()) != p.top()) fail_once(bounds, {p.bottom()}, "map(bottom) != top");
  else if (inv(p.top()) != p.bottom()) fail_once(bounds, {p.top()}, "map(top) != bottom");
  return r;
}

std::vector<std::pair<Element, Element>> hasse_edges(const Poset& p) {
  std::vector<std::pair<Element, Element>> edges;
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x) {
    Subset strictly_above = p.up_set(x);
    strictly_above.erase(x);
    for (Element y : strictly_above) {
      // y covers x iff nothing in (x,y)
      Subset between = strictly_above & p.down_set(y);
      between.erase(y);
      if (between.is_empty()) edges.emplace_back(x, y);
    }
  }
  return edges;
}

std::optional<Element> meet(const Poset& p, Element x, Element y) {
  Subset lower = lower_cone(p, x, y);
  for (Element z : lower)
    if (lower.is_subset_of(p.down_set(z))) return z;
  return std::nullopt;
}

std::optional<Element> join(const Poset& p, Element x, Element y) {
  Subset upper = upper_cone(p, x, y);
  for (Element z : upper)
    if (upper.is_subset_of(p.up_set(z))) return z;
  return std::nullopt;
}

bool is_lattice(const Poset& p) {
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (!meet(p, x, y) || !join(p, x, y)) return false;
  return true;
}

}  // namespace effalg
