#include "effalg/effect_algebra.hpp"

#include <random>
#include <set>

namespace effalg {

PartialTable PartialTable::with_zero_rows(std::vector<std::string> labels, Element zero, Element one) {
  PartialTable t;
  t.labels = std::move(labels);
  t.zero = zero;
  t.one = one;
  const std::size_t n = t.size();
  t.sum.assign(n * n, std::nullopt);
  for (Element x = 0; x < n; ++x) {
    t.at(x, zero) = x;
    t.at(zero, x) = x;
  }
  return t;
}

EffectAlgebra::EffectAlgebra(const PartialTable& t, std::vector<Element> comp, Poset order)
    : labels_(t.labels),
      zero_(t.zero),
      one_(t.one),
      comp_(std::move(comp)),
      order_(std::move(order)),
      lattice_(is_lattice(order_)) {
  sum_.reserve(t.sum.size());
  for (const auto& v : t.sum) sum_.push_back(v ? static_cast<std::uint8_t>(*v) : kUndefined);
}

PartialTable EffectAlgebra::table() const {
  PartialTable t;
  t.labels = labels_;
  t.zero = zero_;
  t.one = one_;
  t.sum.reserve(sum_.size());
  for (std::uint8_t v : sum_) t.sum.push_back(v == kUndefined ? std::nullopt : std::optional<Element>(v));
  return t;
}

namespace {

void skip_rest(Report& r, std::initializer_list<const char*> ids) {
  for (const char* id : ids) r.add(id, ClauseStatus::skipped);
}

}  // namespace

ValidationOutcome validate(const PartialTable& t) {
  ValidationOutcome out;
  Report& r = out.report;
  r.title = "effect algebra axioms";
  const std::size_t n = t.size();

  auto& shape = r.add("shape");
  if (n == 0 || n > kMaxCarrier || t.sum.size() != n * n || t.zero >= n || t.one >= n ||
      (!t.declared_complement.empty() && t.declared_complement.size() != n)) {
    fail_once(shape, {}, "table dimensions do not match a carrier of 1..64 elements");
    skip_rest(r, {"E1", "E4", "E3", "order", "E2"});
    return out;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (auto v = t.at(x, y); v && *v >= n) fail_once(shape, {x, y}, "sum value outside carrier");
  {
    std::set<std::string> seen;
    for (Element x = 0; x < n; ++x)
      if (!seen.insert(t.labels[x]).second) fail_once(shape, {x}, "duplicate label");
  }
  if (!r.ok()) {
    skip_rest(r, {"E1", "E4", "E3", "order", "E2"});
    return out;
  }

  auto& e1 = r.add("E1");
  for (Element x = 0; x < n && e1.status == ClauseStatus::pass; ++x)
    for (Element y = x; y < n; ++y)
      if (t.at(x, y) != t.at(y, x)) {
        fail_once(e1, {x, y}, "x+y and y+x differ in definedness or value");
        break;
      }
  if (!r.ok()) {
    skip_rest(r, {"E4", "E3", "order", "E2"});
    return out;
  }

  auto& e4 = r.add("E4");
  for (Element x = 0; x < n; ++x)
    if (x != t.zero && t.at(t.one, x)) {
      fail_once(e4, {x}, "1+x defined for x != 0");
      break;
    }
  if (!r.ok()) {
    skip_rest(r, {"E3", "order", "E2"});
    return out;
  }

  auto& e3 = r.add("E3");
  std::vector<Element> comp(n, 0);
  for (Element x = 0; x < n && e3.status == ClauseStatus::pass; ++x) {
    std::vector<Element> candidates;
    for (Element u = 0; u < n; ++u)
      if (t.at(x, u) == t.one) candidates.push_back(u);
    if (candidates.empty()) {
      fail_once(e3, {x}, "no u with x+u=1");
    } else if (candidates.size() > 1) {
      fail_once(e3, {x, candidates[0], candidates[1]}, "duplicate complement candidates");
    } else {
      comp[x] = candidates[0];
      if (!t.declared_complement.empty() && t.declared_complement[x] &&
          *t.declared_complement[x] != comp[x])
        fail_once(e3, {x, *t.declared_complement[x]}, "declared complement disagrees with sum table");
    }
  }
  if (!r.ok()) {
    skip_rest(r, {"order", "E2"});
    return out;
  }

  std::vector<bool> leq(n * n, false);
  for (Element x = 0; x < n; ++x)
    for (Element z = 0; z < n; ++z)
      if (auto y = t.at(x, z)) leq[x * n + *y] = true;
  Report order = Poset::check_order(t.labels, leq, t.zero, t.one);
  auto& ord = r.add("order");
  for (const auto& c : order.clauses)
    if (c.status == ClauseStatus::fail) {
      fail_once(ord, c.witness, "induced relation not " + c.id);
      break;
    }
  if (!r.ok()) {
    skip_rest(r, {"E2"});
    return out;
  }

  auto& e2 = r.add("E2");
  for (Element x = 0; x < n && e2.status == ClauseStatus::pass; ++x)
    for (Element y = 0; y < n && e2.status == ClauseStatus::pass; ++y)
      for (Element z = 0; z < n; ++z) {
        auto xy = t.at(x, y);
        auto yz = t.at(y, z);
        std::optional<Element> left = xy ? t.at(*xy, z) : std::nullopt;
        std::optional<Element> right = yz ? t.at(x, *yz) : std::nullopt;
        if (left != right) {
          fail_once(e2, {x, y, z}, "(x+y)+z and x+(y+z) differ");
          break;
        }
      }
  if (!r.ok()) return out;

  out.algebra.emplace(EffectAlgebra(t, std::move(comp), Poset(t.labels, leq, t.zero, t.one)));
  return out;
}

EffectAlgebra make_effect_algebra(const PartialTable& table) {
  auto out = validate(table);
  if (!out.ok())
    throw std::invalid_argument("not an effect algebra:\n" + format_report(out.report, table.labels));
  return std::move(*out.algebra);
}

Poset induced_order(const EffectAlgebra& e) { return e.order(); }

Element complement(const EffectAlgebra& e, Element x) { return e.comp(x); }

std::optional<Element> odot(const EffectAlgebra& e, Element x, Element y) {
  if (!e.leq(e.comp(x), y)) return std::nullopt;
  return e.comp(*e.sum(e.comp(x), e.comp(y)));
}

Subset odot(const EffectAlgebra& e, Element x, const Subset& a) {
  Subset out = e.empty_set();
  for (Element w : a) {
    auto v = odot(e, x, w);
    if (!v) throw PreconditionError("x.w undefined: x' not below w", {x, w});
    out.insert(*v);
  }
  return out;
}

Subset set_complement(const EffectAlgebra& e, const Subset& a) {
  if (a.carrier_size() != e.size()) throw std::invalid_argument("subset carrier does not match algebra");
  Subset out = e.empty_set();
  for (Element x : a) out.insert(e.comp(x));
  return out;
}

Subset add_elem_set(const EffectAlgebra& e, Element x, const Subset& a) {
  if (a.carrier_size() != e.size()) throw std::invalid_argument("subset carrier does not match algebra");
  Subset out = e.empty_set();
  for (Element y : a) {
    auto v = e.sum(x, y);
    if (!v) throw PreconditionError("x+A undefined: A not below x'", {x, y});
    out.insert(*v);
  }
  return out;
}

Subset add_sets(const EffectAlgebra& e, const Subset& a, const Subset& b) {
  if (a.carrier_size() != e.size() || b.carrier_size() != e.size())
    throw std::invalid_argument("subset carrier does not match algebra");
  Subset out = e.empty_set();
  for (Element x : a)
    for (Element y : b) {
      auto v = e.sum(x, y);
      if (!v) throw PreconditionError("A+B undefined: A not below B'", {x, y});
      out.insert(*v);
    }
  return out;
}

Report check_lemma1(const EffectAlgebra& e) {
  Report r;
  r.title = "Lemma 1 (i)-(vii)";
  const std::size_t n = e.size();
  auto& c1 = r.add("i");
  auto& c2 = r.add("ii");
  auto& c3 = r.add("iii");
  auto& c4 = r.add("iv");
  auto& c5 = r.add("v");
  auto& c6 = r.add("vi");
  auto& c7 = r.add("vii");
  const Element zero = e.zero(), one = e.one();
  for (Element a = 0; a < n; ++a) {
    if (e.comp(e.comp(a)) != a) fail_once(c1, {a});
    if (e.sum(a, zero) != a || e.sum(zero, a) != a) fail_once(c6, {a});
    for (Element b = 0; b < n; ++b) {
      if (e.leq(a, b) && !e.leq(e.comp(b), e.comp(a))) fail_once(c2, {a, b});
      if (e.defined(a, b) != e.leq(a, e.comp(b))) fail_once(c3, {a, b});
      if (e.leq(a, b)) {
        // a+(a+b')' = b and (b'+(b'+a)')' = a
        auto ab = e.sum(a, e.comp(b));
        auto first = ab ? e.sum(a, e.comp(*ab)) : std::nullopt;
        auto ba = e.sum(e.comp(b), a);
        auto inner = ba ? e.sum(e.comp(b), e.comp(*ba)) : std::nullopt;
        if (first != b || !inner || e.comp(*inner) != a) fail_once(c5, {a, b});
      }
      for (Element c = 0; c < n; ++c) {
        if (!e.leq(a, b) || !e.defined(b, c)) continue;
        auto ac = e.sum(a, c);
        if (!ac || !e.leq(*ac, *e.sum(b, c))) fail_once(c4, {a, b, c});
      }
    }
  }
  if (e.comp(zero) != one || e.comp(one) != zero) fail_once(c7, {});
  return r;
}

Report check_lemma2(const EffectAlgebra& e) {
  Report r;
  r.title = "Lemma 2";
  const std::size_t n = e.size();
  const Poset& p = e.order();
  auto& lower = r.add("L(a,b)=(a'+(a'+L(a,b))')'");
  auto& upper = r.add("U(a,b)=a+(a+U(a,b)')'");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ac = e.comp(a);
      try {
        Subset l = lower_cone(p, a, b);
        Subset rhs = set_complement(e, add_elem_set(e, ac, set_complement(e, add_elem_set(e, ac, l))));
        if (rhs != l) fail_once(lower, {a, b});
      } catch (const PreconditionError&) {
        fail_once(lower, {a, b}, "sum undefined");
      }
      try {
        Subset u = upper_cone(p, a, b);
        Subset rhs = add_elem_set(e, a, set_complement(e, add_elem_set(e, a, set_complement(e, u))));
        if (rhs != u) fail_once(upper, {a, b});
      } catch (const PreconditionError&) {
        fail_once(upper, {a, b}, "sum undefined");
      }
    }
  return r;
}

MonotonicityResult is_monotonous(const EffectAlgebra& e, std::size_t samples_per_element) {
  MonotonicityResult res;
  const std::size_t n = e.size();
  const Poset& p = e.order();
  res.exhaustive = n <= 9;
  std::mt19937_64 rng(0x5eed);

  for (Element x = 0; x < n && res.holds; ++x) {
    // A <= x' means A lies in L(x'); A and B range over nonempty subsets,
    // since B empty makes U(x+B) the whole carrier and the condition fail for x != 0

    const std::vector<Element> below = p.down_set(e.comp(x)).elements();
    const std::size_t k = below.size();
    auto to_subset = [&](std::uint64_t code) {
      Subset s = e.empty_set();
      for (std::size_t i = 0; i < k; ++i)
        if ((code >> i) & 1U) s.insert(below[i]);
      return s;
    };
    // Condition L(A) <= U(B) holds iff U(B) lies in U(L(A)).
    auto check = [&](const Subset& a, const Subset& b) {
      Subset ula = upper_cone(p, lower_cone(p, a));
      if (!upper_cone(p, b).is_subset_of(ula)) return true;
      Subset ulxa = upper_cone(p, lower_cone(p, add_elem_set(e, x, a)));
      return upper_cone(p, add_elem_set(e, x, b)).is_subset_of(ulxa);
    };

    if (res.exhaustive) {
      const std::uint64_t count = std::uint64_t{1} << k;
      std::vector<Subset> ul_a(count), ul_xa(count), u_b(count), u_xb(count), sets(count);
      for (std::uint64_t c = 0; c < count; ++c) {
        sets[c] = to_subset(c);
        ul_a[c] = upper_cone(p, lower_cone(p, sets[c]));
        ul_xa[c] = upper_cone(p, lower_cone(p, add_elem_set(e, x, sets[c])));
        u_b[c] = upper_cone(p, sets[c]);
        u_xb[c] = upper_cone(p, add_elem_set(e, x, sets[c]));
      }
      for (std::uint64_t a = 1; a < count && res.holds; ++a)
        for (std::uint64_t b = 1; b < count; ++b)
          if (u_b[b].is_subset_of(ul_a[a]) && !u_xb[b].is_subset_of(ul_xa[a])) {
            res.holds = false;
            res.witness_x = x;
            res.witness_a = sets[a];
            res.witness_b = sets[b];
            break;
          }
    } else {
      std::uniform_int_distribution<std::uint64_t> dist(1, Subset::mask(k));
      for (std::size_t s = 0; s < samples_per_element; ++s) {
        Subset a = to_subset(dist(rng)), b = to_subset(dist(rng));
        if (!check(a, b)) {
          res.holds = false;
          res.witness_x = x;
          res.witness_a = a;
          res.witness_b = b;
          break;
        }
      }
    }
  }
  return res;
}

}  // namespace effalg
