#include "effalg/residuation.hpp"

namespace effalg {

std::optional<Subset> product_image(const UnsharpResiduatedPoset& c, const Subset& a, Element y) {
  Subset out = c.poset.empty_set();
  for (Element w : a) {
    auto v = c.op(w, y);
    if (!v) return std::nullopt;
    out.insert(*v);
  }
  return out;
}

namespace {

struct AdjointnessSides {
  bool defined = true;
  bool product_in_cone = false;  // U(x,y').y is inside UL(y,z)
  bool cone_in_cone = false;     // U(x,y') is inside U(y->z)
  bool product_above = false;    // U(x,y').y >= L(y,z)
  bool cone_above = false;       // U(x,y') >= y->z
};

AdjointnessSides adjointness_sides(const UnsharpResiduatedPoset& c, Element x, Element y, Element z) {
  const Poset& p = c.poset;
  AdjointnessSides s;
  const Subset cone = upper_cone(p, x, c.inv(y));
  auto prod = product_image(c, cone, y);
  if (!prod) {
    s.defined = false;
    return s;
  }
  const Subset lyz = lower_cone(p, y, z);
  const Subset& yz = c.implies(y, z);
  s.product_in_cone = prod->is_subset_of(upper_cone(p, lyz));
  s.cone_in_cone = cone.is_subset_of(upper_cone(p, yz));
  s.product_above = set_leq(p, lyz, *prod);
  s.cone_above = set_leq(p, yz, cone);
  return s;
}

}  // namespace

SurpValidation validate_surp(UnsharpResiduatedPoset candidate) {
  SurpValidation out{std::move(candidate), {}, std::nullopt};
  UnsharpResiduatedPoset& c = out.structure;
  Report& r = out.report;
  r.title = "strict unsharp residuated poset (C1)-(C4)";
  c.validated = false;
  c.divisible = false;
  const std::size_t n = c.size();
  const Poset& p = c.poset;
  const Element bottom = p.bottom(), top = p.top();

  auto& c1 = r.add("C1");
  if (c.product.size() != n * n || c.imp.size() != n * n) {
    fail_once(c1, {}, "table dimensions do not match carrier");
    return out;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (auto v = c.op(x, y); v && *v >= n) fail_once(c1, {x, y}, "product outside carrier");
      if (c.implies(x, y).carrier_size() != n) fail_once(c1, {x, y}, "implication subset over wrong carrier");
    }
  if (c1.status == ClauseStatus::pass) {
    Report inv = validate_involution(p, c.inv);
    for (const auto& cl : inv.clauses)
      if (cl.status == ClauseStatus::fail) {
        fail_once(c1, cl.witness, "involution not " + cl.id);
        break;
      }
  }
  if (!r.ok()) {
    for (const char* id : {"C2:strict", "C2:unit", "C2:commutative", "C2:associative", "C2:monotone",
                           "C2:recovery", "C3", "C4"})
      r.add(id, ClauseStatus::skipped);
    return out;
  }

  auto& strict = r.add("C2:strict");
  auto& unit = r.add("C2:unit");
  auto& comm = r.add("C2:commutative");
  auto& assoc = r.add("C2:associative");
  auto& mono = r.add("C2:monotone");
  auto& recov = r.add("C2:recovery");
  auto& c3 = r.add("C3");
  auto& c4 = r.add("C4");

  for (Element x = 0; x < n; ++x) {
    if (c.op(x, top) != x || c.op(top, x) != x) fail_once(unit, {x});
    if (c.implies(x, bottom) != p.singleton(c.inv(x))) fail_once(c4, {x});
    for (Element y = 0; y < n; ++y) {
      if (c.op(x, y).has_value() != p.leq(c.inv(x), y)) fail_once(strict, {x, y});
      if (c.op(x, y) != c.op(y, x)) fail_once(comm, {x, y});
      if (p.leq(x, y)) {
        // x = y.(y.x')'
        auto inner = c.op(y, c.inv(x));
        auto outer = inner ? c.op(y, c.inv(*inner)) : std::nullopt;
        if (outer != x) fail_once(recov, {x, y});
      }
      for (Element z = 0; z < n; ++z) {
        auto xy = c.op(x, y);
        auto yz = c.op(y, z);
        auto left = xy ? c.op(*xy, z) : std::nullopt;
        auto right = yz ? c.op(x, *yz) : std::nullopt;
        if (left != right) fail_once(assoc, {x, y, z});
        // z' <= x <= y implies x.z <= y.z
        if (p.leq(c.inv(z), x) && p.leq(x, y)) {
          auto xz = c.op(x, z);
          auto yz2 = c.op(y, z);
          if (!xz || !yz2 || !p.leq(*xz, *yz2)) fail_once(mono, {x, y, z});
        }
        auto s = adjointness_sides(c, x, y, z);
        if (!s.defined) fail_once(c3, {x, y, z}, "U(x,y').y undefined");
        else if (s.product_in_cone != s.cone_in_cone) fail_once(c3, {x, y, z});
      }
    }
  }

  c.validated = r.ok();
  c.divisible = true;
  for (Element x = 0; x < n && c.divisible; ++x)
    for (Element y = 0; y < n; ++y) {
      std::optional<Subset> img = p.empty_set();
      for (Element w : c.implies(x, y)) {
        auto v = c.op(x, w);
        if (!v) {
          img.reset();
          break;
        }
        img->insert(*v);
      }
      if (!img || *img != lower_cone(p, x, y)) {
        c.divisible = false;
        out.divisibility_witness = std::make_pair(x, y);
        break;
      }
    }
  return out;
}

Report check_dual_adjointness(const UnsharpResiduatedPoset& c) {
  Report r;
  r.title = "dual unsharp adjointness (C3')";
  const std::size_t n = c.size();
  auto& dual = r.add("C3'");
  auto& agree = r.add("C3~C3'");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        auto s = adjointness_sides(c, x, y, z);
        if (!s.defined) {
          fail_once(dual, {x, y, z}, "U(x,y').y undefined");
          fail_once(agree, {x, y, z}, "U(x,y').y undefined");
          continue;
        }
        if (s.product_above != s.cone_above) fail_once(dual, {x, y, z});
        if (s.product_in_cone != s.product_above || s.cone_in_cone != s.cone_above ||
            (s.product_in_cone == s.cone_in_cone) != (s.product_above == s.cone_above))
          fail_once(agree, {x, y, z});
      }
  return r;
}

UnsharpResiduatedPoset from_effect_algebra(const EffectAlgebra& e) {
  const std::size_t n = e.size();
  UnsharpResiduatedPoset c{e.order(), Involution{}, {}, {}, false, false};
  c.inv.map.resize(n);
  c.product.reserve(n * n);
  c.imp.reserve(n * n);
  for (Element x = 0; x < n; ++x) {
    c.inv.map[x] = e.comp(x);
    for (Element y = 0; y < n; ++y) {
      c.product.push_back(odot(e, x, y));
      c.imp.push_back(implies(e, x, y));
    }
  }
  return c;
}

ValidationOutcome to_effect_algebra(const UnsharpResiduatedPoset& c) {
  const Poset& p = c.poset;
  const std::size_t n = c.size();
  PartialTable t;
  t.labels = p.labels();
  t.zero = p.bottom();
  t.one = p.top();
  t.sum.assign(n * n, std::nullopt);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.leq(x, c.inv(y)))
        if (auto v = c.op(c.inv(x), c.inv(y))) t.at(x, y) = c.inv(*v);

  ValidationOutcome out = validate(t);
  auto& same = out.report.add("order-coincides");
  if (!out.algebra) {
    same.status = ClauseStatus::skipped;
    return out;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (out.algebra->leq(x, y) != p.leq(x, y)) fail_once(same, {x, y});
  if (same.status == ClauseStatus::fail) out.algebra.reset();
  return out;
}

RoundtripResult roundtrip_check(const EffectAlgebra& e) {
  RoundtripResult res;
  ValidationOutcome rebuilt = to_effect_algebra(from_effect_algebra(e));
  if (!rebuilt.algebra) {
    res.failure = rebuilt.report;
    return res;
  }
  const std::size_t n = e.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (e.sum(x, y) != rebuilt.algebra->sum(x, y))
        res.diff.push_back(TableDiff{x, y, e.sum(x, y), rebuilt.algebra->sum(x, y)});
  res.equal = res.diff.empty() && *rebuilt.algebra == e;
  return res;
}

bool reconstructs(const UnsharpResiduatedPoset& c) {
  ValidationOutcome ea = to_effect_algebra(c);
  if (!ea.algebra) return false;
  UnsharpResiduatedPoset again = from_effect_algebra(*ea.algebra);
  return again.poset == c.poset && again.inv == c.inv && again.product == c.product && again.imp == c.imp;
}

Report equivalence_c3_xi(const EffectAlgebra& e) {
  Report r;
  r.title = "(C3) <=> (xi)";
  const std::size_t n = e.size();
  const Poset& p = e.order();
  const ImplicationTable imp(e);
  auto& c3 = r.add("C3");
  auto& xi = r.add("xi");
  auto& eq = r.add("C3<=>xi");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element ac = e.comp(a), bc = e.comp(b), cc = e.comp(c);
        // (C3) at (a,b,c), evaluated with the effect-algebra product
        const Subset cone = upper_cone(p, a, bc);
        bool c3_ok = true;
        Subset prod = e.empty_set();
        for (Element w : cone) {
          auto v = odot(e, w, b);
          if (!v) c3_ok = false;
          else prod.insert(*v);
        }
        const bool c3_left = prod.is_subset_of(upper_cone(p, lower_cone(p, b, c)));
        const bool c3_right = cone.is_subset_of(upper_cone(p, imp.entry(b, c)));
        const bool c3_holds = c3_ok && c3_left == c3_right;
        // (xi) at (b,a',c): b->a' <= U(b',c') iff b->c <= U(b',a)
        const bool xi_left = set_leq(p, imp.entry(b, ac), upper_cone(p, bc, cc));
        const bool xi_right = set_leq(p, imp.entry(b, c), upper_cone(p, bc, a));
        const bool xi_holds = xi_left == xi_right;
        if (!c3_holds) fail_once(c3, {a, b, c});
        if (!xi_holds) fail_once(xi, {b, ac, c});
        if (c3_holds != xi_holds) fail_once(eq, {a, b, c});
      }
  return r;
}

}  // namespace effalg
