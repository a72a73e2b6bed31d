#include "effalg/laws.hpp"

#include "effalg/implication.hpp"

namespace effalg {

ContrapositionResult contraposition_pair(const EffectAlgebra& e, Element a, Element b) {
  const Poset& p = e.order();
  ContrapositionResult r;
  r.lhs = upper_cone(p, implies(e, a, b));
  r.rhs = upper_cone(p, implies(e, e.comp(b), e.comp(a)));
  r.holds = r.lhs == r.rhs;
  return r;
}

LawReport counterexample_search(const EffectAlgebra& e) {
  LawReport rep;
  rep.law = "unsharp contraposition U(x->y) = U(y'->x')";
  const std::size_t n = e.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto c = contraposition_pair(e, x, y);
      if (c.holds) continue;
      FailingPair f{x, y, c.lhs, c.rhs, comparable(e.order(), x, y),
                    implies(e, x, y) == implies(e, e.comp(y), e.comp(x))};
      if (f.comparable) rep.comparable_only_status = false;
      rep.failing_pairs.push_back(f);
    }
  rep.holds_globally = rep.failing_pairs.empty();
  return rep;
}

Report check_prop1(const EffectAlgebra& e) {
  Report r;
  r.title = "contraposition on comparable pairs";
  const std::size_t n = e.size();
  const Poset& p = e.order();
  auto& cmp = r.add("comparable");
  auto& variant = r.add("lattice-variant", e.lattice() ? ClauseStatus::pass : ClauseStatus::skipped);
  if (!e.lattice()) variant.detail = "not a lattice effect algebra";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (comparable(p, x, y) && !contraposition_pair(e, x, y).holds) fail_once(cmp, {x, y});
      if (e.lattice()) {
        // U(x->y) = U((x^y)'->x')
        Element m = *meet(p, x, y);
        if (upper_cone(p, implies(e, x, y)) != upper_cone(p, implies(e, e.comp(m), e.comp(x))))
          fail_once(variant, {x, y});
      }
    }
  return r;
}

LawReport identity_equ1(const EffectAlgebra& e) {
  if (!e.lattice()) throw NotALattice();
  LawReport rep;
  rep.law = "x'+(x^y) = y+(x'^y')";
  const std::size_t n = e.size();
  const Poset& p = e.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xc = e.comp(x), yc = e.comp(y);
      // both sums are defined: x^y <= x = x'' and x'^y' <= y'
      Element lhs = *e.sum(xc, *meet(p, x, y));
      Element rhs = *e.sum(y, *meet(p, xc, yc));
      if (lhs == rhs) continue;
      FailingPair f{x, y, e.singleton(lhs), e.singleton(rhs), comparable(p, x, y), false};
      if (f.comparable) rep.comparable_only_status = false;
      rep.failing_pairs.push_back(f);
    }
  rep.holds_globally = rep.failing_pairs.empty();
  return rep;
}

Prop2Result check_prop2_equivalence(const EffectAlgebra& e) {
  if (!e.lattice()) throw NotALattice();
  Prop2Result r;
  r.contraposition_holds = counterexample_search(e).holds_globally;
  r.identity_holds = identity_equ1(e).holds_globally;
  return r;
}

EffectAlgebra boolean_to_ea(unsigned atoms) {
  if (atoms < 1 || atoms > kMaxBooleanAtoms)
    throw std::invalid_argument("Boolean algebra must have 1..6 atoms");
  const std::size_t n = std::size_t{1} << atoms;
  const Element top = static_cast<Element>(n - 1);
  std::vector<std::string> labels(n);
  for (Element x = 0; x < n; ++x) {
    if (x == 0) labels[x] = "0";
    else if (x == top) labels[x] = "1";
    else
      for (unsigned i = 0; i < atoms; ++i)
        if ((x >> i) & 1U) labels[x] += static_cast<char>('a' + i);
  }
  PartialTable t = PartialTable::with_zero_rows(std::move(labels), 0, top);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if ((x & y) == 0) t.at(x, y) = x | y;
  return make_effect_algebra(t);
}

IntroAdjointnessResult check_intro_adjointness(const EffectAlgebra& e) {
  IntroAdjointnessResult res;
  const std::size_t n = e.size();
  const Poset& p = e.order();
  for (Element x = 0; x < n && res.holds_globally; ++x)
    for (Element y = 0; y < n && res.holds_globally; ++y) {
      const Subset cone = upper_cone(p, x, e.comp(y));
      // y' <= every member of the cone, so the products are defined
      const Subset prod = odot(e, y, cone);
      const Subset left_set = lower_cone(p, prod);
      const Subset lu = lower_cone(p, cone);
      for (Element z = 0; z < n; ++z) {
        bool left = set_leq(p, left_set, upper_cone(p, lower_cone(p, y, z)));
        bool right = set_leq(p, lu, upper_cone(p, implies(e, y, z)));
        if (left != right) {
          res.holds_globally = false;
          res.failing_triple = std::vector<Element>{x, y, z};
          break;
        }
      }
    }
  res.monotonicity = is_monotonous(e);
  return res;
}

}  // namespace effalg
