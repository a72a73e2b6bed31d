#include "effalg/implication.hpp"

namespace effalg {

Subset implies(const EffectAlgebra& e, Element x, Element y) {
  return add_elem_set(e, e.comp(x), lower_cone(e.order(), x, y));
}

Subset implies(const EffectAlgebra& e, const Subset& a, const Subset& b) {
  return add_sets(e, set_complement(e, a), lower_cone(e.order(), a | b));
}

Subset implies(const EffectAlgebra& e, Element x, const Subset& b) {
  return implies(e, e.singleton(x), b);
}

Subset implies(const EffectAlgebra& e, const Subset& a, Element y) {
  return implies(e, a, e.singleton(y));
}

ImplicationTable::ImplicationTable(const EffectAlgebra& e) : labels_(e.labels()) {
  const std::size_t n = e.size();
  cells_.reserve(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) cells_.push_back(implies(e, x, y));
}

ImplicationTable implication_table(const EffectAlgebra& e) { return ImplicationTable(e); }

namespace {

// Runs `body`; a PreconditionError inside it counts as a clause failure.
template <class F>
void guarded(ClauseResult& c, std::vector<Element> witness, F&& body) {
  try {
    if (!body()) fail_once(c, std::move(witness));
  } catch (const PreconditionError& err) {
    fail_once(c, std::move(witness), err.what());
  }
}

}  // namespace

Report theorem2_suite(const EffectAlgebra& e) {
  Report r;
  r.title = "implication properties (i)-(xii)";
  const std::size_t n = e.size();
  const Poset& p = e.order();
  const Element zero = e.zero(), one = e.one();
  const ImplicationTable table(e);
  auto imp = [&](Element x, Element y) -> const Subset& { return table.entry(x, y); };

  auto& c1 = r.add("i");
  auto& c2 = r.add("ii");
  auto& c3 = r.add("iii");
  auto& c4 = r.add("iv");
  auto& c5 = r.add("v");
  auto& c6 = r.add("vi");
  auto& c7 = r.add("vii");
  auto& c8 = r.add("viii");
  auto& c9 = r.add("ix");
  auto& c10 = r.add("x");
  auto& c11 = r.add("xi");
  auto& c12 = r.add("xii", e.lattice() ? ClauseStatus::pass : ClauseStatus::skipped);
  if (!e.lattice()) c12.detail = "not a lattice effect algebra";

  for (Element a = 0; a < n; ++a) {
    const Element ac = e.comp(a);
    if (imp(zero, a) != e.singleton(one)) fail_once(c4, {a});
    if (imp(a, zero) != e.singleton(ac)) fail_once(c5, {a});
    if (imp(one, a) != p.down_set(a)) fail_once(c6, {a});
    for (Element b = 0; b < n; ++b) {
      const Subset& ab = imp(a, b);
      const Element bc = e.comp(b);
      if (!ab.is_subset_of(p.up_set(ac))) fail_once(c1, {a, b});
      if (p.leq(a, b) && ab != p.up_set(ac)) fail_once(c2, {a, b});
      if (p.leq(b, a)) {
        auto top = e.sum(ac, b);
        if (!top || ab != interval(p, ac, *top)) fail_once(c3, {a, b});
      }
      if (lower_cone(p, ab) != p.down_set(ac)) fail_once(c7, {a, b});
      guarded(c8, {a, b}, [&] { return odot(e, a, ab) == lower_cone(p, a, b); });
      guarded(c10, {a, b}, [&] {
        Subset via_lower = set_complement(e, odot(e, a, set_complement(e, lower_cone(p, a, b))));
        Subset via_upper = set_complement(e, odot(e, a, upper_cone(p, ac, bc)));
        return ab == via_lower && ab == via_upper;
      });
      if (e.lattice()) {
        if (imp(a, *meet(p, a, b)) != ab) fail_once(c12, {a, b});
      }
      for (Element c = 0; c < n; ++c) {
        const Element cc = e.comp(c);
        if (p.leq(b, c) && !ab.is_subset_of(imp(a, c))) fail_once(c9, {a, b, c});
        bool left = set_leq(p, ab, upper_cone(p, ac, cc));
        bool right = set_leq(p, imp(a, c), upper_cone(p, ac, bc));
        if (left != right) fail_once(c11, {a, b, c});
      }
    }
  }
  return r;
}

Report theorem4_suite(const EffectAlgebra& e) {
  Report r;
  r.title = "set-argument implication identities (i)-(vii)";
  const std::size_t n = e.size();
  const Poset& p = e.order();
  const Element zero = e.zero(), one = e.one();

  auto& c1 = r.add("i");
  auto& c2 = r.add("ii");
  auto& c3 = r.add("iii");
  auto& c4a = r.add("iv:U(a)->b=U(a)->U(b)");
  auto& c4b = r.add("iv:U(a)->U(b)=U(a',b')->a'");
  auto& c4c = r.add("iv:U(a',b')->a'=L(a')+L(a,b)");
  auto& c5 = r.add("v");
  auto& c6 = r.add("vi");
  auto& c7 = r.add("vii");

  for (Element a = 0; a < n; ++a) {
    const Element ac = e.comp(a);
    guarded(c1, {a}, [&] { return implies(e, implies(e, a, zero), zero) == e.singleton(a); });
    for (Element b = 0; b < n; ++b) {
      const Element bc = e.comp(b);
      const Subset ab = implies(e, a, b);
      guarded(c3, {a, b}, [&] { return implies(e, a, p.up_set(b)) == ab; });
      guarded(c4a, {a, b}, [&] { return implies(e, p.up_set(a), b) == implies(e, p.up_set(a), p.up_set(b)); });
      guarded(c4b, {a, b}, [&] {
        return implies(e, p.up_set(a), p.up_set(b)) == implies(e, upper_cone(p, ac, bc), ac);
      });
      guarded(c4c, {a, b}, [&] {
        return implies(e, upper_cone(p, ac, bc), ac) == add_sets(e, p.down_set(ac), lower_cone(p, a, b));
      });
      guarded(c5, {a, b}, [&] { return implies(e, a, lower_cone(p, a, b)) == e.singleton(ac); });
      guarded(c6, {a, b}, [&] { return implies(e, a, upper_cone(p, a, b)) == add_elem_set(e, ac, p.down_set(a)); });
      guarded(c7, {a, b}, [&] { return upper_cone(p, implies(e, a, upper_cone(p, a, b))) == e.singleton(one); });
      for (Element c = 0; c < n; ++c)
        guarded(c2, {a, b, c}, [&] { return implies(e, a, implies(e, b, c)) == implies(e, a, bc); });
    }
  }
  return r;
}

}  // namespace effalg
