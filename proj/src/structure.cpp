#include "orbitlab/structure.hpp"

#include <algorithm>

namespace orbitlab {

namespace {

/// Root whose dual element in t is a positive multiple of Y_j (basis vector j).
std::vector<std::size_t> roots_along_y(const ComplexRootDatum& d, const InnerProductOnT& ip, std::size_t r) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < r; ++j) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < d.roots.size() && !found; ++i) {
      const QVec x = ip.element_of(d.roots[i].a);
      bool along = sgn(x[j]) > 0;
      for (std::size_t m = 0; m < x.size() && along; ++m) along = m == j || sgn(x[m]) == 0;
      if (along) found = i;
    }
    if (!found) throw std::logic_error("build_structure: no root along Y_j");
    out.push_back(*found);
  }
  return out;
}

}  // namespace

const ComplexRootDatum& Structure::roots() const {
  if (!complex) throw std::logic_error(form->spec().name() + " has no compact Cartan");
  return *complex;
}

const InnerProductOnT& Structure::inner() const {
  if (!ip) throw std::logic_error(form->spec().name() + " has no compact Cartan");
  return *ip;
}

Structure build_structure(const RealFormSpec& spec) {
  Structure s;
  s.form = std::make_shared<const RealForm>(build_real_form(spec));
  const AlgebraPtr& g = s.form->algebra_ptr();
  s.cartan = cartan_decomposition(g);
  const RestrictedRootDatum d = restricted_roots(g, maximal_abelian_in_p(*s.form));
  s.cascade = build_cascade(d);
  if (!s.cascade.has_compact_cartan) return s;

  auto analyse = [&s, &g]() {
    s.complex = root_decomposition(g, s.cascade.t);
    s.ip = InnerProductOnT(s.cascade.t);
    s.alpha = roots_along_y(*s.complex, *s.ip, s.cascade.r);
  };
  analyse();

  // Flip X_j (j > 1) so that every alpha_j lies in the holomorphic system
  // containing alpha_1.
  if (auto hol = holomorphic_system_containing(*s.complex, s.alpha.front())) {
    std::vector<int> orientation(s.cascade.r, 1);
    bool flip = false;
    for (std::size_t j = 1; j < s.cascade.r; ++j) {
      const bool inside = std::find(hol->begin(), hol->end(), s.alpha[j]) != hol->end();
      if (!inside) {
        orientation[j] = -1;
        flip = true;
      }
    }
    if (flip) {
      s.cascade = build_cascade(d, orientation);
      analyse();
      hol = holomorphic_system_containing(*s.complex, s.alpha.front());
    }
    for (std::size_t i : s.alpha)
      if (std::find(hol->begin(), hol->end(), i) == hol->end())
        throw std::logic_error("build_structure: cascade roots not in one holomorphic system");
    s.complex->delta_n_plus = *hol;
    s.hermitian = true;
  }
  s.weyl_k = weyl_group_K(*s.complex, *s.ip);
  return s;
}

}  // namespace orbitlab
