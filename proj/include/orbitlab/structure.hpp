// Everything derived from one real form, with the cascade root vectors
// oriented along a holomorphic positive system.
#pragma once

#include "orbitlab/cascade.hpp"
#include "orbitlab/complex_roots.hpp"
#include "orbitlab/real_forms.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace orbitlab {

struct Structure {
  std::shared_ptr<const RealForm> form;
  CartanDecomposition cartan;
  CascadeData cascade;
  // Present when g has a compact Cartan (equal rank).
  std::optional<ComplexRootDatum> complex;
  std::optional<InnerProductOnT> ip;
  std::vector<QMatrix> weyl_k;
  std::vector<std::size_t> alpha;  // root index along +Y_j, per cascade root
  bool hermitian = false;          // centre of k separates the noncompact roots

  const AlgebraPtr& g() const { return form->algebra_ptr(); }
  const RestrictedRootDatum& restricted() const { return cascade.roots; }
  const ComplexRootDatum& roots() const;
  const InnerProductOnT& inner() const;
  /// Element of g with the given t-coordinates.
  QVec t_element(const QVec& t_coords) const { return cascade.t.combine(t_coords); }
};

Structure build_structure(const RealFormSpec& spec);

}  // namespace orbitlab
