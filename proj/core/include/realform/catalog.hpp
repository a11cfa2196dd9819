#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "realform/lie.hpp"
#include "realform/sampler.hpp"

namespace realform {

/// theta-eigenspace data for one catalog entry. All spaces live in the
/// entry's algebra: h is the +1 eigenspace, m the -1 eigenspace, a a maximal
/// abelian subspace of m (semisimple elements), d = t cap h, t = d + a a
/// theta-invariant Cartan subalgebra.
struct CartanDecomposition {
  Subspace h, m, a, d, t;
};

class CatalogEntry {
 public:
  enum class ThetaKind { kConjugation, kNegTranspose };
  enum class GroupKind { kSL, kSp, kSO };

  const std::string& name() const { return name_; }
  const LieAlgebra& algebra() const { return *algebra_; }
  bool quasi_split_expected() const { return quasi_split_expected_; }
  int center_order() const { return center_order_; }
  GroupKind group_kind() const { return group_kind_; }
  std::size_t ambient_dim() const { return algebra_->ambient_dim(); }

  /// Cartan involution on the Lie algebra.
  Matrix theta(const Matrix& x) const;
  /// The lift of theta to the group.
  Matrix group_theta(const Matrix& g) const;
  /// Membership in the fixed matrix group (SL(n), Sp(4), SO(6)).
  bool group_contains(const Matrix& g) const;
  /// Is g = c*identity with c scalar (the center test for these groups).
  bool is_central(const Matrix& g) const;

  const CartanDecomposition& cartan() const { return cartan_; }
  /// Catalog seed: a regular nilpotent element of m.
  const Matrix& regular_nilpotent() const { return regular_nilpotent_; }

  /// Rational one-parameter families inside H (tori and unipotents).
  std::vector<Matrix> sample_h_elements(Sampler& rng, std::size_t count) const;

  /// Dimension used by regularity tests: dim a.
  std::size_t rank_a() const { return cartan_.a.dim(); }

 private:
  friend const CatalogEntry& catalog(const std::string& name);
  friend class CatalogBuilder;
  CatalogEntry() = default;

  std::string name_;
  std::shared_ptr<const LieAlgebra> algebra_;
  ThetaKind theta_kind_ = ThetaKind::kConjugation;
  GroupKind group_kind_ = GroupKind::kSL;
  Matrix conjugator_;
  bool quasi_split_expected_ = false;
  int center_order_ = 1;
  CartanDecomposition cartan_;
  Matrix regular_nilpotent_;
  std::vector<std::function<Matrix(const Rat&)>> torus_curves_;
  std::vector<Matrix> nilpotent_h_;
};

/// Immutable singleton access to the catalog.
const CatalogEntry& catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// Recomputes the eigenspace decomposition from the entry's involution and
/// validates every invariant (also run at catalog construction).
CartanDecomposition cartan_decompose(const CatalogEntry& entry);

/// Quasi-splitness test: abelianness of the centralizer of a in g, with a
/// non-commuting witness pair on failure, plus the regular-locus cross-check
/// m_reg = m cap g_reg on sampled points.
struct QuasiSplitResult {
  bool quasi_split = false;
  // Witness pair in c_g(a) with nonzero bracket (set when not quasi-split).
  std::optional<std::pair<Matrix, Matrix>> witness;
  // The same test applied to c_h(a) (see recorded note on the (QS1) reading).
  bool centralizer_in_h_abelian = false;
  // Cross-check: every sampled m-regular point was g-regular.
  bool sampled_regulars_all_g_regular = false;
  std::size_t samples_tested = 0;
};
QuasiSplitResult is_quasi_split(const CatalogEntry& entry,
                                std::uint64_t seed = Sampler::kDefaultSeed);

/// Conjugation action of a group element witness on m; checks that g
/// normalizes m and that the result stays in m.
Matrix isotropy_act(const CatalogEntry& entry, const Matrix& g,
                    const Matrix& x);

/// dim c_m(x) == dim a (Kostant--Rallis regularity: minimal centralizer).
bool is_regular(const CatalogEntry& entry, const Matrix& x);

}  // namespace realform
