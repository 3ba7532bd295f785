#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "o13/extended.hpp"
#include "o13/k4.hpp"
#include "o13/mat4.hpp"

namespace o13 {

enum class Variance : std::uint8_t { up, down };

/// Numeric rank-n tensor over four-dimensional spacetime (n <= 4) carrying
/// per-index variance and a K4 quartet label. The label fixes how the
/// tensor reflects: apply the defining reflection matrix to every index,
/// then multiply all components by the label's character sign.
///
/// Components are stored dense (4^n reals), row-major with the first index
/// slowest. rep_name is opaque metadata (e.g. an SO+(1,3) irrep string)
/// and never participates in arithmetic.
class RepTensor {
 public:
  /// Rank-0 zero scalar with trivial label.
  RepTensor();

  RepTensor(std::vector<Variance> variance, K4Charge label,
            std::vector<double> components, std::string rep_name = "");

  static RepTensor scalar(double value, K4Charge label = k4_one);
  static RepTensor vector4(const Vec4& components, Variance var,
                           K4Charge label, std::string rep_name = "");

  int rank() const { return static_cast<int>(variance_.size()); }
  K4Charge label() const { return label_; }
  const std::vector<Variance>& variance() const { return variance_; }
  const std::vector<double>& components() const { return components_; }
  std::vector<double>& components() { return components_; }
  const std::string& rep_name() const { return rep_name_; }
  void set_rep_name(std::string name) { rep_name_ = std::move(name); }

  double value() const;  // rank-0 only
  double at(const std::vector<int>& idx) const;
  double& at(const std::vector<int>& idx);

  Vec4 as_vec4() const;  // rank-1 only

  RepTensor operator*(double s) const;
  RepTensor operator-() const;

 private:
  std::vector<Variance> variance_;
  K4Charge label_ = k4_one;
  std::vector<double> components_;
  std::string rep_name_;
};

/// Outer product; variances concatenate, labels multiply in K4.
RepTensor tensor_product(const RepTensor& a, const RepTensor& b);

/// Einstein sum over a distinct up/down index pair; rank drops by two and
/// the label is unchanged. Same-variance pairs are rejected (raise or
/// lower first).
RepTensor contract(const RepTensor& t, int i, int j);

/// Metric contraction on index i: variance flag flips, label unchanged,
/// components negate where the index is spatial.
RepTensor raise_lower(const RepTensor& t, int i);

/// Defining reflection matrix on every index (the same matrix serves both
/// variances since the defining reflections are symmetric involutions),
/// then the label's character sign on all components.
RepTensor apply_reflection(const RepTensor& t, K4Charge r);

/// Full O(1,3) action: to_matrix(e) on up indices, its inverse transpose
/// on down indices, then the label sign of e's reflection sector.
RepTensor transform(const RepTensor& t, const ExtendedElement& e);

/// Group action on a rank-1 tensor: label-correct reflection first, then
/// the Lorentz transform; the label rides along unchanged.
RepTensor act(const ExtendedElement& e, const RepTensor& v);

/// Same shape, same label, components within tol.
bool approx_equal(const RepTensor& a, const RepTensor& b, double tol);

// -- canonical objects -------------------------------------------------

RepTensor metric_lower();  // g_{mn}, label 1
RepTensor metric_upper();  // g^{mn}, label 1

/// Totally antisymmetric rank-4 tensor, all indices down, eps_{0123} = +1,
/// label PT. Raising all four indices with the metric multiplies the
/// components by det g = -1.
RepTensor levi_civita();

/// Contravariant permutation symbol normalized eps^{0123} = +1 (the usual
/// electrodynamics convention), label PT. Note this is the negative of the
/// index-raised levi_civita().
RepTensor levi_civita_upper();

RepTensor coordinate_vector(double t, const Vec3& x);  // label 1, up
RepTensor momentum_vector(double energy, const Vec3& p);  // label T, up

/// M^{ab} = x^a p^b - x^b p^a for a coordinate-type x and momentum-type p;
/// antisymmetric, label T. Row 0 carries the mass moment N, the spatial
/// block the angular momentum J.
RepTensor angular_momentum(const RepTensor& x, const RepTensor& p);

/// Faraday tensor F^{mn} with -E in row 0 and B in the spatial block;
/// label T, same quartet as the angular momentum tensor.
RepTensor faraday(const Vec3& e_field, const Vec3& b_field);

/// Reads (E, B) back out of a Faraday-layout rank-2 tensor.
void faraday_fields(const RepTensor& f, Vec3& e_field, Vec3& b_field);

/// W^m = 1/2 g^{ma} eps_{ansr} M^{ns} p^r: the Pauli-Lubanski vector in
/// contravariant components, (J.p, E J - p x N); label PT.
RepTensor pauli_lubanski(const RepTensor& m, const RepTensor& p);

/// Hodge dual F~^{mn} = 1/2 eps^{mnab} F_{ab} (contravariant symbol);
/// label P for a label-T Faraday tensor.
RepTensor hodge_dual(const RepTensor& f);

struct ObserverFields {
  RepTensor electric;  // E^m = F^{mn} u_n, label 1
  RepTensor magnetic;  // B^m = F~^{mn} u_n, label PT
};

/// Fields seen by an observer of unit four-velocity u (normalization is
/// checked to 1e-9). In the rest frame these reduce to (0, E) and (0, B).
ObserverFields observer_fields(const RepTensor& f, const RepTensor& u);

/// Checks the time reversal of a label-T rank-2 tensor equals minus its
/// bare defining-parity conjugate, componentwise.
bool malament_identity_check(const RepTensor& f);

// -- vector representation classification ------------------------------

/// One of the four consistent four-vector representations of O(1,3).
/// sign pair = how its P and T operators differ from the defining ones.
struct VectorRepKind {
  char short_name;             // 'c', 'm', 'a', 'p'
  std::string_view long_name;  // coordinate, momentum, axial, polarization
  int p_sign;
  int t_sign;
  K4Charge quartet_label;
};

/// The four kinds in conventional order (c, m, a, p).
const std::array<VectorRepKind, 4>& vector_rep_kinds();
const VectorRepKind& vector_rep_kind(char short_name);

/// Componentwise charges of the kind, e.g. (T, P, P, P) for coordinate.
ChargeVector kind_charge_vector(const VectorRepKind& kind);

/// The reflection operator of the kind: the kind's sign for r times the
/// defining matrix. r must be P or T.
Mat4 reflection_operator(const VectorRepKind& kind, K4Charge r);

/// Brute force over all 4^4 componentwise charge assignments, keeping the
/// rotation-consistent (equal spatial charges) and boost-consistent
/// (spatial charge * PT = time charge) ones. Exactly four survive.
std::vector<ChargeVector> enumerate_consistent_vector_reps();

// -- serialization ------------------------------------------------------

/// JSON text: rank, per-index variance, label name, flat component list
/// (row-major, first index slowest), optional rep_name.
std::string serialize_tensor(const RepTensor& t);
RepTensor deserialize_tensor(std::string_view json_text);

}  // namespace o13
