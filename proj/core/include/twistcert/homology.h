#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistcert/int_matrix.h"
#include "twistcert/surfaces.h"
#include "twistcert/words.h"

namespace twistcert {

// H_1 of a closed orientable genus-g surface with basis x1, y1, ..., xg, yg
// and <x_i, y_i> = +1.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  std::size_t dim() const { return form_.dim(); }
  const IntMatrix& form() const { return form_; }

  std::int64_t pairing(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;
  std::vector<std::int64_t> basis_vector(std::size_t i) const;

 private:
  int genus_;
  IntMatrix form_;
};

// Homology action of a twist about a curve of class v:
//   x -> x + sign * <x, v> * v
// Right twists use sign = +1 throughout.
IntMatrix transvection(const SymplecticSpace& space, std::span<const std::int64_t> v, int sign = 1);

// Generator name -> matrix on a symplectic space. Each entry records whether
// it preserves the form (+1) or negates it (-1); add() checks the claim.
class HomologyAssignment {
 public:
  HomologyAssignment(std::string id, SymplecticSpace space)
      : id_(std::move(id)), space_(std::move(space)) {}

  const std::string& id() const { return id_; }
  const SymplecticSpace& space() const { return space_; }

  // Throws NonInvertibleAssignment, or Error when the form claim fails.
  void add(const std::string& name, IntMatrix m, int form_sign = 1);

  bool covers(std::string_view name) const { return entries_.count(std::string(name)) != 0; }
  const IntMatrix& matrix(std::string_view name) const;
  const IntMatrix& inverse(std::string_view name) const;
  int form_sign(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  struct Entry {
    IntMatrix matrix;
    IntMatrix inverse;
    int form_sign;
  };
  std::string id_;
  SymplecticSpace space_;
  std::map<std::string, Entry, std::less<>> entries_;
};

// Product of assigned matrices in word order; inverse letters use exact
// inverses. Throws MissingGenerator.
IntMatrix evaluate_rep(const Word& w, const HomologyAssignment& ha);

// T embedded in a closed genus-3 surface so that every boundary curve c_i is
// null-homologous: [c1] = [c2] = [c3] = 0, [a1] = [a2] = [a3] = a = x1,
// [b] = beta = y1. R fixes a, negates beta and acts as (x_j, y_j) -> (x_j, -y_j)
// on the two remaining handles. Covers b, a1, a2, a3, c1, c2, c3, r.
HomologyAssignment genus3_assignment();

// genus3_assignment() plus the generators the certificates need:
//   h -> transvection along x2 (supported off T, commutes with T's twists)
//   c -> transvection along x1 (the curve of an even-power certificate)
//   s -> R (preserves c, reverses the orientation of its neighbourhood)
HomologyAssignment genus3_extended_assignment();

// Named assignments: "genus3", "genus3-ext".
HomologyAssignment assignment_by_id(std::string_view id);

// Basis of H_1(S; R) for T in a nonorientable S of genus g = 2(k + 3) with
// S \ c1 orientable: a1, b, c2, d, h, e1..ek, f1..fk. Here h is a curve.
class Figure2Basis {
 public:
  explicit Figure2Basis(int k);

  int k() const { return k_; }
  int genus() const { return 2 * (k_ + 3); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws Error for labels outside the basis.
  std::size_t index_of(std::string_view label) const;

 private:
  int k_;
  std::vector<std::string> labels_;
};

// Action of the reflection on the basis of the orientable-complement embedding:
//   a1 -> a1, b -> -b, c2 -> c2, d -> -d, h -> h - d, e_i -> -e_i, f_i -> f_i
// Column j is the image of basis vector j.
IntMatrix reflection_matrix_fig2(int k);

// Which determinant values are known while evaluating det_hom.
struct DetContext {
  std::optional<int> figure2_k;      // det r = det(reflection_matrix_fig2(k))
  bool s_in_twist_subgroup = false;  // s was chosen inside T(S)

  // Context for the orientable-complement embedding on the given surface; throws Error
  // unless the genus is 2(k + 3).
  static DetContext figure2(const SurfaceSpec& surface, int k);
};

// det f_* as a product of letter values, possibly times an unknown det r:
// value = sign * (det r)^(r_parity).
struct DetValue {
  int sign = 1;
  int r_parity = 0;

  bool known() const { return r_parity == 0; }
  std::string to_string() const;  // "+1", "-1", "+det(r)", "-det(r)"
};

DetValue det_symbolic(const Word& w, const SurfaceSpec& surface, const DetContext& ctx);

// Determinant homomorphism on a nonorientable surface: twists -> +1,
// crosscap slide y -> -1, h -> -1, r -> det of its matrix on that basis,
// s -> +1 when chosen in T(S). Value +1 decides membership in T(S).
// Throws UndefinedDet for letters without a known value, Error when the
// surface is orientable.
int det_hom(const Word& w, const SurfaceSpec& surface, const DetContext& ctx);

// The map x -> x + sign * phi(x) * v in the orientable-complement basis, where v is the
// basis vector of `label` scaled by its orientation sign and phi is the signed
// coordinate functional sum_j orientation_signs[j] * x_j with the label's own
// coordinate left out (a curve does not meet itself). Returns det == 1.
bool twist_det_is_one_fig2(int k, std::string_view label, std::span<const int> orientation_signs,
                           int sign = 1);

// General form: x -> x + phi(x) * v with phi(v) = 0 has determinant 1.
// Throws Error when phi(v) != 0.
IntMatrix transvection_like(std::span<const std::int64_t> v, std::span<const std::int64_t> phi);

}  // namespace twistcert
