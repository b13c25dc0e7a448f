#include "twistcert/homology.h"

#include "twistcert/error.h"

namespace twistcert {

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus), form_(2 * static_cast<std::size_t>(genus)) {
  if (genus < 1) throw DimensionMismatch("symplectic space needs genus >= 1");
  for (std::size_t i = 0; i < static_cast<std::size_t>(genus); ++i) {
    form_(2 * i, 2 * i + 1) = 1;
    form_(2 * i + 1, 2 * i) = -1;
  }
}

std::int64_t SymplecticSpace::pairing(std::span<const std::int64_t> x,
                                      std::span<const std::int64_t> y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw DimensionMismatch("class vector has wrong length for the symplectic space");
  }
  std::vector<std::int64_t> jy = form_.apply(y);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < dim(); ++i) sum = checked_add(sum, checked_mul(x[i], jy[i]));
  return sum;
}

std::vector<std::int64_t> SymplecticSpace::basis_vector(std::size_t i) const {
  std::vector<std::int64_t> v(dim(), 0);
  v.at(i) = 1;
  return v;
}

IntMatrix transvection(const SymplecticSpace& space, std::span<const std::int64_t> v, int sign) {
  if (v.size() != space.dim()) {
    throw DimensionMismatch("transvection vector has wrong length for the symplectic space");
  }
  if (sign != 1 && sign != -1) throw Error("transvection sign must be +1 or -1");
  // <x, v> = x^T J v, so M = I + sign * v (J v)^T.
  const std::vector<std::int64_t> jv = space.form().apply(v);
  IntMatrix m = IntMatrix::identity(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    for (std::size_t j = 0; j < space.dim(); ++j) {
      m(i, j) = checked_add(m(i, j), checked_mul(sign, checked_mul(v[i], jv[j])));
    }
  }
  return m;
}

void HomologyAssignment::add(const std::string& name, IntMatrix m, int form_sign) {
  if (m.dim() != space_.dim()) {
    throw DimensionMismatch("matrix for '" + name + "' has dimension " + std::to_string(m.dim()) +
                            ", space has " + std::to_string(space_.dim()));
  }
  const std::int64_t d = m.det();
  if (d != 1 && d != -1) throw NonInvertibleAssignment(name);
  IntMatrix expected = form_sign > 0 ? space_.form() : -space_.form();
  if (m.transpose() * space_.form() * m != expected) {
    throw Error("matrix for '" + name + "' does not " +
                (form_sign > 0 ? "preserve" : "negate") + " the intersection form");
  }
  IntMatrix inv = m.inverse();
  entries_.insert_or_assign(name, Entry{std::move(m), std::move(inv), form_sign});
}

const IntMatrix& HomologyAssignment::matrix(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw MissingGenerator(std::string(name));
  return it->second.matrix;
}

const IntMatrix& HomologyAssignment::inverse(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw MissingGenerator(std::string(name));
  return it->second.inverse;
}

int HomologyAssignment::form_sign(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw MissingGenerator(std::string(name));
  return it->second.form_sign;
}

std::vector<std::string> HomologyAssignment::names() const {
  std::vector<std::string> out;
  for (const auto& [name, entry] : entries_) out.push_back(name);
  return out;
}

IntMatrix evaluate_rep(const Word& w, const HomologyAssignment& ha) {
  IntMatrix result = IntMatrix::identity(ha.space().dim());
  for (const Letter& l : w) {
    result = result * (l.sign() > 0 ? ha.matrix(l.name()) : ha.inverse(l.name()));
  }
  return result;
}

HomologyAssignment genus3_assignment() {
  SymplecticSpace space(3);
  const std::vector<std::int64_t> a = space.basis_vector(0);     // x1
  const std::vector<std::int64_t> beta = space.basis_vector(1);  // y1
  const std::vector<std::int64_t> zero(space.dim(), 0);

  HomologyAssignment ha("genus3", space);
  ha.add("b", transvection(space, beta));
  for (const char* name : {"a1", "a2", "a3"}) ha.add(name, transvection(space, a));
  for (const char* name : {"c1", "c2", "c3"}) ha.add(name, transvection(space, zero));
  const std::int64_t r_diag[] = {1, -1, 1, -1, 1, -1};
  ha.add("r", IntMatrix::diagonal(r_diag), -1);
  return ha;
}

HomologyAssignment genus3_extended_assignment() {
  HomologyAssignment ha = genus3_assignment();
  HomologyAssignment ext("genus3-ext", ha.space());
  for (const std::string& name : ha.names()) ext.add(name, ha.matrix(name), ha.form_sign(name));
  const SymplecticSpace& space = ext.space();
  ext.add("h", transvection(space, space.basis_vector(2)));
  ext.add("c", transvection(space, space.basis_vector(0)));
  ext.add("s", ha.matrix("r"), -1);
  return ext;
}

HomologyAssignment assignment_by_id(std::string_view id) {
  if (id == "genus3") return genus3_assignment();
  if (id == "genus3-ext") return genus3_extended_assignment();
  throw Error("unknown assignment '" + std::string(id) + "' (known: genus3, genus3-ext)");
}

Figure2Basis::Figure2Basis(int k) : k_(k) {
  if (k < 0) throw Error("the orientable-complement basis needs k >= 0");
  labels_ = {"a1", "b", "c2", "d", "h"};
  for (int i = 1; i <= k; ++i) labels_.push_back("e" + std::to_string(i));
  for (int i = 1; i <= k; ++i) labels_.push_back("f" + std::to_string(i));
}

std::size_t Figure2Basis::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw Error("'" + std::string(label) + "' is not a basis curve of the orientable-complement embedding for k = " +
              std::to_string(k_));
}

IntMatrix reflection_matrix_fig2(int k) {
  Figure2Basis basis(k);
  IntMatrix m(basis.dim());
  auto image = [&](std::string_view from, std::string_view to, std::int64_t coeff) {
    m(basis.index_of(to), basis.index_of(from)) = coeff;
  };
  image("a1", "a1", 1);
  image("b", "b", -1);
  image("c2", "c2", 1);
  image("d", "d", -1);
  image("h", "h", 1);
  image("h", "d", -1);
  for (int i = 1; i <= k; ++i) {
    image("e" + std::to_string(i), "e" + std::to_string(i), -1);
    image("f" + std::to_string(i), "f" + std::to_string(i), 1);
  }
  return m;
}

DetContext DetContext::figure2(const SurfaceSpec& surface, int k) {
  if (surface.orientable) throw Error("the orientable-complement embedding lives on a nonorientable surface");
  if (k < 0 || surface.genus != 2 * (k + 3)) {
    throw Error("the orientable-complement embedding with k = " + std::to_string(k) + " needs genus " +
                std::to_string(2 * (k + 3)) + ", got " + surface.to_string());
  }
  DetContext ctx;
  ctx.figure2_k = k;
  return ctx;
}

std::string DetValue::to_string() const {
  std::string out = sign > 0 ? "+" : "-";
  return r_parity ? out + "det(r)" : out + "1";
}

DetValue det_symbolic(const Word& w, const SurfaceSpec& surface, const DetContext& ctx) {
  if (surface.orientable) {
    throw Error("the determinant homomorphism is used on nonorientable surfaces only");
  }
  std::optional<int> r_det;
  if (ctx.figure2_k) r_det = static_cast<int>(reflection_matrix_fig2(*ctx.figure2_k).det());

  DetValue value;
  for (const Letter& l : w) {
    const Generator g = Alphabet::standard().resolve(l.name());
    switch (g.kind) {
      case GeneratorKind::kTwist:
        break;
      case GeneratorKind::kCrosscapSlide:
      case GeneratorKind::kComplementHomeo:
        value.sign = -value.sign;
        break;
      case GeneratorKind::kReflection:
        if (r_det) {
          value.sign *= *r_det;
        } else {
          value.r_parity ^= 1;
        }
        break;
      case GeneratorKind::kCurveReverser:
        if (!ctx.s_in_twist_subgroup) throw UndefinedDet(l.name());
        break;
    }
  }
  return value;
}

int det_hom(const Word& w, const SurfaceSpec& surface, const DetContext& ctx) {
  DetValue v = det_symbolic(w, surface, ctx);
  if (!v.known()) throw UndefinedDet("r");
  return v.sign;
}

IntMatrix transvection_like(std::span<const std::int64_t> v, std::span<const std::int64_t> phi) {
  if (v.size() != phi.size()) throw DimensionMismatch("vector and functional differ in length");
  std::int64_t phi_v = 0;
  for (std::size_t i = 0; i < v.size(); ++i) phi_v = checked_add(phi_v, checked_mul(phi[i], v[i]));
  if (phi_v != 0) throw Error("functional does not vanish on the curve class");
  IntMatrix m = IntMatrix::identity(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      m(i, j) = checked_add(m(i, j), checked_mul(v[i], phi[j]));
    }
  }
  return m;
}

bool twist_det_is_one_fig2(int k, std::string_view label, std::span<const int> orientation_signs,
                           int sign) {
  Figure2Basis basis(k);
  if (orientation_signs.size() != basis.dim()) {
    throw DimensionMismatch("need one orientation sign per basis curve of the orientable-complement embedding");
  }
  const std::size_t idx = basis.index_of(label);
  std::vector<std::int64_t> v(basis.dim(), 0);
  std::vector<std::int64_t> phi(basis.dim(), 0);
  v[idx] = orientation_signs[idx] * sign;
  for (std::size_t j = 0; j < basis.dim(); ++j) {
    if (j != idx) phi[j] = orientation_signs[j];
  }
  return transvection_like(v, phi).det() == 1;
}

}  // namespace twistcert
