#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcert/homology.h"
#include "twistcert/presentation.h"
#include "twistcert/surfaces.h"
#include "twistcert/words.h"

namespace twistcert {

enum class CertFlavor { kExtendedGroup, kTwistSubgroup, kEvenPowerExtended, kEvenPowerTwist };

std::string_view cert_flavor_name(CertFlavor f);
std::optional<CertFlavor> cert_flavor_from_name(std::string_view name);

// Largest |n| the builders accept by default.
inline constexpr long kDefaultMaxAbsN = 32;

// P = b a2 a3 b a1 a2 c2^-1 and Q = c3^-1 b a2 a3 b a1 a2, the two factors of
// c1 = P Q obtained from the star relation.
const Word& rel1_left_factor();
const Word& rel1_right_factor();

struct Rel1 {
  Word lhs;  // c1^n
  Word rhs;  // P^n Q^n
  ProofScript script;  // lhs -> rhs
};

// c1^n = P^n Q^n, with a derivation for the concrete n.
Rel1 build_rel1(long n);

struct HomologyRecord {
  bool pass = false;
  std::string assignment_id;
};

struct MembershipRecord {
  DetValue det_x;
  DetValue det_y;
  std::optional<DetValue> det_y_alt;
  bool pass = false;
  std::string note;
};

// t^n_c = [X, Y] together with everything needed to check it.
struct Certificate {
  CertFlavor flavor = CertFlavor::kExtendedGroup;
  SurfaceSpec surface;
  CurveClass curve;
  long n = 0;
  TheoremCase tcase;
  Word target;
  Word x;
  Word y;
  ProofScript script;  // target -> commutator(x, y)
  // When the determinant of the reflection is unknown the certificate also
  // carries the candidate with r in place of rh; exactly one of y, y_alt lies
  // in T(S).
  std::optional<Word> y_alt;
  std::optional<ProofScript> alt_script;
  HomologyRecord homology;
  std::optional<MembershipRecord> membership;
};

struct BuildOptions {
  long max_abs_n = kDefaultMaxAbsN;
};

// Throws Unrealizable, NotCovered, OutOfScope from case selection and
// std::out_of_range when |n| exceeds the limit.
Certificate build_theorem1_certificate(const SurfaceSpec& surface, const CurveClass& curve, long n,
                                       const BuildOptions& options = {});
Certificate build_theorem2_certificate(const SurfaceSpec& surface, const CurveClass& curve, long n,
                                       const BuildOptions& options = {});
// flavor must be kEvenPowerExtended or kEvenPowerTwist; the twist variant
// throws NotCovered unless S \ c is nonorientable of genus >= 2.
Certificate build_even_power_certificate(const SurfaceSpec& surface, const CurveClass& curve,
                                         long n, CertFlavor flavor,
                                         const BuildOptions& options = {});

// Dispatches on flavor.
Certificate build_certificate(CertFlavor flavor, const SurfaceSpec& surface,
                              const CurveClass& curve, long n, const BuildOptions& options = {});

struct CertificateReport {
  bool ok = false;
  bool script_ok = false;
  bool homology_ok = false;
  bool membership_ok = true;  // vacuous for extended flavors
  std::vector<std::string> lines;  // human-readable findings, stable order
};

// Recomputes every check from the words and the script; the records stored in
// the certificate are not trusted.
CertificateReport verify_certificate(const Certificate& cert);

// Text form with one `key: value` per line. When `script_path` is given the
// scripts are referenced by path (the alternate at `<path>.alt`) instead of
// being embedded.
std::string format_certificate(const Certificate& cert,
                               const std::optional<std::string>& script_path = std::nullopt);

// Resolves a `script:` path to its text.
using ScriptLoader = std::function<std::string(const std::string& path)>;

Certificate parse_certificate(std::string_view text, const ScriptLoader& loader = {});
Certificate read_certificate_file(const std::filesystem::path& path);

}  // namespace twistcert
