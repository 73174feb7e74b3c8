#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbisect/complex.hpp"
#include "orbisect/euler.hpp"
#include "orbisect/group.hpp"
#include "orbisect/hom.hpp"
#include "orbisect/presentation.hpp"
#include "orbisect/sectors.hpp"

// File formats and report serialization. All reports are deterministic:
// fixed key order, no timestamps, 2-space indentation, trailing newline, and
// every report embeds the content hashes of its inputs plus the subdivision
// count that was applied.
namespace orbisect::io {

std::string read_file(const std::string& path);
// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);
std::string sha256_hex(std::string_view data);

// {"order": n, "table": [[ids]]} or
// {"degree": d, "generators": [[image list]], "labels": optional}.
FiniteGroup group_from_json(const std::string& text);

// {"vertices": n, "maximal_simplices": [[ids]],
//  "action": {"generators": [[vertex perm]]} | {"elements": [[vertex perm]]}}.
// The generators form pairs with the construction generators of a
// permutation-built group; the elements form gives one permutation per
// element id.
EquivariantComplex complex_from_json(const std::string& text, const FiniteGroup& g);

// {"generators": k, "relators": [[signed 1-based ints]], "name": optional}.
GroupPresentation presentation_from_json(const std::string& text);

// A builtin token (Z; Zk:k, Z^k or Zk; Fk:k or Fk; C:n or Cn; D:n or Dn) or
// a presentation file path. Builtins are stamped by their canonical
// serialization, files by their bytes.
struct GammaInput {
  GroupPresentation presentation;
  std::string path;  // empty for builtins
  std::string hash;
};
GammaInput parse_gamma(const std::string& token);

struct InputStamp {
  std::string space_path, space_hash;
  std::string group_path, group_hash;
  std::string gamma_name, gamma_path, gamma_hash;  // may be empty (no gamma input)
};

std::string sector_report(const InputStamp& in, const SectorDecomposition& d,
                          const std::vector<HomClass>& classes, bool include_refined);
std::string euler_report(const InputStamp& in, const EulerReport& r,
                         const Rational& orbifold_total);
std::string leida_report(const InputStamp& in, const LeidaDecomposition& l,
                         const SectorDecomposition& d,
                         const std::vector<SectorCovering>& covering);
std::string covers_report(const InputStamp& in, const CoversResult& r);
std::string certificate_report(const InputStamp& in, const Certificate& c);

}  // namespace orbisect::io
