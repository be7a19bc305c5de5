#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "defcoh/la_vector_space.hpp"
#include "defcoh/lie_algebra.hpp"
#include "defcoh/representation.hpp"
#include "defcoh/vb_algebra.hpp"

namespace defcoh {

enum class InstanceKind { LieAlgebra, Representation, VBAlgebra, LAVectorSpace };

std::string kind_name(InstanceKind kind);

/// A parsed and validated instance file. Exactly the member matching `kind`
/// is engaged.
struct Instance {
  InstanceKind kind;
  std::string name;
  std::optional<std::uint64_t> seed;
  std::optional<LieAlgebra> lie;
  std::optional<Representation> rep;
  std::optional<VBAlgebra> vb;
  std::optional<LAVectorSpace> la;
};

/// The ambient-dimension cap: DEFCOH_MAX_DIM when set, 6 otherwise.
int ambient_dim_cap();

/// Parses and validates an instance file. ParseError for malformed text,
/// ValidationError naming the first violated invariant and the offending
/// indices.
Instance parse_instance(const std::string& path);
Instance parse_instance_text(const std::string& text);

/// Canonical serialization; parse(serialize(x)) = x exactly. Rationals are
/// written "p" or "p/q", structure constants as sparse (i, j, k, value)
/// triples with i < j.
std::string serialize(const Instance& instance);

Instance make_instance(LieAlgebra lie, std::string name, std::optional<std::uint64_t> seed = std::nullopt);
Instance make_instance(Representation rep, std::string name, std::optional<std::uint64_t> seed = std::nullopt);
Instance make_instance(VBAlgebra vb, std::string name, std::optional<std::uint64_t> seed = std::nullopt);
Instance make_instance(LAVectorSpace la, std::string name, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace defcoh
