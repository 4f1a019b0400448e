#pragma once

#include <cstddef>
#include <string>

#include "malcev/algebra.hpp"
#include "malcev/variety.hpp"

namespace malcev::cli {

// A path to an existing algebra file, else a builtin fixture name.
FiniteAlgebra load_algebra(const std::string& spec);

// Variety argument:
//   <preset>        see `malcev presets`
//   gen:<algebra>   variety generated by a finite algebra (file or builtin)
//   <path>          identity file; base only, named after the file, plus the
//                   decision procedure of `generated_by` when given
// Presets of the band family are realized over `context` when it is plural.
VarietySpec load_variety(const std::string& spec, const Signature& context,
                         const std::string& generated_by = {});

// Congruence-enumeration guard, from MALCEV_GUARD when set.
std::size_t congruence_guard();

}  // namespace malcev::cli
