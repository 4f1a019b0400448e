#include "resolve.hpp"

#include <cstdlib>
#include <filesystem>

#include "malcev/algebra_io.hpp"
#include "malcev/congruence.hpp"
#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/presets.hpp"

namespace malcev::cli {

FiniteAlgebra load_algebra(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return read_algebra_file(spec).algebra;
  if (auto a = fixtures::builtin(spec)) return *a;
  throw InvalidArgument("'" + spec + "' is neither an algebra file nor a builtin fixture");
}

VarietySpec load_variety(const std::string& spec, const Signature& context, const std::string& generated_by) {
  if (spec.starts_with("gen:")) {
    return presets::generated_by(load_algebra(spec.substr(4)), spec);
  }
  if (std::filesystem::is_regular_file(spec)) {
    auto list = read_identity_file(spec, context);
    if (!generated_by.empty()) {
      auto a = load_algebra(generated_by);
      if (!(a.signature() == list.signature)) {
        throw SignatureMismatch("'" + generated_by + "' is not over the signature of '" + spec + "'");
      }
      return presets::from_base_generated_by(std::filesystem::path(spec).stem().string(),
                                             std::move(list.identities), a);
    }
    return presets::from_base(std::filesystem::path(spec).stem().string(), list.signature,
                              std::move(list.identities));
  }
  return presets::make_preset(spec, context);
}

std::size_t congruence_guard() {
  const char* env = std::getenv("MALCEV_GUARD");
  if (env == nullptr || *env == '\0') return kDefaultCongruenceGuard;
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0) throw InvalidArgument("MALCEV_GUARD must be a positive integer");
  return value;
}

}  // namespace malcev::cli
