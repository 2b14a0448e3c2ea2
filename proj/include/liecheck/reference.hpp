#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/rootsys.hpp"
#include "liecheck/schubert.hpp"
#include "liecheck/weyl.hpp"

namespace liecheck::reference {

// Published co-minuscule sets (0-based) for the tabulated types, nullopt elsewhere.
std::optional<std::vector<int>> cominuscule_table(char type, int rank);
std::optional<int> dual_coxeter_table(char type, int rank);

// Positive roots of F4 listed by height, simple-root coordinates.
const std::vector<std::array<int, 4>>& f4_positive_roots();
inline constexpr std::array<int, 11> kF4HeightCounts = {4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1};

// g(input) == expected, or g(input) < 0 when expected is empty.
struct ImageIdentity {
  std::string anchor;
  WeylElement g;
  RootCoeffs input;
  std::optional<RootCoeffs> expected;
};

// Image identities of the translator v (and derived elements) for the
// constructed types. Empty for other types.
std::vector<ImageIdentity> image_identities(const RootSystem& rs, const ClassConstruction& cc);

}  // namespace liecheck::reference
