#pragma once

#include <optional>
#include <string>

#include "hpdcover/family.hpp"

namespace hpdcover {

enum class FamilyKind { Normal, Laplace, PolyExp, StudentT };

/// Which concrete family to build. dof is present iff kind is StudentT.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Normal;
    std::optional<double> dof;
};

/// Parses the CLI string forms "normal", "laplace", "polyexp",
/// "student:<dof>". Throws UnsupportedSpec on anything else.
FamilySpec parse_family_spec(const std::string& text);

/// Builds a fully populated family. All families have unit scale; rescale
/// data externally. Normal and Laplace use closed forms throughout; the
/// polynomial-exponential family g(z) = (|z|+1) e^{-|z|} / 4 uses its exact
/// antiderivative for the cdf; Student-t is the deliberately non-logconcave
/// probe and is refused by every coverage-theory operation.
LocationFamily make_family(const FamilySpec& spec);

}  // namespace hpdcover
