#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace melonforge {

enum class Errc {
  // bubbles and color sets
  InvalidColorCount,
  NotRegular,
  NotProperlyColored,
  NotBipartite,
  NotConnected,
  EmptyOrFullColorSet,
  VertexNotFound,
  SizeLimitExceeded,
  // gluings, trees, maps
  CertificateMismatch,
  InvalidGluing,
  NotATreeGluing,
  InvalidMap,
  NotAPlaneTree,
  EdgeIsBridge,
  NonQuarticBubble,
  // Feynman graphs
  MissingScaling,
  CapExceeded,
  InvalidMatching,
  NotGm,
  NotTotallyUnbalanced,
  // numerics
  NoConvergence,
  OutsideBranch,
  QuadratureDiverged,
  SingularDiagnostic,
  GradientTooLarge,
  LogDomain,
  OrderCap,
  InvalidArgument,
  // serialization
  Parse,
  Io,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. The code identifies the contract that
/// was violated; the message names the offending vertex, edge or value.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace melonforge
