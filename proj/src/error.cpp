#include "melonforge/error.hpp"

namespace melonforge {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidColorCount: return "InvalidColorCount";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotProperlyColored: return "NotProperlyColored";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::NotConnected: return "NotConnected";
    case Errc::EmptyOrFullColorSet: return "EmptyOrFullColorSet";
    case Errc::VertexNotFound: return "VertexNotFound";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::CertificateMismatch: return "CertificateMismatch";
    case Errc::InvalidGluing: return "InvalidGluing";
    case Errc::NotATreeGluing: return "NotATreeGluing";
    case Errc::InvalidMap: return "InvalidMap";
    case Errc::NotAPlaneTree: return "NotAPlaneTree";
    case Errc::EdgeIsBridge: return "EdgeIsBridge";
    case Errc::NonQuarticBubble: return "NonQuarticBubble";
    case Errc::MissingScaling: return "MissingScaling";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InvalidMatching: return "InvalidMatching";
    case Errc::NotGm: return "NotGm";
    case Errc::NotTotallyUnbalanced: return "NotTotallyUnbalanced";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::OutsideBranch: return "OutsideBranch";
    case Errc::QuadratureDiverged: return "QuadratureDiverged";
    case Errc::SingularDiagnostic: return "SingularDiagnostic";
    case Errc::GradientTooLarge: return "GradientTooLarge";
    case Errc::LogDomain: return "LogDomain";
    case Errc::OrderCap: return "OrderCap";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace melonforge
