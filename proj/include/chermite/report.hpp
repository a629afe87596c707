#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chermite {

/// Registered acceptance tolerances, one per identity. Every residual check
/// in the library compares against one of these; nothing compares against an
/// ad-hoc threshold.
namespace tolerances {
inline constexpr double kMehlerReal = 1e-10;
inline constexpr double kEgf = 1e-11;
inline constexpr double kGfSingle = 1e-10;
inline constexpr double kPartialMehler = 1e-9;
inline constexpr double kMehler1 = 1e-9;
inline constexpr double kMehler1Diag = 1e-10;
inline constexpr double kLaguerreDiag = 1e-11;
inline constexpr double kEigen = 0.0;
inline constexpr double kNorm = 1e-8;
inline constexpr double kHeat = 1e-9;
inline constexpr double kHeatPrintedMismatch = 1e-9;
inline constexpr double kMehler2 = 1e-9;
inline constexpr double kMehlerPc1 = 1e-9;
inline constexpr double kMehlerSpecialized = 1e-9;
inline constexpr double kZeroValue = 0.0;
inline constexpr double kSelfReciprocity = 1e-6;
inline constexpr double kFourierEigen = 1e-6;
inline constexpr double kGaussInt = 1e-10;
inline constexpr double kIntRep = 1e-8;
}  // namespace tolerances

/// Residual convention used across the project:
/// rel_err = |lhs - rhs| / (1 + max(|lhs|, |rhs|)).
double identity_rel_err(std::complex<double> lhs, std::complex<double> rhs);

/// One executed identity check: both sides, residuals, pass flag and
/// evaluation metadata (truncation order, node counts, error tags).
struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, std::complex<double>>> params;
  std::complex<double> lhs{};
  std::complex<double> rhs{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  std::map<std::string, std::string> meta;

  /// Fills abs_err / rel_err from lhs and rhs, and sets pass from the given
  /// tolerance.
  void finish(double tolerance);

  /// Single-line JSON with complex numbers as {"re": ..., "im": ...}.
  std::string to_json_line() const;
};

}  // namespace chermite
