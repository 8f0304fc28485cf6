#ifndef TFGPE_ERRORS_HPP
#define TFGPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tfgpe {

// Parameter set violates the disk-supported regime (Gamma2 <= 0,
// Gamma12 < 0, or the disk condition fails).
struct InvalidRegime : std::runtime_error {
    explicit InvalidRegime(const std::string& msg) : std::runtime_error(msg) {}
};

// R1 == R2 or Gamma12 == 0: the system reduces to a scalar equation,
// which this code deliberately does not model.
struct DegenerateCase : std::runtime_error {
    explicit DegenerateCase(const std::string& msg) : std::runtime_error(msg) {}
};

struct GridMismatch : std::runtime_error {
    explicit GridMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NewtonDiverged : std::runtime_error {
    explicit NewtonDiverged(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& msg) : std::runtime_error(msg) {}
};

// Outer-expansion terms are singular at z = 0; evaluation below the
// configured z_min is refused.
struct NearOriginBlowup : std::runtime_error {
    explicit NearOriginBlowup(const std::string& msg) : std::runtime_error(msg) {}
};

// The truncated lambda sum went nonpositive somewhere on supp(chi_eps);
// eps is too large for the requested orders.
struct NegativeLambda : std::runtime_error {
    explicit NegativeLambda(const std::string& msg) : std::runtime_error(msg) {}
};

// A converged iterate has an interior sign change (spurious branch).
struct NonPositive : std::runtime_error {
    explicit NonPositive(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateFit : std::runtime_error {
    explicit DegenerateFit(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tfgpe

#endif
