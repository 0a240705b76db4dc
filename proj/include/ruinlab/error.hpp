#ifndef RUINLAB_ERROR_HPP
#define RUINLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ruinlab {

enum class ErrorKind {
    DegenerateVolatility,
    BadUniform,
    BadGrid,
    BadCapital,
    BadInput,
    DivergentFunctional,
    BadB,
    InconclusiveCert,
    MgfDiverges,
    NonContracting,
    NeedsExponentialClaims,
    NoPowerLawRegime,
    ModeContamination,
    BadTail,
    InsufficientData,
    BadFormat,
    ConfigError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace ruinlab

#endif
