#include "ruinlab/error.hpp"

namespace ruinlab {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateVolatility: return "DegenerateVolatility";
        case ErrorKind::BadUniform: return "BadUniform";
        case ErrorKind::BadGrid: return "BadGrid";
        case ErrorKind::BadCapital: return "BadCapital";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::DivergentFunctional: return "DivergentFunctional";
        case ErrorKind::BadB: return "BadB";
        case ErrorKind::InconclusiveCert: return "InconclusiveCert";
        case ErrorKind::MgfDiverges: return "MgfDiverges";
        case ErrorKind::NonContracting: return "NonContracting";
        case ErrorKind::NeedsExponentialClaims: return "NeedsExponentialClaims";
        case ErrorKind::NoPowerLawRegime: return "NoPowerLawRegime";
        case ErrorKind::ModeContamination: return "ModeContamination";
        case ErrorKind::BadTail: return "BadTail";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::BadFormat: return "BadFormat";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

}  // namespace ruinlab
