#pragma once

#include <stdexcept>
#include <string>

namespace tropjac {

enum class ErrorCode {
    E_JSON,          // malformed input file / JSON
    E_LENGTH,        // nonpositive or non-rational edge length
    E_POLARIZATION,  // polarization not strictly positive
    E_ID,            // unknown or duplicate vertex/edge id
    E_DEGREE,        // degree mismatch
    E_DOMAIN,        // precondition violated (empty subcurve, disconnected graph, ...)
    E_CAP,           // size cap exceeded without --force
    E_VALIDATION,    // decomposition validation failed
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::E_JSON: return "E_JSON";
        case ErrorCode::E_LENGTH: return "E_LENGTH";
        case ErrorCode::E_POLARIZATION: return "E_POLARIZATION";
        case ErrorCode::E_ID: return "E_ID";
        case ErrorCode::E_DEGREE: return "E_DEGREE";
        case ErrorCode::E_DOMAIN: return "E_DOMAIN";
        case ErrorCode::E_CAP: return "E_CAP";
        case ErrorCode::E_VALIDATION: return "E_VALIDATION";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tropjac
