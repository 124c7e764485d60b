#ifndef SECST_ERRORS_HPP
#define SECST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace secst {

/// Thrown when an operation is evaluated at the vacuum (zero mean photon
/// number), where photon-statistics ratios are undefined.
class VacuumError : public std::domain_error {
public:
    explicit VacuumError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a root finder cannot bracket a sign change.
class NoCrossingError : public std::runtime_error {
public:
    explicit NoCrossingError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an index or parameter exceeds the documented support envelope.
class EnvelopeError : public std::domain_error {
public:
    explicit EnvelopeError(const std::string& what) : std::domain_error(what) {}
};

}

#endif
