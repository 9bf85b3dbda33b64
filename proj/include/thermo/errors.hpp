#pragma once

#include <stdexcept>
#include <string>

namespace thermo {

/// Parameter outside the domain where a formula is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The readout carries no temperature information (∂_T⟨M⟩ = 0), so δT is undefined.
class DegenerateSignalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear system has a drift eigenvalue with non-negative real part.
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-step integration could not certify the requested tolerance.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace thermo
