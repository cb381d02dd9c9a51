#pragma once

#include <stdexcept>
#include <string>

namespace hykin {

/// Base class for all solver errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid scenario or grid configuration.
class config_error : public error {
public:
    using error::error;
};

/// A distribution produced non-physical moments (rho <= 0, T <= 0).
class degenerate_state_error : public error {
public:
    using error::error;
};

/// Hydrodynamic state lost pressure or density positivity.
class positivity_error : public error {
public:
    using error::error;
};

/// An operation was called outside its contract (missing indicator,
/// non-adjacent regime transition, ...).
class contract_violation : public error {
public:
    using error::error;
};

/// Numerical self-check failed (e.g. excessive imaginary residue in a
/// spectral collision evaluation).
class numerical_consistency_error : public error {
public:
    using error::error;
};

/// Spectral support radius incompatible with the velocity box.
class aliasing_config_error : public config_error {
public:
    using config_error::config_error;
};

/// A moving obstacle reached the edge of the physical domain.
class scenario_end_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

} // namespace hykin
