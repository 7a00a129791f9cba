// Error types shared across the library.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fraclap {

// A pole of an analytic function was hit; carries the pole location.
class pole_error : public std::domain_error {
public:
    pole_error(const std::string& what, std::complex<double> where)
        : std::domain_error(what), pole_(where) {}
    std::complex<double> pole() const { return pole_; }

private:
    std::complex<double> pole_;
};

// An integrand produced a non-recoverable non-finite value.
class eval_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fraclap
