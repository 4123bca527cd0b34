#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace bjlb {

using cplx = std::complex<double>;

enum class Field { real, complex };

inline const char* field_name(Field f) { return f == Field::real ? "real" : "complex"; }

/// sign(a) = a/|a| for a != 0, sign(0) = 0.
inline cplx sign(cplx a) {
  double m = std::abs(a);
  return m == 0.0 ? cplx(0.0, 0.0) : a / m;
}

inline cplx conj_sign(cplx a) { return std::conj(sign(a)); }

inline bool is_finite(cplx a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

struct no_support_functional : std::domain_error {
  no_support_functional() : std::domain_error("support functional undefined at 0") {}
};

struct degenerate_basis : std::runtime_error {
  explicit degenerate_basis(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bjlb
