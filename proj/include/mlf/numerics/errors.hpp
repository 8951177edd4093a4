#pragma once

#include <stdexcept>
#include <string>

namespace mlf {

/// Base of every exception thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters outside the documented domain.
struct domain_error : error {
  using error::error;
};

/// A gamma-function argument hit a non-positive integer.
struct pole_error : domain_error {
  using domain_error::domain_error;
};

/// Argument on a branch cut the method cannot handle.
struct branch_error : domain_error {
  using domain_error::domain_error;
};

/// Argument outside the validity sector of a particular method.
struct sector_error : domain_error {
  using domain_error::domain_error;
};

/// A method failed to reach its tolerance. `regime` names the method.
struct convergence_error : error {
  std::string regime;
  convergence_error(std::string regime_name, const std::string& what)
      : error(regime_name + ": " + what), regime(std::move(regime_name)) {}
};

/// The result is finite in exact arithmetic but not representable.
struct overflow_error : error {
  using error::error;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw domain_error(what);
}

}  // namespace detail
}  // namespace mlf
