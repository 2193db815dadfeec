#ifndef BOREL_ERRORS_HPP
#define BOREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borel {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed (monomial, polynomial, ideal or order syntax).
struct parse_error : error {
  using error::error;
};

/// An elementary move was requested on a variable with zero exponent,
/// or at an index outside the allowed range.
struct inadmissible_move : error {
  using error::error;
};

/// Two monomials of different degree were compared under the Borel order.
struct degree_mismatch : error {
  using error::error;
};

/// A set of monomials violates the Borel (strongly stable) closure condition.
struct not_borel : error {
  using error::error;
};

/// The polynomial admits no Gotzmann binomial decomposition.
struct not_admissible : error {
  using error::error;
};

/// The pivot monomial handed to decreasing_family is not minimal in its stratum.
struct pivot_not_minimal : error {
  using error::error;
};

/// Deformations passed together do not share the same source.
struct mismatched_source : error {
  using error::error;
};

/// Deformations are not compatible and cannot be composed.
struct incompatible : error {
  using error::error;
};

/// A structural guarantee failed; indicates a bug, reported with exit status 3.
struct invariant_violation : error {
  using error::error;
};

}  // namespace borel

#endif
