#pragma once

#include <vector>

#include "chebdyn/error.hpp"
#include "chebdyn/poly.hpp"

namespace chebdyn {

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;
  /// Largest backward error |p(z)| / sum |a_k| |z|^k over the iterates,
  /// taken before clusters are merged.
  double residual = 0.0;

  int total_multiplicity() const;
  /// Every root repeated according to its multiplicity.
  std::vector<Complex> expanded() const;
};

struct RootOptions {
  double tol = 1e-12;
  int max_iterations = 500;
  /// Roots closer than cluster_tol * max(1, |z|) are merged.
  double cluster_tol = 1e-6;
};

/// Raised when the iteration cap is hit before every root meets `tol`;
/// carries the best estimate found.
class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, RootSet best)
      : Error(ErrorCode::NonConvergence, what), best_(std::move(best)) {}

  const RootSet& best_effort() const noexcept { return best_; }

 private:
  RootSet best_;
};

/// All roots of p by Aberth-Ehrlich simultaneous iteration, with clusters
/// merged into multiplicities. Roots are sorted by real then imaginary part.
RootSet find_roots(const Poly& p, const RootOptions& options = {});

}  // namespace chebdyn
