#pragma once
#include <vector>

namespace gup {

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size diag.size()-1
};

// number of eigenvalues strictly below x
int sturm_count(const SymTridiagonal& t, double x);

// lowest `count` eigenvalues in ascending order by bisection
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int count, double rel_tol = 1e-13);

}  // namespace gup
