#pragma once

#include <exception>
#include <string>
#include <vector>

#include "bunpic/gerbe.hpp"

namespace bunpic {

enum class Execution { Serial, Parallel };

// Calls fn(i) for i in [0, n) and collects results in index order. Parallel
// runs use an OpenMP dynamic schedule; the first exception (by index) is
// rethrown after the loop.
template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Fn&& fn, Execution exec) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < count; ++i) {
      try {
        out[i] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct TorusGridPoint {
  int genus = 1;
  long delta = 1;
  long divisibility = 0;
  std::size_t rank = 1;
};

// genus 1..max_genus, delta over the positive divisors of 2g - 2 (0..6 for
// genus 1, where every delta divides 0), div(d) in 0..max_div, rank 1..max_rank.
std::vector<TorusGridPoint> torus_grid(int max_genus = 5, long max_div = 6, std::size_t max_rank = 3);

struct TorusGridResult {
  TorusGridPoint point;
  FGAbelianGroup coker_wt;             // from the general dbar solver
  FGAbelianGroup coker_wt_from_basis;  // SNF on the explicit basis matrix
  FGAbelianGroup coker_gamma_bar;
  FGAbelianGroup coker_wt_formula;
  FGAbelianGroup coker_gamma_bar_formula;
  bool certificate_holds = false;
  // |coker gbar| |coker wt| == delta^rank (delta > 0)
  bool order_product_holds = false;

  bool wt_matches() const { return coker_wt == coker_wt_formula && coker_wt_from_basis == coker_wt_formula; }
  bool gamma_bar_matches() const { return coker_gamma_bar == coker_gamma_bar_formula; }
};

CurveFamily grid_family(int genus, long delta);
TorusGridResult evaluate_torus_point(const TorusGridPoint& p);
std::vector<TorusGridResult> evaluate_torus_grid(const std::vector<TorusGridPoint>& pts, Execution exec);

// One evaluation-cokernel case: a group with simply connected derived group and
// a class in pi_1(G^ad) given in the invariant-factor generators.
struct GoldenCase {
  std::string label;
  SimpleType type;
  IntVector adjoint_coords;
};

struct GoldenResult {
  GoldenCase which;
  FGAbelianGroup ev_cokernel;
  FGAbelianGroup cover_ev_cokernel;
};

// SL(2..8), Spin(2n+1) and Sp(2n) for n = 2..5, Spin(2n) for n = 3..6, E6,
// E7, E8, F4, G2, each over every class of pi_1(G^ad).
std::vector<GoldenCase> golden_cases();
GoldenResult evaluate_golden_case(const GoldenCase& c);
std::vector<GoldenResult> evaluate_golden(const std::vector<GoldenCase>& cases, Execution exec);

// All classes of a finite group given by its invariant factors.
std::vector<IntVector> enumerate_classes(const FGAbelianGroup& g);

}  // namespace bunpic
