#pragma once

#include <string>
#include <variant>
#include <vector>

#include "oramsey/certificate.hpp"
#include "oramsey/coloring.hpp"

namespace oramsey::extract {

// Exact nonnegative rational, normalized, den > 0.
struct Rational {
    i64 num = 0;
    i64 den = 1;
};

bool rational_less(const Rational& a, const Rational& b);

// alpha is the K4 Ramsey-multiplicity constant (configuration input, never
// recomputed); epsilon the slack used in the density threshold; instances
// smaller than min_recursion_size * max(a,b) are decided by exact DP search
// instead of recursion.
struct SquarePathConfig {
    Rational alpha{287, 240000};  // 0.0287/4!
    Rational epsilon{1, 1000000000};
    int min_recursion_size = 64;
};

// Red P_a^2 / blue P_b^2 via the monochromatic-K4 census: pick the middle
// pair covering the most majority-color K4s, recurse on the least-vertex
// and greatest-vertex sets, glue through the middle pair.
ExtractOutcome extract_square_path(const OrderedColoring& c, int a, int b,
                                   const SquarePathConfig& cfg = {}, bool want_trace = false);

// Red K_4^3 / blue tight P_n via blue-broom induction with the auxiliary
// pair coloring on the bristles (k = 3).  m approximates r(P_n^2, P_n^2).
ExtractOutcome extract_k4_or_tight_path(const OrderedColoring& c, int n, int m,
                                        bool want_trace = false);

// Red H_k(3) violation / blue tight P_n via blue-broom induction with the
// (k-i)-suffix claim machinery.  Any k >= 3; guarantee intended at N >= 2n^2.
ExtractOutcome extract_h3_or_path(const OrderedColoring& c, int n, bool want_trace = false);

// Red F(3) violation / blue tight P_n via B_{n-1,6} growth and r(3,3) <= 6
// on the six bristles.  Any k >= 3; guarantee intended at N >= 16n.
ExtractOutcome extract_f3_or_path(const OrderedColoring& c, int n, bool want_trace = false);

// Red 3-red-edge violation / blue B_{n-1,2} by the forced three-vertex-tail
// induction (k = 3).  Total whenever N >= 3n-3.
ExtractOutcome extract_3red_or_broom(const OrderedColoring& c, int n, bool want_trace = false);

// Pre-homogeneous sequence: the color of every k-subset depends only on its
// k-1 smallest elements; the induced (k-1)-uniform coloring records that
// common color.
struct StepdownResult {
    std::vector<int> sequence;
    OrderedColoring induced;
};

std::variant<StepdownResult, Failure> erdos_rado_stepdown(const OrderedColoring& c,
                                                          int target_len);

}  // namespace oramsey::extract
