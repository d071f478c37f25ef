#pragma once

#include <vector>

namespace airybasis {

/// Value of Ai or Ai' together with a conservative absolute error bound.
struct AiryEval {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

/// Airy function Ai(x) for real x.
///
/// Uses the Maclaurin pair f/g (accumulated in extended precision) for |x| <= 8 and
/// the exponential / oscillatory asymptotic expansions beyond. Accurate to better
/// than 1e-10 absolute on |x| <= 50. Throws DomainError for non-finite x.
AiryEval airy_ai(double x);

/// Derivative Ai'(x); same evaluation strategy and accuracy as airy_ai.
AiryEval airy_ai_prime(double x);

/// n-th zero a_n of Ai (n >= 1), a_1 > a_2 > ... all negative.
double airy_zero(int n);

/// n-th zero a'_n of Ai' (n >= 1).
double airy_prime_zero(int n);

struct ZeroTable {
    std::vector<double> ai_zeros;
    std::vector<double> ai_prime_zeros;
};

/// First `count` zeros of Ai and Ai'.
ZeroTable zero_table(int count);

}  // namespace airybasis
