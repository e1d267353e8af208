#include "starclique/formulas.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace starclique {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("checked_add: overflow");
    return out;
}

long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("checked_sub: overflow");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("checked_mul: overflow");
    return out;
}

long long choose2(long long m) {
    if (m < 0) throw std::invalid_argument("choose2: negative argument");
    // One factor is even, so halve it before multiplying to dodge overflow.
    return (m % 2 == 0) ? checked_mul(m / 2, m - 1) : checked_mul(m, (m - 1) / 2);
}

long long floor_div(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("floor_div: denominator must be positive");
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

namespace {

void require_params(long long k, long long n, const char* where) {
    if (k < 2 || n < 2) throw std::invalid_argument(std::string(where) + ": requires k >= 2 and n >= 2");
}

}  // namespace

long long ramsey_star_clique(long long k, long long n) {
    require_params(k, n, "ramsey_star_clique");
    return checked_add(checked_mul(k, n - 1), 1);
}

long long rhat_star(long long k, long long n) {
    require_params(k, n, "rhat_star");
    long long full = choose2(ramsey_star_clique(k, n));
    if (k >= n || k % 2 == 1) return checked_sub(full, choose2(k));
    return checked_sub(full, checked_mul(k, n - 1) / 2);  // k even, so k(n-1) is even
}

long long theorem3_threshold(long long k) {
    if (k < 2) throw std::invalid_argument("theorem3_threshold: requires k >= 2");
    long long k2 = checked_mul(k, k);
    return checked_add(checked_mul(k2, k), checked_add(checked_mul(2, k2), checked_mul(2, k)));
}

long long rhat_theorem3(long long k, long long n) {
    require_params(k, n, "rhat_theorem3");
    if (n < theorem3_threshold(k))
        throw std::invalid_argument("rhat_theorem3: n below the large-n threshold k^3+2k^2+2k");
    long long full = choose2(ramsey_star_clique(k, n));
    if (k % 2 == 1) return checked_sub(full, choose2(k));
    return checked_sub(full, checked_mul(k, n - 1) / 2);
}

long long f_threshold(long long k, long long n) {
    require_params(k, n, "f_threshold");
    long long num = checked_sub(checked_mul(k, n), checked_mul(2, checked_mul(k, k)));
    return floor_div(num, checked_mul(k + 1, k + 1));
}

long long r_prime(long long k, long long n) {
    require_params(k, n, "r_prime");
    if (k % 2 == 1) return checked_add(choose2(k), 1);
    return checked_add(checked_mul(k, n - 1) / 2, 1);
}

long long pikhurko_lower_bound(long long k, long long n) {
    if (k < 2 || n < 1) throw std::invalid_argument("pikhurko_lower_bound: requires k >= 2 and n >= 1");
    return checked_mul(checked_mul(k, k), choose2(n - 1));
}

double erdos_etal_lower_bound(long long k, long long n, double eps) {
    if (k < 1 || n < 3) throw std::invalid_argument("erdos_etal_lower_bound: requires k >= 1 and n >= 3");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("erdos_etal_lower_bound: eps must lie in (0,1)");
    double half_k2 = static_cast<double>(k) * static_cast<double>(k) / 2.0;
    long long quarter = checked_mul(n - 2, n - 2) / 4;
    double scaled = (1.0 - eps) * static_cast<double>(quarter) * half_k2;
    return std::max(half_k2, scaled);
}

double pikhurko_counterexample_bound(long long k) {
    if (k < 1) throw std::invalid_argument("pikhurko_counterexample_bound: requires k >= 1");
    double kd = static_cast<double>(k);
    return kd * kd + std::sqrt(2.0) * kd * std::sqrt(kd) + kd;
}

BoundComparison compare_counterexample_bound(long long k) {
    if (k < 1) throw std::invalid_argument("compare_counterexample_bound: requires k >= 1");
    BoundComparison cmp{};
    cmp.counterexample_bound = pikhurko_counterexample_bound(k);
    cmp.construction_edges = checked_sub(choose2(checked_add(checked_mul(2, k), 1)), choose2(k));
    cmp.bound_below_construction = cmp.counterexample_bound < static_cast<double>(cmp.construction_edges);
    return cmp;
}

}  // namespace starclique
