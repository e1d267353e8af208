#pragma once

namespace starclique {

// Star size k and clique size n; the workbench's domain is k, n >= 2.
struct Params {
    long long k;
    long long n;
};

// Overflow-checked 64-bit helpers; all evaluators go through these.
long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);
long long choose2(long long m);                      // m >= 0
long long floor_div(long long num, long long den);   // den > 0, rounds toward -infinity

// r(K_{1,k}, K_n) = k(n-1)+1.
long long ramsey_star_clique(long long k, long long n);

// Restricted size Ramsey number closed form:
// C(k(n-1)+1, 2) - C(k,2) when k >= n or k odd, else C(k(n-1)+1, 2) - k(n-1)/2.
long long rhat_star(long long k, long long n);

// The same closed form restricted to the large-n regime n >= k^3+2k^2+2k,
// branching on the parity of k only; errors below the threshold.
long long theorem3_threshold(long long k);
long long rhat_theorem3(long long k, long long n);

// floor((kn - 2k^2)/(k+1)^2); may be negative for small n.
long long f_threshold(long long k, long long n);

// C(k,2)+1 for odd k, k(n-1)/2 + 1 for even k.
long long r_prime(long long k, long long n);

// Arrowing graphs need at least k^2 * C(n-1,2) edges.
long long pikhurko_lower_bound(long long k, long long n);

// max{k^2/2, (1-eps) * floor((n-2)^2/4) * k^2/2}.
double erdos_etal_lower_bound(long long k, long long n, double eps);

// k^2 + sqrt(2) k^{3/2} + k.
double pikhurko_counterexample_bound(long long k);

// Raw side-by-side of the counterexample bound against the join
// construction's C(2k+1,2) - C(k,2) edges. At k=5 the bound is NOT below the
// construction (45.81 vs 45); the comparison reports values as they are.
struct BoundComparison {
    double counterexample_bound;
    long long construction_edges;
    bool bound_below_construction;
};
BoundComparison compare_counterexample_bound(long long k);

}  // namespace starclique
