// verifier.hpp -- machine verification of the trace symmetry, the left
// and right Cayley-Hamilton identities with matrix coefficients, the
// sandwich identity sum A^i c_{i,j} A^j with c_{i,j} = lambda_i lambda_j,
// conjugation invariance of the lambda_i, and the proof-pivot identity
// sum A^i lambda_i lambda_j A^j = sum A^i C_i D_j A^j.
#pragma once

#include "symch/charpoly.hpp"
#include "symch/matrix.hpp"
#include "symch/perm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symch {

// (tau, s) with tau(s) = s; the index set S_n* of the preadjoint's sum.
struct PermutationPair {
    Perm tau;
    unsigned s = 1;

    bool valid() const;
    bool operator==(const PermutationPair&) const = default;
};

// All of S_n*, ordered by s then lexicographically by tau.
std::vector<PermutationPair> all_sn_star(unsigned n);

// Row word of the trace summand u(rho, tau, s): the factor rows
// (tau(i) : i != s, ascending i) followed by s.
std::vector<unsigned> u_row_word(const PermutationPair& pair);

// Row word of v(rho, alpha, p): p followed by (alpha(i) : i != p, ascending i).
std::vector<unsigned> v_row_word(const PermutationPair& pair);

// The mutually inverse S_n* -> S_n* transports: theta_map carries (tau, s)
// to the unique (alpha, p) whose v-row-word equals the u-row-word of
// (tau, s), so that u(rho, tau, s) = v(rho, alpha, p) holds factor by
// factor for every rho; delta_map is the inverse construction. For pairs
// with s != 1 the returned point is tau(1); at the s = 1 (resp. p = n)
// boundary the row-word transport is the unique extension that keeps the
// maps inside S_n* and mutually inverse.
PermutationPair theta_map(const PermutationPair& pair);
PermutationPair delta_map(const PermutationPair& pair);

struct VerifyStats {
    long long terms = 0;    // summands examined
    long long checks = 0;   // individual exact comparisons performed
    double wall_ms = 0.0;
};

struct VerificationReport {
    std::string claim;
    bool holds = false;
    std::optional<Element> residual_element;
    std::optional<Matrix> residual_matrix;
    std::vector<Element> lambda;   // coefficients involved, when applicable
    std::vector<std::pair<std::string, std::string>> details;
    VerifyStats stats;

    std::string detail(const std::string& key) const;
};

// tr(A*A) = tr(AA*). With term_level set, additionally pairs every signed
// summand u(rho, tau, s) with v(rho, theta_map(tau, s)) and checks the
// factor sequences match exactly.
VerificationReport verify_prop21(const Matrix& a, bool term_level = true);

// Right and left Cayley-Hamilton identities from the decomposition, plus
// lambda_n = n! and the [R,R] membership of every C_i / D_i entry.
VerificationReport verify_thm22(const Matrix& a);

// sum_{0<=i,j<=n} A^i (lambda_i lambda_j) A^j = 0, with c_{n,n} = (n!)^2.
// Expected to hold over rings satisfying [x,y][u,v] = 0; callable on any
// ring, reporting the residual either way.
VerificationReport verify_thm31(const Matrix& a);

// lambda_i(G A G^{-1}) = lambda_i(A) for central invertible G.
VerificationReport verify_invariance(const Matrix& a, const Matrix& g);

// sum A^i lambda_i lambda_j A^j = sum A^i C_i D_j A^j, both sides computed
// independently. Holds over every ring.
VerificationReport sandwich_product_identity(const Matrix& a);

} // namespace symch
