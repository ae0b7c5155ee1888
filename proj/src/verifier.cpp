#include "symch/verifier.hpp"

#include <chrono>

namespace symch {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::vector<Matrix> matrix_powers(const Matrix& a, unsigned top) {
    std::vector<Matrix> p;
    p.reserve(top + 1);
    p.push_back(Matrix::identity(a.ring(), a.n()));
    for (unsigned k = 1; k <= top; ++k) p.push_back(p.back() * a);
    return p;
}

} // namespace

std::string VerificationReport::detail(const std::string& key) const {
    for (const auto& [k, v] : details) {
        if (k == key) return v;
    }
    return "";
}

bool PermutationPair::valid() const {
    return is_permutation(tau) && s >= 1 && s <= tau.size() && tau[s - 1] == s;
}

std::vector<PermutationPair> all_sn_star(unsigned n) {
    std::vector<PermutationPair> out;
    for (unsigned s = 1; s <= n; ++s) {
        for (auto& tau : permutations_fixing(n, s)) {
            out.push_back(PermutationPair{std::move(tau), s});
        }
    }
    return out;
}

std::vector<unsigned> u_row_word(const PermutationPair& pair) {
    const unsigned n = static_cast<unsigned>(pair.tau.size());
    std::vector<unsigned> w;
    w.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        if (i != pair.s) w.push_back(pair.tau[i - 1]);
    }
    w.push_back(pair.s);
    return w;
}

std::vector<unsigned> v_row_word(const PermutationPair& pair) {
    const unsigned n = static_cast<unsigned>(pair.tau.size());
    std::vector<unsigned> w;
    w.reserve(n);
    w.push_back(pair.s);
    for (unsigned i = 1; i <= n; ++i) {
        if (i != pair.s) w.push_back(pair.tau[i - 1]);
    }
    return w;
}

PermutationPair theta_map(const PermutationPair& pair) {
    if (!pair.valid()) throw error("theta_map: input not in S_n*");
    const unsigned n = static_cast<unsigned>(pair.tau.size());
    const std::vector<unsigned> w = u_row_word(pair);
    PermutationPair out;
    out.s = w[0];
    out.tau.assign(n, 0);
    out.tau[out.s - 1] = out.s;
    size_t next = 1;
    for (unsigned i = 1; i <= n; ++i) {
        if (i == out.s) continue;
        out.tau[i - 1] = w[next++];
    }
    return out;
}

PermutationPair delta_map(const PermutationPair& pair) {
    if (!pair.valid()) throw error("delta_map: input not in S_n*");
    const unsigned n = static_cast<unsigned>(pair.tau.size());
    const std::vector<unsigned> w = v_row_word(pair);
    PermutationPair out;
    out.s = w[n - 1];
    out.tau.assign(n, 0);
    out.tau[out.s - 1] = out.s;
    size_t next = 0;
    for (unsigned i = 1; i <= n; ++i) {
        if (i == out.s) continue;
        out.tau[i - 1] = w[next++];
    }
    return out;
}

VerificationReport verify_prop21(const Matrix& a, bool term_level) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim = "prop21";
    const unsigned n = a.n();

    const Matrix astar = preadjoint(a);
    const Element left = (astar * a).trace();
    const Element right = (a * astar).trace();
    const Element diff = left - right;
    rep.holds = diff.is_zero();
    rep.stats.checks += 1;
    if (!rep.holds) rep.residual_element = diff;

    if (term_level) {
        // Pair every summand of tr(A*A) with its partner in tr(AA*):
        // same rho, factor rows transported by theta_map.
        const auto rhos = all_permutations(n);
        long long matched = 0;
        long long total = 0;
        for (const auto& pair : all_sn_star(n)) {
            const auto uw = u_row_word(pair);
            const auto vw = v_row_word(theta_map(pair));
            for (const auto& rho : rhos) {
                ++total;
                bool same = true;
                for (unsigned k = 0; k < n && same; ++k) {
                    // factor k of each product is a_{row, rho(row)}
                    same = uw[k] == vw[k] && rho[uw[k] - 1] == rho[vw[k] - 1];
                }
                if (same) ++matched;
            }
        }
        rep.stats.terms = total;
        rep.stats.checks += total;
        rep.details.emplace_back("term_pairs", std::to_string(total));
        rep.details.emplace_back("term_pairs_matched", std::to_string(matched));
        rep.details.emplace_back(
            "terms_per_diagonal_entry",
            std::to_string(small_factorial(n - 1) * small_factorial(n)));
        if (matched != total) rep.holds = false;
    }

    rep.stats.wall_ms = clock.ms();
    return rep;
}

VerificationReport verify_thm22(const Matrix& a) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim = "thm22";
    const unsigned n = a.n();
    const RingDescriptor& ring = a.ring();

    const CharPolyResult dec = decompose_thm22(a);
    rep.lambda = dec.lambda;
    const auto powers = matrix_powers(a, n);

    Matrix right_sum(ring, n);
    Matrix left_sum(ring, n);
    for (unsigned i = 0; i <= n; ++i) {
        const Matrix li = scalar_matrix(ring, n, dec.lambda[i]);
        right_sum = right_sum + powers[i] * (li + dec.C[i]);
        left_sum = left_sum + (li + dec.D[i]) * powers[i];
        rep.stats.terms += 2;
    }

    bool commutator_entries = true;
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned r = 0; r < n; ++r) {
            for (unsigned c = 0; c < n; ++c) {
                rep.stats.checks += 2;
                if (!is_in_commutator_subgroup(dec.C[i].at(r, c)) ||
                    !is_in_commutator_subgroup(dec.D[i].at(r, c))) {
                    commutator_entries = false;
                }
            }
        }
    }

    const Element nfact = Element::scalar(ring, Rational(BigInt::factorial(n), BigInt(1)));
    const bool leading_ok = dec.lambda[n] == nfact;

    rep.details.emplace_back("right_residual_zero", right_sum.is_zero() ? "yes" : "no");
    rep.details.emplace_back("left_residual_zero", left_sum.is_zero() ? "yes" : "no");
    rep.details.emplace_back("entries_in_commutator_subgroup", commutator_entries ? "yes" : "no");
    rep.details.emplace_back("lambda_n", dec.lambda[n].str());

    rep.holds = right_sum.is_zero() && left_sum.is_zero() && commutator_entries && leading_ok;
    if (!right_sum.is_zero()) {
        rep.residual_matrix = right_sum;
    } else if (!left_sum.is_zero()) {
        rep.residual_matrix = left_sum;
    }
    rep.stats.wall_ms = clock.ms();
    return rep;
}

VerificationReport verify_thm31(const Matrix& a) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim = "thm31";
    const unsigned n = a.n();
    const RingDescriptor& ring = a.ring();

    const std::vector<Element> lambda = symmetric_charpoly(a);
    rep.lambda = lambda;
    const auto powers = matrix_powers(a, n);

    Matrix sum(ring, n);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            const Element c = lambda[i] * lambda[j];
            sum = sum + powers[i].scale_right(c) * powers[j];
            rep.stats.terms += 1;
        }
    }

    const Element cnn = lambda[n] * lambda[n];
    const BigInt nf = BigInt::factorial(n);
    const bool cnn_ok = cnn == Element::scalar(ring, Rational(nf * nf, BigInt(1)));
    rep.details.emplace_back("c_nn", cnn.is_scalar() ? cnn.scalar_value().str() : cnn.str());

    rep.holds = sum.is_zero() && cnn_ok;
    if (!sum.is_zero()) rep.residual_matrix = sum;
    rep.stats.checks = rep.stats.terms + 1;
    rep.stats.wall_ms = clock.ms();
    return rep;
}

VerificationReport verify_invariance(const Matrix& a, const Matrix& g) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim = "invariance";
    const unsigned n = a.n();

    const Matrix conjugated = conjugate(a, g);
    const std::vector<Element> lam_a = symmetric_charpoly(a);
    const std::vector<Element> lam_c = symmetric_charpoly(conjugated);
    rep.lambda = lam_a;

    rep.holds = true;
    for (unsigned i = 0; i <= n; ++i) {
        rep.stats.checks += 1;
        if (!(lam_a[i] == lam_c[i])) {
            rep.holds = false;
            if (!rep.residual_element) rep.residual_element = lam_c[i] - lam_a[i];
            rep.details.emplace_back("first_mismatch", "lambda_" + std::to_string(i));
        }
    }
    rep.stats.wall_ms = clock.ms();
    return rep;
}

VerificationReport sandwich_product_identity(const Matrix& a) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim = "sandwich-product";
    const unsigned n = a.n();
    const RingDescriptor& ring = a.ring();

    const std::vector<Element> lambda = symmetric_charpoly(a);
    rep.lambda = lambda;
    const CharPolyResult dec = decompose_thm22(a);
    const auto powers = matrix_powers(a, n);

    Matrix lhs(ring, n);
    Matrix rhs(ring, n);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            lhs = lhs + powers[i].scale_right(lambda[i] * lambda[j]) * powers[j];
            rhs = rhs + powers[i] * dec.C[i] * dec.D[j] * powers[j];
            rep.stats.terms += 2;
        }
    }

    const Matrix diff = lhs - rhs;
    rep.holds = diff.is_zero();
    if (!rep.holds) rep.residual_matrix = diff;
    rep.details.emplace_back("lhs_zero", lhs.is_zero() ? "yes" : "no");
    rep.details.emplace_back("rhs_zero", rhs.is_zero() ? "yes" : "no");
    rep.stats.checks = rep.stats.terms / 2;
    rep.stats.wall_ms = clock.ms();
    return rep;
}

} // namespace symch
