#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homleib/rational.hpp"

namespace homleib {

// Permutation of {1..p} in one-line notation. Composition and the tensor-slot
// action share one convention: (a*b)(i) = a(b(i)) and act(p, t)[p(i)] = t[i],
// so act(a*b, t) = act(a, act(b, t)).
class Permutation {
public:
    // one_line[i-1] = image of i, values 1..p each exactly once
    explicit Permutation(const std::vector<std::size_t>& one_line);
    static Permutation identity(std::size_t p);

    std::size_t size() const { return map_.size(); }
    // image of i, both 1-based
    std::size_t image(std::size_t i) const { return map_.at(i - 1) + 1; }

    Permutation inverse() const;
    int sign() const;  // parity by inversion count

    template <typename T>
    std::vector<T> act(const std::vector<T>& tuple) const {
        std::vector<T> out(tuple.size());
        for (std::size_t i = 0; i < map_.size(); ++i) out[map_[i]] = tuple[i];
        return out;
    }

    std::string to_string() const;  // "[2 1 3]"

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.map_ < b.map_; }

private:
    explicit Permutation(std::vector<std::size_t> zero_based, int);
    std::vector<std::size_t> map_;  // 0-based images
};

// Formal rational combination of permutations of one fixed size, kept
// normalized: terms sorted by one-line notation, zero coefficients dropped.
class SignedPermSum {
public:
    explicit SignedPermSum(std::size_t degree) : degree_(degree) {}
    static SignedPermSum identity(std::size_t degree);

    std::size_t degree() const { return degree_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Permutation, Rational>& terms() const { return terms_; }

    void add_term(const Rational& coeff, const Permutation& p);
    SignedPermSum operator+(const SignedPermSum& o) const;
    SignedPermSum scaled(const Rational& k) const;
    // group-algebra product: (a*b) acts as a after b
    SignedPermSum operator*(const SignedPermSum& o) const;
    // the sign anti-homomorphism, termwise coeff*sgn(p) on p^{-1}
    SignedPermSum tilde() const;
    // identity on `left` extra letters, this sum on the middle, identity on `right`
    SignedPermSum embed(std::size_t left, std::size_t right) const;

    friend bool operator==(const SignedPermSum& a, const SignedPermSum& b) = default;

private:
    std::size_t degree_;
    std::map<Permutation, Rational> terms_;
};

// All (n,m)-shuffles of {1..n+m} (increasing on the first n letters and on the
// last m), ordered lexicographically by one-line notation.
std::vector<Permutation> enumerate_shuffles(std::size_t n, std::size_t m);

// sum of all (n,m)-shuffles with coefficient +1
SignedPermSum shuffle_sum(std::size_t n, std::size_t m);

// rho_{n,m} on n+m letters, the signed sum fixing slot 1: for each
// (n-1,m)-shuffle sigma of letters {2..n+m}, the term sgn(sigma) * sigma^{-1}
// (extended by the identity on letter 1). Explicit formula; normative.
SignedPermSum rho(std::size_t n, std::size_t m);

// same operator built as 1_1 (x) tilde(shuffle_sum(n-1, m)); equals rho()
SignedPermSum rho_abstract(std::size_t n, std::size_t m);

// block swap (c_1..c_r b_1..b_m) -> (b_1..b_m c_1..c_r); sign is (-1)^{rm}
Permutation tau(std::size_t r, std::size_t m);

struct RhoRelationReport {
    bool holds = false;
    std::string variant;  // formula text of the second right-hand term
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
};

// Checks, for one (n,m,r), the composition law
//   (rho_{n,m} (x) 1_r) . rho_{n+m,r}
//     = (1_n (x) rho_{m,r}) . rho_{n,m+r} + (-1)^{rm} (1_n (x) V) . rho_{n,m+r}
// with V the pinned variant tau_{r,m} . rho_{r,m}. Exact group-algebra equality.
RhoRelationReport verify_rho_relation(std::size_t n, std::size_t m, std::size_t r);

struct RhoVariantOutcome {
    std::string label;
    bool holds_everywhere = false;
    std::optional<std::array<std::size_t, 3>> first_failure;
};

struct RhoRelationCertificate {
    std::vector<RhoVariantOutcome> outcomes;  // one per candidate, fixed order
    std::string pinned;                       // label of the unique survivor
    bool unique = false;
};

// Brute-force scan of all candidate placements of tau and the rho block over
// every (n,m,r) with n,m,r >= 1 and n+m+r <= max_total. The certificate is
// only meaningful when exactly one candidate survives.
RhoRelationCertificate certify_rho_relation(std::size_t max_total = 6);

// label of the variant the cup product uses
const std::string& pinned_rho_variant();

}  // namespace homleib
