#include "homleib/shuffles.hpp"

#include <algorithm>
#include <stdexcept>

namespace homleib {

Permutation::Permutation(const std::vector<std::size_t>& one_line) {
    const std::size_t p = one_line.size();
    if (p == 0) throw parse_error("permutation of zero letters");
    std::vector<bool> seen(p, false);
    map_.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        std::size_t v = one_line[i];
        if (v < 1 || v > p || seen[v - 1]) throw parse_error("one-line notation is not a bijection");
        seen[v - 1] = true;
        map_[i] = v - 1;
    }
}

Permutation::Permutation(std::vector<std::size_t> zero_based, int) : map_(std::move(zero_based)) {}

Permutation Permutation::identity(std::size_t p) {
    std::vector<std::size_t> m(p);
    for (std::size_t i = 0; i < p; ++i) m[i] = i;
    return Permutation(std::move(m), 0);
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return Permutation(std::move(inv), 0);
}

int Permutation::sign() const {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < map_.size(); ++i)
        for (std::size_t j = i + 1; j < map_.size(); ++j)
            if (map_[i] > map_[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(map_[i] + 1);
    }
    return out + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw error("permutation size mismatch");
    std::vector<std::size_t> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a.map_[b.map_[i]];
    return Permutation(std::move(m), 0);
}

SignedPermSum SignedPermSum::identity(std::size_t degree) {
    SignedPermSum s(degree);
    s.add_term(Rational(1), Permutation::identity(degree));
    return s;
}

void SignedPermSum::add_term(const Rational& coeff, const Permutation& p) {
    if (p.size() != degree_) throw error("permutation degree mismatch");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

SignedPermSum SignedPermSum::operator+(const SignedPermSum& o) const {
    if (degree_ != o.degree_) throw error("signed sum degree mismatch");
    SignedPermSum out = *this;
    for (const auto& [p, c] : o.terms_) out.add_term(c, p);
    return out;
}

SignedPermSum SignedPermSum::scaled(const Rational& k) const {
    SignedPermSum out(degree_);
    if (k == 0) return out;
    for (const auto& [p, c] : terms_) out.add_term(c * k, p);
    return out;
}

SignedPermSum SignedPermSum::operator*(const SignedPermSum& o) const {
    if (degree_ != o.degree_) throw error("signed sum degree mismatch");
    SignedPermSum out(degree_);
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_) out.add_term(c * d, p * q);
    return out;
}

SignedPermSum SignedPermSum::tilde() const {
    SignedPermSum out(degree_);
    for (const auto& [p, c] : terms_) out.add_term(c * p.sign(), p.inverse());
    return out;
}

SignedPermSum SignedPermSum::embed(std::size_t left, std::size_t right) const {
    const std::size_t n = left + degree_ + right;
    SignedPermSum out(n);
    for (const auto& [p, c] : terms_) {
        std::vector<std::size_t> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = i + 1;
        for (std::size_t i = 1; i <= degree_; ++i) m[left + i - 1] = left + p.image(i);
        out.add_term(c, Permutation(m));
    }
    return out;
}

std::vector<Permutation> enumerate_shuffles(std::size_t n, std::size_t m) {
    const std::size_t p = n + m;
    if (p == 0) throw parse_error("shuffle of zero letters");
    std::vector<Permutation> out;
    // choose the image positions of the first block in lex order
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        std::vector<bool> used(p, false);
        std::vector<std::size_t> one_line(p);
        for (std::size_t i = 0; i < n; ++i) {
            one_line[i] = pick[i] + 1;
            used[pick[i]] = true;
        }
        std::size_t slot = n;
        for (std::size_t v = 0; v < p; ++v)
            if (!used[v]) one_line[slot++] = v + 1;
        out.push_back(Permutation(one_line));
        if (n == 0) break;
        // next combination
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == p - n + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

SignedPermSum shuffle_sum(std::size_t n, std::size_t m) {
    SignedPermSum s(n + m);
    for (const auto& p : enumerate_shuffles(n, m)) s.add_term(Rational(1), p);
    return s;
}

SignedPermSum rho(std::size_t n, std::size_t m) {
    if (n < 1) throw parse_error("rho needs n >= 1");
    const std::size_t p = n + m;
    if (p == 1) return SignedPermSum::identity(1);
    SignedPermSum out(p);
    for (const auto& sigma : enumerate_shuffles(n - 1, m)) {
        // extend sigma to {1..p} fixing letter 1, then invert: slot i of the
        // result holds the letter sigma maps i to
        std::vector<std::size_t> big(p);
        big[0] = 1;
        for (std::size_t i = 1; i < p; ++i) big[i] = sigma.image(i) + 1;
        out.add_term(Rational(sigma.sign()), Permutation(big).inverse());
    }
    return out;
}

SignedPermSum rho_abstract(std::size_t n, std::size_t m) {
    if (n < 1) throw parse_error("rho needs n >= 1");
    if (n + m == 1) return SignedPermSum::identity(1);
    return shuffle_sum(n - 1, m).tilde().embed(1, 0);
}

Permutation tau(std::size_t r, std::size_t m) {
    if (r < 1 || m < 1) throw parse_error("tau needs r, m >= 1");
    std::vector<std::size_t> one_line(r + m);
    for (std::size_t j = 0; j < r; ++j) one_line[j] = m + j + 1;
    for (std::size_t j = 0; j < m; ++j) one_line[r + j] = j + 1;
    return Permutation(one_line);
}

namespace {

struct Candidate {
    std::string label;
    // second right-hand term before the block embedding and the outer
    // composition with rho_{n,m+r}
    SignedPermSum core;
    // letters of identity padding: (left, right) relative to core
    bool embed_left;  // identity block on the first n letters when true
};

std::vector<Candidate> relation_candidates(std::size_t n, std::size_t m, std::size_t r) {
    SignedPermSum trm(r + m);
    trm.add_term(Rational(1), tau(r, m));
    SignedPermSum tmr(m + r);
    tmr.add_term(Rational(1), tau(m, r));
    std::vector<Candidate> out;
    out.push_back({"1_n (x) (tau_{r,m} . rho_{r,m})", trm * rho(r, m), true});
    out.push_back({"1_n (x) (rho_{r,m} . tau_{r,m})", rho(r, m) * trm, true});
    out.push_back({"1_n (x) (tau_{m,r} . rho_{r,m})", tmr * rho(r, m), true});
    out.push_back({"1_n (x) (tau_{r,m} . rho_{m,r})", trm * rho(m, r), true});
    out.push_back({"(tau_{r,m} . rho_{r,m}) (x) 1_n", trm * rho(r, m), false});
    (void)n;
    return out;
}

bool relation_holds(std::size_t n, std::size_t m, std::size_t r, const Candidate& cand,
                    std::size_t* lhs_terms, std::size_t* rhs_terms) {
    SignedPermSum lhs = rho(n, m).embed(0, r) * rho(n + m, r);
    SignedPermSum base = rho(m, r).embed(n, 0) * rho(n, m + r);
    SignedPermSum second =
        cand.embed_left ? cand.core.embed(n, 0) : cand.core.embed(0, n);
    int sgn = (r * m) % 2 ? -1 : 1;
    SignedPermSum rhs = base + (second * rho(n, m + r)).scaled(Rational(sgn));
    if (lhs_terms) *lhs_terms = lhs.term_count();
    if (rhs_terms) *rhs_terms = rhs.term_count();
    return lhs == rhs;
}

}  // namespace

RhoRelationReport verify_rho_relation(std::size_t n, std::size_t m, std::size_t r) {
    if (n < 1 || m < 1 || r < 1) throw parse_error("relation check needs n, m, r >= 1");
    if (n + m + r > 7) throw cap_error("relation check limited to n+m+r <= 7");
    RhoRelationReport report;
    Candidate pinned = relation_candidates(n, m, r).front();
    report.variant = pinned.label;
    report.holds = relation_holds(n, m, r, pinned, &report.lhs_terms, &report.rhs_terms);
    return report;
}

RhoRelationCertificate certify_rho_relation(std::size_t max_total) {
    if (max_total > 7) throw cap_error("relation scan limited to n+m+r <= 7");
    RhoRelationCertificate cert;
    const auto probe = relation_candidates(1, 1, 1);
    const std::size_t k = probe.size();
    cert.outcomes.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        cert.outcomes[i].label = probe[i].label;
        cert.outcomes[i].holds_everywhere = true;
    }
    for (std::size_t total = 3; total <= max_total; ++total)
        for (std::size_t n = 1; n + 2 <= total; ++n)
            for (std::size_t m = 1; n + m + 1 <= total; ++m) {
                const std::size_t r = total - n - m;
                auto cands = relation_candidates(n, m, r);
                for (std::size_t i = 0; i < k; ++i) {
                    if (!cert.outcomes[i].holds_everywhere) continue;
                    if (!relation_holds(n, m, r, cands[i], nullptr, nullptr)) {
                        cert.outcomes[i].holds_everywhere = false;
                        cert.outcomes[i].first_failure = {n, m, r};
                    }
                }
            }
    std::size_t survivors = 0;
    for (const auto& o : cert.outcomes)
        if (o.holds_everywhere) {
            ++survivors;
            cert.pinned = o.label;
        }
    cert.unique = survivors == 1;
    if (!cert.unique) cert.pinned.clear();
    return cert;
}

const std::string& pinned_rho_variant() {
    static const std::string label = "1_n (x) (tau_{r,m} . rho_{r,m})";
    return label;
}

}  // namespace homleib
