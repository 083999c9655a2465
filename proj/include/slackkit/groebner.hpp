#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "slackkit/errors.hpp"
#include "slackkit/polynomial.hpp"

namespace slackkit {

// An ideal of Q[x1..xt] given by generators, with a cached reduced
// Gröbner basis for the most recently requested term order.
class Ideal {
public:
    Ideal() : nvars_(0) {}
    explicit Ideal(std::size_t nvars) : nvars_(nvars) {}
    Ideal(std::size_t nvars, std::vector<Polynomial> gens) : nvars_(nvars) {
        for (auto& g : gens) {
            if (g.nvars() != nvars) throw RingMismatch("generator in wrong ring");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    Ideal(const Ideal& o) : nvars_(o.nvars_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lk(o.mu_);
        cache_ = o.cache_;
    }
    Ideal& operator=(const Ideal& o) {
        if (this != &o) {
            nvars_ = o.nvars_;
            gens_ = o.gens_;
            std::lock_guard<std::mutex> lk(o.mu_);
            cache_ = o.cache_;
        }
        return *this;
    }
    Ideal(Ideal&& o) noexcept : nvars_(o.nvars_), gens_(std::move(o.gens_)), cache_(std::move(o.cache_)) {}
    Ideal& operator=(Ideal&& o) noexcept {
        nvars_ = o.nvars_;
        gens_ = std::move(o.gens_);
        cache_ = std::move(o.cache_);
        return *this;
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    struct CachedBasis {
        TermOrder order;
        std::vector<Polynomial> basis;
    };

    std::shared_ptr<const CachedBasis> cached_basis() const {
        std::lock_guard<std::mutex> lk(mu_);
        return cache_;
    }

    void store_basis(TermOrder order, std::vector<Polynomial> basis) const {
        auto c = std::make_shared<CachedBasis>(CachedBasis{std::move(order), std::move(basis)});
        std::lock_guard<std::mutex> lk(mu_);
        cache_ = std::move(c);
    }

private:
    std::size_t nvars_;
    std::vector<Polynomial> gens_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const CachedBasis> cache_;
};

namespace detail {

inline std::vector<Term> sorted_terms(const Polynomial& p, const TermOrder& order) {
    std::vector<Term> t = p.terms();
    if (!order.is_standard_grevlex())
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
            return order.compare(a.mono, b.mono) > 0;
        });
    return t;
}

// Terms sorted descending under the engine's active order.
struct EnginePoly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }

    static EnginePoly from(const Polynomial& p, const TermOrder& order) {
        return EnginePoly{sorted_terms(p, order)};
    }

    Polynomial to_polynomial(std::size_t nvars) const { return Polynomial(nvars, terms); }
};

// r -= c * x^m * g, both sorted under `order`
inline void sub_mul(EnginePoly& r, const Rational& c, const Monomial& m, const EnginePoly& g,
                    const TermOrder& order) {
    std::vector<Term> out;
    out.reserve(r.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < r.terms.size() && j < g.terms.size()) {
        Monomial gm = g.terms[j].mono * m;
        int cmp = order.compare(r.terms[i].mono, gm);
        if (cmp > 0) {
            out.push_back(std::move(r.terms[i]));
            ++i;
        } else if (cmp < 0) {
            out.push_back({-(c * g.terms[j].coeff), std::move(gm)});
            ++j;
        } else {
            Rational s = r.terms[i].coeff - c * g.terms[j].coeff;
            if (sgn(s) != 0) out.push_back({std::move(s), std::move(gm)});
            ++i, ++j;
        }
    }
    for (; i < r.terms.size(); ++i) out.push_back(std::move(r.terms[i]));
    for (; j < g.terms.size(); ++j)
        out.push_back({-(c * g.terms[j].coeff), g.terms[j].mono * m});
    r.terms = std::move(out);
}

struct DivisionStep {
    std::size_t basis_index;
    Rational coeff;
    Monomial mono;
};

// Full multivariate division: no term of the remainder is divisible by
// any basis leading monomial.  Steps are recorded when `cert` is given.
// `lm_masks`, when supplied, are the basis leading-support masks.
inline EnginePoly normal_form_engine(EnginePoly r, const std::vector<EnginePoly>& basis,
                                     const TermOrder& order, Budget* budget = nullptr,
                                     std::vector<DivisionStep>* cert = nullptr,
                                     const std::vector<std::uint64_t>* lm_masks = nullptr,
                                     std::size_t skip = static_cast<std::size_t>(-1)) {
    std::vector<std::uint64_t> local_masks;
    if (!lm_masks) {
        local_masks.reserve(basis.size());
        for (const auto& g : basis)
            local_masks.push_back(g.is_zero() ? ~std::uint64_t(0) : g.lead().mono.support_mask());
        lm_masks = &local_masks;
    }
    std::vector<Term> done;
    while (!r.terms.empty()) {
        if (budget) budget->tick("polynomial reduction");
        const Term& t = r.terms.front();
        const std::uint64_t t_mask = t.mono.support_mask();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip) continue;
            if ((*lm_masks)[k] & ~t_mask) continue;
            if (basis[k].is_zero()) continue;
            const Term& lt = basis[k].lead();
            if (!lt.mono.divides(t.mono)) continue;
            Rational c = t.coeff / lt.coeff;
            Monomial m = quotient(t.mono, lt.mono);
            if (cert) cert->push_back({k, c, m});
            sub_mul(r, c, m, basis[k], order);
            reduced = true;
            break;
        }
        if (!reduced) {
            done.push_back(std::move(r.terms.front()));
            r.terms.erase(r.terms.begin());
        }
    }
    r.terms = std::move(done);
    return r;
}

// Pair queue entries hold no monomials; lcms are recomputed on the fly
// from the basis leading terms when needed.
struct SPair {
    std::uint32_t deg;
    std::size_t i, j;
    std::uint64_t lcm_mask;

    friend bool operator<(const SPair& a, const SPair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Buchberger with the Gebauer-Möller pair update (coprimality and chain
// criteria) and the normal selection strategy: pairs by ascending lcm
// degree, then pair index.  Processing pairs degree by degree also gives
// the degree-truncated bases used for homogeneous ideals.
class BuchbergerState {
public:
    BuchbergerState(std::size_t nvars, TermOrder order, Budget* budget = nullptr)
        : nvars_(nvars), order_(std::move(order)), budget_(budget) {}

    const TermOrder& order() const { return order_; }
    const std::vector<EnginePoly>& basis() const { return basis_; }

    // Reduces p against the current basis; if nonzero, installs the
    // remainder as a new basis element and updates the pair queue.
    // Returns false when p reduced to zero.
    bool add_generator(const Polynomial& p) {
        EnginePoly e = EnginePoly::from(p, order_);
        e = normal_form_engine(std::move(e), basis_, order_, budget_, nullptr, &lm_masks_);
        if (e.is_zero()) return false;
        install(std::move(e));
        return true;
    }

    // Processes all queued S-pairs with lcm degree <= max_degree.
    void process_pairs(std::uint32_t max_degree) {
        while (!pairs_.empty()) {
            auto it = pairs_.begin();
            if (it->deg > max_degree) return;
            SPair pr = *it;
            pairs_.erase(it);
            if (budget_) budget_->tick("s-pair");
            EnginePoly s = spoly(pr.i, pr.j);
            s = normal_form_engine(std::move(s), basis_, order_, budget_, nullptr, &lm_masks_);
            if (!s.is_zero()) install(std::move(s));
        }
    }

    void run() { process_pairs(UINT32_MAX); }

    // Minimal, monic, self-reduced basis, sorted by (LM degree, lex LM).
    std::vector<Polynomial> reduced_basis() const {
        std::vector<EnginePoly> minimal;
        std::vector<std::uint64_t> minimal_masks;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            const std::uint64_t mi = lm_masks_[i];
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j || (lm_masks_[j] & ~mi)) continue;
                if (basis_[j].lead().mono.divides(basis_[i].lead().mono)) {
                    // break ties (equal LMs) toward the earlier element
                    if (basis_[i].lead().mono == basis_[j].lead().mono)
                        redundant = j < i;
                    else
                        redundant = true;
                }
            }
            if (!redundant) {
                minimal.push_back(basis_[i]);
                minimal_masks.push_back(mi);
            }
        }
        // tail-reduce each element against the others
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            EnginePoly r = normal_form_engine(minimal[i], minimal, order_, budget_, nullptr,
                                              &minimal_masks, i);
            Polynomial p = r.to_polynomial(nvars_);
            out.push_back(p.monic(order_));
        }
        // deterministic output order: degree, then lex on leading monomial
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            const Monomial& ma = a.leading_term(order_).mono;
            const Monomial& mb = b.leading_term(order_).mono;
            if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
            return lex_compare(ma, mb) > 0;
        });
        return out;
    }

private:
    EnginePoly spoly(std::size_t i, std::size_t j) const {
        const EnginePoly& f = basis_[i];
        const EnginePoly& g = basis_[j];
        Monomial l = lcm(f.lead().mono, g.lead().mono);
        EnginePoly s;
        // s = x^(l/LMf)/lc(f) * f, then subtract the matching g multiple
        Monomial mf = quotient(l, f.lead().mono);
        Rational inv_f = Rational(1) / f.lead().coeff;
        s.terms.reserve(f.terms.size());
        for (const auto& t : f.terms) s.terms.push_back({t.coeff * inv_f, t.mono * mf});
        sub_mul(s, Rational(1) / g.lead().coeff, quotient(l, g.lead().mono), g, order_);
        return s;
    }

    // exponent of variable v in lcm(LM(basis[i]), LM(basis[j]))
    std::uint32_t pair_lcm_exp(std::size_t i, std::size_t j, std::size_t v) const {
        return std::max(basis_[i].lead().mono[v], basis_[j].lead().mono[v]);
    }

    void install(EnginePoly e) {
        // keep coefficients integral and content-free
        Polynomial prim = e.to_polynomial(nvars_).primitive_part();
        e = EnginePoly::from(prim, order_);
        const std::size_t t = basis_.size();
        const Monomial& lmt = e.lead().mono;
        const std::uint64_t mask_t = lmt.support_mask();

        // Gebauer-Möller update.  Flat buffer of the fresh lcms
        // lcm(LM_i, LM_t); no monomial objects are allocated.
        std::vector<std::uint32_t> lcm_exps(t * nvars_);
        std::vector<std::uint32_t> lcm_deg(t);
        std::vector<std::uint64_t> lcm_mask(t);
        std::vector<char> drop(t, 0), is_coprime(t, 0);
        for (std::size_t i = 0; i < t; ++i) {
            const Monomial& lmi = basis_[i].lead().mono;
            std::uint32_t deg = 0;
            std::uint64_t mask = 0;
            bool cop = true;
            for (std::size_t v = 0; v < nvars_; ++v) {
                std::uint32_t ev = std::max(lmi[v], lmt[v]);
                lcm_exps[i * nvars_ + v] = ev;
                deg += ev;
                if (ev) mask |= std::uint64_t(1) << (v & 63);
                if (lmi[v] && lmt[v]) cop = false;
            }
            lcm_deg[i] = deg;
            lcm_mask[i] = mask;
            is_coprime[i] = cop;
        }
        auto fresh_divides = [&](std::size_t b, std::size_t a) {
            for (std::size_t v = 0; v < nvars_; ++v)
                if (lcm_exps[b * nvars_ + v] > lcm_exps[a * nvars_ + v]) return false;
            return true;
        };
        auto fresh_equal = [&](std::size_t a, std::size_t b) {
            for (std::size_t v = 0; v < nvars_; ++v)
                if (lcm_exps[a * nvars_ + v] != lcm_exps[b * nvars_ + v]) return false;
            return true;
        };
        // chain criterion among the fresh pairs
        for (std::size_t a = 0; a < t; ++a) {
            for (std::size_t b = 0; b < t && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (lcm_deg[b] >= lcm_deg[a]) continue;  // proper divisor is smaller
                if (lcm_mask[b] & ~lcm_mask[a]) continue;
                if (fresh_divides(b, a)) drop[a] = 1;
            }
        }
        // one representative per lcm; a coprime member kills the class
        for (std::size_t a = 0; a < t; ++a) {
            if (drop[a]) continue;
            bool class_coprime = is_coprime[a];
            for (std::size_t b = a + 1; b < t; ++b) {
                if (drop[b] || lcm_deg[a] != lcm_deg[b] || lcm_mask[a] != lcm_mask[b] ||
                    !fresh_equal(a, b))
                    continue;
                drop[b] = 1;
                if (is_coprime[b]) class_coprime = true;
            }
            if (class_coprime) drop[a] = 1;
        }
        // chain criterion against queued pairs
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const SPair& pr = *it;
            if (mask_t & ~pr.lcm_mask) {
                ++it;
                continue;
            }
            bool divides = true, eq_i = true, eq_j = true;
            for (std::size_t v = 0; v < nvars_ && divides; ++v) {
                std::uint32_t l = pair_lcm_exp(pr.i, pr.j, v);
                if (lmt[v] > l) divides = false;
                if (std::max(basis_[pr.i].lead().mono[v], lmt[v]) != l) eq_i = false;
                if (std::max(basis_[pr.j].lead().mono[v], lmt[v]) != l) eq_j = false;
            }
            if (divides && !eq_i && !eq_j)
                it = pairs_.erase(it);
            else
                ++it;
        }
        for (std::size_t a = 0; a < t; ++a)
            if (!drop[a]) pairs_.insert(SPair{lcm_deg[a], a, t, lcm_mask[a]});
        lm_masks_.push_back(mask_t);
        basis_.push_back(std::move(e));
    }

    std::size_t nvars_;
    TermOrder order_;
    Budget* budget_;
    std::vector<EnginePoly> basis_;
    std::vector<std::uint64_t> lm_masks_;
    std::set<SPair> pairs_;
};

inline Polynomial extend_ring(const Polynomial& p, std::size_t new_nvars) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e = t.mono.exps();
        e.resize(new_nvars, 0);
        terms.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(new_nvars, std::move(terms));
}

inline Polynomial restrict_ring(const Polynomial& p, std::size_t new_nvars) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e = t.mono.exps();
        for (std::size_t v = new_nvars; v < e.size(); ++v)
            if (e[v] != 0) throw Error("restrict_ring: polynomial uses a dropped variable");
        e.resize(new_nvars);
        terms.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(new_nvars, std::move(terms));
}

} // namespace detail

// Unique reduced Gröbner basis of I for the given order.
inline std::vector<Polynomial> reduced_groebner(const Ideal& ideal, const TermOrder& order,
                                                Budget* budget = nullptr) {
    if (auto c = ideal.cached_basis(); c && c->order == order) return c->basis;
    std::vector<Polynomial> gens = ideal.generators();
    // deterministic input order
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        const Monomial& ma = a.leading_term(order).mono;
        const Monomial& mb = b.leading_term(order).mono;
        int c = order.compare(ma, mb);
        if (c != 0) return c < 0;
        return a.str() < b.str();
    });
    detail::BuchbergerState st(ideal.nvars(), order, budget);
    for (const auto& g : gens) st.add_generator(g);
    st.run();
    auto basis = st.reduced_basis();
    ideal.store_basis(order, basis);
    return basis;
}

struct DivisionCertificate {
    // f = sum_k quotients[k] * basis[k] + remainder
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Remainder of f on division by G (G need not be a Gröbner basis; the
// remainder is canonical when it is).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const TermOrder& order = TermOrder::grevlex(),
                              Budget* budget = nullptr,
                              DivisionCertificate* certificate = nullptr) {
    if (basis.empty()) throw Error("normal_form: empty divisor list");
    std::vector<detail::EnginePoly> eb;
    for (const auto& g : basis) {
        if (g.nvars() != f.nvars()) throw RingMismatch("normal_form ring mismatch");
        eb.push_back(detail::EnginePoly::from(g, order));
    }
    std::vector<detail::DivisionStep> steps;
    auto r = detail::normal_form_engine(detail::EnginePoly::from(f, order), eb, order, budget,
                                        certificate ? &steps : nullptr);
    Polynomial rem = r.to_polynomial(f.nvars());
    if (certificate) {
        certificate->quotients.assign(basis.size(), Polynomial::zero(f.nvars()));
        std::vector<std::vector<Term>> acc(basis.size());
        for (auto& s : steps) acc[s.basis_index].push_back({std::move(s.coeff), std::move(s.mono)});
        for (std::size_t k = 0; k < basis.size(); ++k)
            certificate->quotients[k] = Polynomial(f.nvars(), std::move(acc[k]));
        certificate->remainder = rem;
    }
    return rem;
}

inline bool ideal_member(const Polynomial& f, const Ideal& ideal,
                         Budget* budget = nullptr) {
    if (f.is_zero()) return true;
    if (ideal.is_zero_ideal()) return false;
    auto gb = reduced_groebner(ideal, TermOrder::grevlex(), budget);
    return normal_form(f, gb, TermOrder::grevlex(), budget).is_zero();
}

// inner ⊆ outer
inline bool is_subideal(const Ideal& inner, const Ideal& outer, Budget* budget = nullptr) {
    if (inner.nvars() != outer.nvars()) throw RingMismatch("ideal containment ring mismatch");
    if (inner.is_zero_ideal()) return true;
    if (outer.is_zero_ideal()) return false;
    auto gb = reduced_groebner(outer, TermOrder::grevlex(), budget);
    for (const auto& g : inner.generators())
        if (!normal_form(g, gb, TermOrder::grevlex(), budget).is_zero()) return false;
    return true;
}

// Order-independent: both sides are rebased to grevlex.
inline bool ideal_equal(const Ideal& a, const Ideal& b, Budget* budget = nullptr) {
    return is_subideal(a, b, budget) && is_subideal(b, a, budget);
}

// I ∩ Q[x \ vars], as an ideal of the full ambient ring.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars,
                       Budget* budget = nullptr) {
    if (ideal.is_zero_ideal()) return ideal;
    TermOrder order = TermOrder::elimination(vars, ideal.nvars());
    detail::BuchbergerState st(ideal.nvars(), order, budget);
    for (const auto& g : ideal.generators()) st.add_generator(g);
    st.run();
    std::vector<Polynomial> kept;
    for (const auto& g : st.reduced_basis()) {
        bool uses = false;
        for (auto v : vars)
            if (g.uses_variable(v)) { uses = true; break; }
        if (!uses) kept.push_back(g);
    }
    return Ideal(ideal.nvars(), std::move(kept));
}

namespace detail {

inline bool all_generators_homogeneous(const Ideal& ideal) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous()) return false;
    return true;
}

// I : x_v^∞ for a homogeneous ideal: take a Gröbner basis for grevlex
// with x_v ranked last and divide every element by its x_v power.
inline Ideal saturate_var_homogeneous(const Ideal& ideal, std::size_t v, Budget* budget) {
    TermOrder order = TermOrder::grevlex_var_last(v, ideal.nvars());
    detail::BuchbergerState st(ideal.nvars(), order, budget);
    for (const auto& g : ideal.generators()) st.add_generator(g);
    st.run();
    std::vector<Polynomial> out;
    for (const auto& g : st.reduced_basis()) {
        std::uint32_t m = UINT32_MAX;
        for (const auto& t : g.terms()) m = std::min(m, t.mono[v]);
        if (m == 0) {
            out.push_back(g);
            continue;
        }
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            std::vector<std::uint32_t> e = t.mono.exps();
            e[v] -= m;
            terms.push_back({t.coeff, Monomial(std::move(e))});
        }
        out.push_back(Polynomial(ideal.nvars(), std::move(terms)));
    }
    return Ideal(ideal.nvars(), std::move(out));
}

// Rabinowitsch: eliminate y from I + <y*x_v - 1>.
inline Ideal saturate_var_rabinowitsch(const Ideal& ideal, std::size_t v, Budget* budget) {
    std::size_t t = ideal.nvars();
    std::vector<Polynomial> lifted;
    for (const auto& g : ideal.generators()) lifted.push_back(extend_ring(g, t + 1));
    Polynomial aux = Polynomial::variable(t + 1, t) * Polynomial::variable(t + 1, v) -
                     Polynomial::constant(t + 1, Rational(1));
    lifted.push_back(std::move(aux));
    Ideal big(t + 1, std::move(lifted));
    Ideal elim = eliminate(big, {t}, budget);
    std::vector<Polynomial> out;
    for (const auto& g : elim.generators()) out.push_back(restrict_ring(g, t));
    return Ideal(t, std::move(out));
}

} // namespace detail

// I : x_v^∞ (single variable)
inline Ideal saturate_variable(const Ideal& ideal, std::size_t v, Budget* budget = nullptr) {
    if (ideal.is_zero_ideal()) return ideal;
    bool used = false;
    for (const auto& g : ideal.generators())
        if (g.uses_variable(v)) { used = true; break; }
    if (!used) return ideal;  // x_v is regular modulo I
    if (detail::all_generators_homogeneous(ideal))
        return detail::saturate_var_homogeneous(ideal, v, budget);
    return detail::saturate_var_rabinowitsch(ideal, v, budget);
}

// I : (prod of vars)^∞ via sequential single-variable saturation in
// index order; I : (fg)^∞ = (I : f^∞) : g^∞ makes one sweep exact.
inline Ideal saturate(const Ideal& ideal, std::vector<std::size_t> vars,
                      Budget* budget = nullptr) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Ideal cur = ideal;
    for (auto v : vars) cur = saturate_variable(cur, v, budget);
    return cur;
}

inline Ideal saturate_all_variables(const Ideal& ideal, Budget* budget = nullptr) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < ideal.nvars(); ++v) vars.push_back(v);
    return saturate(ideal, std::move(vars), budget);
}

} // namespace slackkit
