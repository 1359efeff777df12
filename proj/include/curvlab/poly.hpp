#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/errors.hpp"
#include "curvlab/rational.hpp"

namespace curvlab {

/// Exact multivariate polynomial over the rationals in a fixed number of
/// coordinates. Terms map an exponent multi-index to a nonzero coefficient;
/// the map is kept free of zero coefficients, so equality is plain map
/// comparison.
class PolyScalar {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    explicit PolyScalar(int num_vars = 0) : num_vars_(num_vars) {
        if (num_vars < 0) throw argument_error("negative num_vars");
    }

    static PolyScalar constant(int num_vars, Rat c) {
        PolyScalar p(num_vars);
        if (c != 0) p.terms_.emplace(Exponents(num_vars, 0), std::move(c));
        return p;
    }

    /// The coordinate function x_var (0-based).
    static PolyScalar variable(int num_vars, int var) {
        PolyScalar p(num_vars);
        p.check_var(var);
        Exponents e(num_vars, 0);
        e[var] = 1;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    static PolyScalar monomial(int num_vars, Exponents e, Rat c) {
        PolyScalar p(num_vars);
        if (static_cast<int>(e.size()) != num_vars)
            throw argument_error("exponent vector length mismatch");
        for (int k : e)
            if (k < 0) throw argument_error("negative exponent");
        if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                            [](int k) { return k == 0; }));
    }

    /// Coefficient of the constant term (the value at the origin).
    Rat constant_term() const {
        auto it = terms_.find(Exponents(num_vars_, 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    friend bool operator==(const PolyScalar& a, const PolyScalar& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    PolyScalar& operator+=(const PolyScalar& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyScalar& operator-=(const PolyScalar& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }

    friend PolyScalar operator-(const PolyScalar& a) {
        PolyScalar r(a.num_vars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
        a.check_compat(b);
        PolyScalar r(a.num_vars_);
        Exponents e(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    PolyScalar& operator*=(const PolyScalar& o) { return *this = *this * o; }

    friend PolyScalar operator*(const Rat& c, const PolyScalar& a) {
        PolyScalar r(a.num_vars_);
        if (c == 0) return r;
        for (const auto& [e, coef] : a.terms_) r.terms_.emplace(e, c * coef);
        return r;
    }
    friend PolyScalar operator*(const PolyScalar& a, const Rat& c) { return c * a; }

    /// Formal partial derivative in coordinate var (0-based).
    PolyScalar partial(int var) const {
        check_var(var);
        PolyScalar r(num_vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, c * e[var]);
        }
        return r;
    }

    /// Exact value at a rational point.
    Rat eval(std::span<const Rat> point) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw argument_error("evaluation point length mismatch");
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < num_vars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }
    Rat eval(const std::vector<Rat>& point) const { return eval(std::span<const Rat>(point)); }

    double eval_double(std::span<const double> point) const {
        double acc = 0;
        for (const auto& [e, c] : terms_) {
            double t = to_double(c);
            for (int i = 0; i < num_vars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Substitutes each coordinate by a polynomial (all subs share a variable
    /// count, which becomes the result's).
    PolyScalar substitute(const std::vector<PolyScalar>& subs) const {
        if (static_cast<int>(subs.size()) != num_vars_)
            throw argument_error("substitution arity mismatch");
        int out_vars = subs.empty() ? 0 : subs[0].num_vars();
        for (const auto& s : subs)
            if (s.num_vars() != out_vars) throw argument_error("substitution num_vars mismatch");

        // Precompute powers of each substituted coordinate.
        std::vector<int> max_exp(num_vars_, 0);
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < num_vars_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
        std::vector<std::vector<PolyScalar>> powers(num_vars_);
        for (int i = 0; i < num_vars_; ++i) {
            powers[i].push_back(PolyScalar::constant(out_vars, 1));
            for (int k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * subs[i]);
        }
        PolyScalar r(out_vars);
        for (const auto& [e, c] : terms_) {
            PolyScalar t = PolyScalar::constant(out_vars, c);
            for (int i = 0; i < num_vars_; ++i)
                if (e[i] > 0) t *= powers[i][e[i]];
            r += t;
        }
        return r;
    }

    /// Recenters the chart at `point`: p_shifted(x) = p(x + point).
    PolyScalar translate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw argument_error("translation point length mismatch");
        std::vector<PolyScalar> subs;
        subs.reserve(num_vars_);
        for (int i = 0; i < num_vars_; ++i)
            subs.push_back(variable(num_vars_, i) + constant(num_vars_, point[i]));
        return substitute(subs);
    }

private:
    void check_compat(const PolyScalar& o) const {
        if (num_vars_ != o.num_vars_) throw argument_error("num_vars mismatch");
    }
    void check_var(int var) const {
        if (var < 0 || var >= num_vars_) throw argument_error("coordinate index out of range");
    }
    void add_term(const Exponents& e, Rat c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int num_vars_;
    TermMap terms_;
};

} // namespace curvlab
