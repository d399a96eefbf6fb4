#include "rkconvex/sparse_poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "rkconvex/errors.hpp"

namespace rkconvex::poly {

Rational rat_pow(const Rational& r, unsigned e) {
    // num and den are coprime, so their powers are; no canonicalization needed
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), r.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den().get_mpz_t(), r.get_den().get_mpz_t(), e);
    return out;
}

SparsePoly SparsePoly::constant(const Rational& r) {
    SparsePoly p;
    if (r != 0) p.terms_.push_back({Monomial{}, r});
    return p;
}

SparsePoly SparsePoly::variable(int var) { return term(1, var, 1); }

SparsePoly SparsePoly::term(const Rational& coeff, int var, unsigned exp) {
    SparsePoly p;
    if (coeff != 0) {
        Monomial m;
        m.e[var] = static_cast<std::uint16_t>(exp);
        p.terms_.push_back({m, coeff});
    }
    return p;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
    SparsePoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (grlex_less(o.terms_[j].mono, terms_[i].mono)) {
            out.terms_.push_back(terms_[i++]);
        } else {
            out.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    // accumulate in a hash map keyed by the packed exponent vector, then
    // restore canonical order once
    std::unordered_map<std::uint64_t, Rational> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            const std::uint64_t key = (a.mono * b.mono).pack();
            acc[key] += a.coeff * b.coeff;
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [key, coeff] : acc)
        if (coeff != 0) terms.push_back({Monomial::unpack(key), std::move(coeff)});
    return from_terms(std::move(terms));
}

SparsePoly SparsePoly::operator*(const Rational& r) const {
    if (r == 0) return {};
    SparsePoly out = *this;
    for (auto& t : out.terms_) t.coeff *= r;
    return out;
}

SparsePoly SparsePoly::diff(int var) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.mono.e[var] == 0) continue;
        Term d = t;
        d.coeff *= static_cast<unsigned long>(t.mono.e[var]);
        d.mono.e[var] -= 1;
        terms.push_back(std::move(d));
    }
    return from_terms(std::move(terms));
}

Rational SparsePoly::eval(const std::array<Rational, kNumVars>& point) const {
    // power tables per variable up to the degree actually used
    std::array<std::vector<Rational>, kNumVars> pows;
    for (int v = 0; v < kNumVars; ++v) pows[v].push_back(1);
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational val = t.coeff;
        for (int v = 0; v < kNumVars; ++v) {
            while (pows[v].size() <= t.mono.e[v]) pows[v].push_back(pows[v].back() * point[v]);
            val *= pows[v][t.mono.e[v]];
        }
        sum += val;
    }
    return sum;
}

double SparsePoly::eval_double(const std::array<double, kNumVars>& point) const {
    double sum = 0;
    for (const auto& t : terms_) {
        double val = t.coeff.get_d();
        for (int v = 0; v < kNumVars; ++v)
            for (int k = 0; k < t.mono.e[v]; ++k) val *= point[v];
        sum += val;
    }
    return sum;
}

SparsePoly SparsePoly::substitute(int var, const Rational& value) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term s = t;
        if (s.mono.e[var] > 0) {
            s.coeff *= rat_pow(value, s.mono.e[var]);
            s.mono.e[var] = 0;
        }
        if (s.coeff != 0) terms.push_back(std::move(s));
    }
    return from_terms(std::move(terms));
}

SparsePoly SparsePoly::coeff_of(int var, unsigned k) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        if (t.mono.e[var] != k) continue;
        Term s = t;
        s.mono.e[var] = 0;
        terms.push_back(std::move(s));
    }
    return from_terms(std::move(terms));
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

int SparsePoly::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.e[var]));
    return d;
}

int SparsePoly::total_degree_in(std::initializer_list<int> vars) const {
    int d = -1;
    for (const auto& t : terms_) {
        int s = 0;
        for (int v : vars) s += t.mono.e[v];
        d = std::max(d, s);
    }
    return d;
}

std::optional<SparsePoly> SparsePoly::div_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    // Leading terms multiply under grlex, so if divisor | p the greedy
    // leading-term reduction terminates with zero remainder.
    SparsePoly rem = *this;
    std::vector<Term> quot;
    const Term& lead_d = divisor.terms_.front();
    while (!rem.is_zero()) {
        const Term& lead_r = rem.terms_.front();
        Monomial q;
        for (int v = 0; v < kNumVars; ++v) {
            if (lead_r.mono.e[v] < lead_d.mono.e[v]) return std::nullopt;
            q.e[v] = static_cast<std::uint16_t>(lead_r.mono.e[v] - lead_d.mono.e[v]);
        }
        Term qt{q, lead_r.coeff / lead_d.coeff};
        SparsePoly qp;
        qp.terms_.push_back(qt);
        rem = rem - qp * divisor;
        quot.push_back(std::move(qt));
    }
    return from_terms(std::move(quot));
}

std::string SparsePoly::to_string(const std::array<std::string, kNumVars>& names) const {
    if (terms_.empty()) return "0/1";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.get_num().get_str() << "/" << t.coeff.get_den().get_str();
        for (int v = 0; v < kNumVars; ++v) os << "*" << names[v] << "^" << t.mono.e[v];
    }
    return os.str();
}

SparsePoly pseudo_rem_linear(const SparsePoly& p, const SparsePoly& d, int var) {
    if (d.degree_in(var) != 1)
        throw DegreeError("pseudo_rem_linear: divisor must have degree exactly 1 in the variable");
    const SparsePoly lead = d.coeff_of(var, 1);   // lc(d, var)
    const SparsePoly tail = d.coeff_of(var, 0);   // d = lead*x_var + tail
    // lead*x_var == -tail (mod d): peel the top c-degree off one step at a time
    SparsePoly r = p;
    int deg;
    while ((deg = r.degree_in(var)) >= 1) {
        const unsigned k = static_cast<unsigned>(deg);
        SparsePoly top = r.coeff_of(var, k);                           // no x_var inside
        SparsePoly top_term = top * SparsePoly::term(1, var, k);       // the part removed
        SparsePoly repl = top * tail * SparsePoly::term(1, var, k - 1);
        r = (r - top_term) * lead - repl;
    }
    return r;
}

SparsePoly poly_det3(const PolyMatrix3& m) {
    const auto& e = m.entry;
    SparsePoly minor0 = e[1][1] * e[2][2] - e[1][2] * e[2][1];
    SparsePoly minor1 = e[1][0] * e[2][2] - e[1][2] * e[2][0];
    SparsePoly minor2 = e[1][0] * e[2][1] - e[1][1] * e[2][0];
    return e[0][0] * minor0 - e[0][1] * minor1 + e[0][2] * minor2;
}

}  // namespace rkconvex::poly
