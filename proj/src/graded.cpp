#include "loopalg/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace loopalg {

GradedAlgebra::GradedAlgebra(RingTag ring, std::vector<GeneratorSpec> gens)
    : ring_(ring), gens_(std::move(gens)) {
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (!names.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name: " + g.name);
    }
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

bool Monomial::is_unit() const {
    return std::all_of(exp.begin(), exp.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint32_t Monomial::word_length() const {
    std::uint32_t n = 0;
    for (auto e : exp) n += e;
    return n;
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > m.exp[i]) return false;
    return true;
}

Monomial unit_monomial(const GradedAlgebra& A) { return Monomial(A.size()); }

Monomial generator_monomial(const GradedAlgebra& A, std::size_t i, std::uint32_t e) {
    Monomial m(A.size());
    m.exp[i] = e;
    return m;
}

long degree_of(const GradedAlgebra& A, const Monomial& m) {
    long d = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        d += static_cast<long>(m.exp[i]) * A.gen(i).degree;
    return d;
}

Monomial quotient_monomial(const Monomial& m, const Monomial& d) {
    Monomial q = m;
    for (std::size_t i = 0; i < q.exp.size(); ++i) q.exp[i] -= d.exp[i];
    return q;
}

Scalar koszul_sign(const GradedAlgebra& A, const Monomial& m1, const Monomial& m2) {
    if (A.ring() == RingTag::GF2) return Scalar::one(RingTag::GF2);
    // s = sum_{i>j} m1[i]*m2[j] over odd-degree generator pairs.
    std::uint64_t s = 0;
    for (std::size_t i = 1; i < m1.exp.size(); ++i) {
        if (!A.gen_is_odd(i) || m1.exp[i] == 0) continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (!A.gen_is_odd(j)) continue;
            s += static_cast<std::uint64_t>(m1.exp[i]) * m2.exp[j];
        }
    }
    Scalar one = Scalar::one(A.ring());
    return (s % 2 == 0) ? one : -one;
}

Element zero_element() { return Element{}; }

Element unit_element(const GradedAlgebra& A) {
    return make_element(A, unit_monomial(A), Scalar::one(A.ring()));
}

Element make_element(const GradedAlgebra& A, const Monomial& m, const Scalar& c) {
    Element e;
    add_term(A, e, m, c);
    return e;
}

Element gen_element(const GradedAlgebra& A, std::size_t i, std::uint32_t e) {
    return make_element(A, generator_monomial(A, i, e), Scalar::one(A.ring()));
}

void add_term(const GradedAlgebra& A, Element& e, const Monomial& m, const Scalar& c) {
    if (c.tag() != A.ring()) throw RingMismatch("coefficient ring mismatch");
    if (c.is_zero()) return;
    auto it = e.terms.find(m);
    if (it == e.terms.end()) {
        e.terms.emplace(m, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            e.terms.erase(it);
        else
            it->second = s;
    }
}

Element add(const GradedAlgebra& A, const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [m, c] : b.terms) add_term(A, r, m, c);
    return r;
}

Element sub(const GradedAlgebra& A, const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [m, c] : b.terms) add_term(A, r, m, -c);
    return r;
}

Element scale(const GradedAlgebra& A, const Scalar& c, const Element& e) {
    Element r;
    for (const auto& [m, k] : e.terms) add_term(A, r, m, c * k);
    return r;
}

Element mul_monomials(const GradedAlgebra& A, const Monomial& m1, const Scalar& c1,
                      const Monomial& m2, const Scalar& c2) {
    Monomial prod(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        prod.exp[i] = m1.exp[i] + m2.exp[i];
        if (A.gen(i).kind == GenKind::Exterior && prod.exp[i] >= 2) return zero_element();
    }
    Scalar c = c1 * c2 * koszul_sign(A, m1, m2);
    return make_element(A, prod, c);
}

Element mul_free(const GradedAlgebra& A, const Element& a, const Element& b) {
    Element r;
    for (const auto& [m1, c1] : a.terms)
        for (const auto& [m2, c2] : b.terms) {
            Element t = mul_monomials(A, m1, c1, m2, c2);
            for (const auto& [m, c] : t.terms) add_term(A, r, m, c);
        }
    return r;
}

bool is_homogeneous(const GradedAlgebra& A, const Element& e) {
    if (e.terms.empty()) return true;
    long d = degree_of(A, e.terms.begin()->first);
    for (const auto& [m, c] : e.terms)
        if (degree_of(A, m) != d) return false;
    return true;
}

std::optional<long> degree_of(const GradedAlgebra& A, const Element& e) {
    if (e.terms.empty()) return std::nullopt;
    long d = degree_of(A, e.terms.begin()->first);
    for (const auto& [m, c] : e.terms)
        if (degree_of(A, m) != d)
            throw std::invalid_argument("degree_of: mixed-degree element");
    return d;
}

std::map<long, Element> homogeneous_parts(const GradedAlgebra& A, const Element& e) {
    std::map<long, Element> parts;
    for (const auto& [m, c] : e.terms) add_term(A, parts[degree_of(A, m)], m, c);
    return parts;
}

std::string display(const GradedAlgebra& A, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << A.gen(i).name;
        if (m.exp[i] > 1) os << "^" << m.exp[i];
    }
    return os.str();
}

std::string display(const GradedAlgebra& A, const Element& e) {
    if (e.terms.empty()) return "0";
    // Display order: by degree, then lexicographically by exponent vector.
    std::vector<std::pair<Monomial, Scalar>> terms(e.terms.begin(), e.terms.end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        long da = degree_of(A, a.first), db = degree_of(A, b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.is_unit())
            os << cs;
        else if (cs == "1")
            os << display(A, m);
        else
            os << cs << "*" << display(A, m);
    }
    return os.str();
}

}  // namespace loopalg
