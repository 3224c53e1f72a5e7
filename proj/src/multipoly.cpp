#include "wsd/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wsd {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(int variableCount) : vars_(variableCount) {
    if (variableCount < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int variableCount, const Rational& c) {
    MultiPoly p(variableCount);
    p.addTerm(Exponents(variableCount, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int variableCount, int index) {
    MultiPoly p(variableCount);
    p.checkIndex(index);
    Exponents k(variableCount, 0);
    k[index] = 1;
    p.addTerm(k, 1);
    return p;
}

void MultiPoly::checkSameVars(const MultiPoly& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("polynomial variable count mismatch");
}

void MultiPoly::checkIndex(int var) const {
    if (var < 0 || var >= vars_)
        throw std::invalid_argument("polynomial variable index out of range");
}

void MultiPoly::addTerm(const Exponents& k, const Rational& c) {
    if (static_cast<int>(k.size()) != vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coefficient(const Exponents& k) const {
    if (static_cast<int>(k.size()) != vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    checkSameVars(other);
    MultiPoly result = *this;
    for (const auto& [k, c] : other.terms_) result.addTerm(k, c);
    return result;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    checkSameVars(other);
    MultiPoly result = *this;
    for (const auto& [k, c] : other.terms_) result.addTerm(k, -c);
    return result;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    checkSameVars(other);
    MultiPoly result(vars_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : other.terms_) {
            Exponents k(vars_);
            for (int i = 0; i < vars_; ++i) k[i] = ka[i] + kb[i];
            result.addTerm(k, ca * cb);
        }
    }
    return result;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly result(vars_);
    if (c == 0) return result;
    for (const auto& [k, coef] : terms_) result.terms_.emplace(k, coef * c);
    return result;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return vars_ == other.vars_ && terms_ == other.terms_;
}

MultiPoly MultiPoly::homogeneousAntiderivative(int var, int times) const {
    checkIndex(var);
    if (times < 0) throw std::invalid_argument("negative antiderivative count");
    MultiPoly result = *this;
    for (int round = 0; round < times; ++round) {
        MultiPoly next(vars_);
        for (const auto& [k, c] : result.terms_) {
            Exponents up = k;
            up[var] += 1;
            next.addTerm(up, c / Rational(up[var]));
        }
        result = next;
    }
    return result;
}

MultiPoly MultiPoly::substituteSum(int var, const std::set<int>& replacement) const {
    checkIndex(var);
    if (replacement.count(var))
        throw std::invalid_argument("substituteSum: variable occurs in replacement set");
    MultiPoly sum(vars_);
    for (int i : replacement) {
        checkIndex(i);
        sum = sum + MultiPoly::variable(vars_, i);
    }
    MultiPoly result(vars_);
    for (const auto& [k, c] : terms_) {
        Exponents base = k;
        unsigned power = base[var];
        base[var] = 0;
        MultiPoly term(vars_);
        term.addTerm(base, c);
        for (unsigned p = 0; p < power; ++p) term = term * sum;
        result = result + term;
    }
    return result;
}

MultiPoly MultiPoly::withVariables(int newCount, const std::vector<int>& slotOf) const {
    if (static_cast<int>(slotOf.size()) != vars_)
        throw std::invalid_argument("withVariables: slot map length mismatch");
    std::set<int> seen;
    for (int s : slotOf) {
        if (s < 0 || s >= newCount || !seen.insert(s).second)
            throw std::invalid_argument("withVariables: slots must be distinct and in range");
    }
    MultiPoly result(newCount);
    for (const auto& [k, c] : terms_) {
        Exponents mapped(newCount, 0);
        for (int i = 0; i < vars_; ++i) mapped[slotOf[i]] = k[i];
        result.addTerm(mapped, c);
    }
    return result;
}

std::string MultiPoly::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first: reverse of the ascending map order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (int i = 0; i < vars_; ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        if (mono.empty()) {
            os << wsd::toString(abs);
        } else if (abs == 1) {
            os << mono;
        } else {
            os << wsd::toString(abs) << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace wsd
