#include "hooktab/coefficient.hpp"

#include <sstream>

namespace hooktab {

CoefficientAB::CoefficientAB(long long constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

CoefficientAB CoefficientAB::term(BigInt value, int alpha_exp, int beta_exp) {
    CoefficientAB c;
    if (value != 0) c.terms_[{alpha_exp, beta_exp}] = std::move(value);
    return c;
}

BigInt CoefficientAB::coefficient(int alpha_exp, int beta_exp) const {
    auto it = terms_.find({alpha_exp, beta_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int CoefficientAB::degree() const {
    int d = -1;
    for (const auto& [exps, v] : terms_) d = std::max(d, exps.first + exps.second);
    return d;
}

CoefficientAB CoefficientAB::truncated(int max_degree) const {
    CoefficientAB out;
    for (const auto& [exps, v] : terms_) {
        if (exps.first + exps.second <= max_degree) out.terms_[exps] = v;
    }
    return out;
}

CoefficientAB CoefficientAB::alpha_zero() const {
    CoefficientAB out;
    for (const auto& [exps, v] : terms_) {
        if (exps.first == 0) out.terms_[exps] = v;
    }
    return out;
}

CoefficientAB CoefficientAB::beta_zero() const {
    CoefficientAB out;
    for (const auto& [exps, v] : terms_) {
        if (exps.second == 0) out.terms_[exps] = v;
    }
    return out;
}

void CoefficientAB::add_term(int alpha_exp, int beta_exp, const BigInt& value) {
    auto key = std::make_pair(alpha_exp, beta_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (value != 0) terms_[key] = value;
        return;
    }
    it->second += value;
    if (it->second == 0) terms_.erase(it);
}

CoefficientAB& CoefficientAB::operator+=(const CoefficientAB& o) {
    for (const auto& [exps, v] : o.terms_) add_term(exps.first, exps.second, v);
    return *this;
}

CoefficientAB& CoefficientAB::operator-=(const CoefficientAB& o) {
    for (const auto& [exps, v] : o.terms_) add_term(exps.first, exps.second, -v);
    return *this;
}

CoefficientAB CoefficientAB::operator+(const CoefficientAB& o) const {
    CoefficientAB out = *this;
    out += o;
    return out;
}

CoefficientAB CoefficientAB::operator-(const CoefficientAB& o) const {
    CoefficientAB out = *this;
    out -= o;
    return out;
}

CoefficientAB CoefficientAB::operator*(const CoefficientAB& o) const {
    CoefficientAB out;
    for (const auto& [e1, v1] : terms_) {
        for (const auto& [e2, v2] : o.terms_) {
            out.add_term(e1.first + e2.first, e1.second + e2.second, v1 * v2);
        }
    }
    return out;
}

CoefficientAB CoefficientAB::operator-() const {
    CoefficientAB out;
    for (const auto& [exps, v] : terms_) out.terms_[exps] = -v;
    return out;
}

std::string CoefficientAB::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, v] : terms_) {
        BigInt value = v;
        if (!first) {
            os << (value < 0 ? " - " : " + ");
            if (value < 0) value = -value;
        }
        first = false;
        bool monomial = exps.first > 0 || exps.second > 0;
        if (!monomial || value != 1) os << value;
        if (exps.first > 0) {
            os << 'a';
            if (exps.first > 1) os << '^' << exps.first;
        }
        if (exps.second > 0) {
            os << 'b';
            if (exps.second > 1) os << '^' << exps.second;
        }
    }
    return os.str();
}

}  // namespace hooktab
