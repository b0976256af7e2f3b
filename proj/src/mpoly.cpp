#include "gelmod/mpoly.hpp"

#include "gelmod/errors.hpp"

#include <numeric>
#include <sstream>

namespace gelmod {

MPoly MPoly::constant(int nvars, const Scalar& c) {
    MPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw DimensionMismatch("variable index out of range");
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    return monomial(nvars, std::move(e), Scalar(1));
}

MPoly MPoly::monomial(int nvars, std::vector<int> exponents, const Scalar& c) {
    if (static_cast<int>(exponents.size()) != nvars)
        throw DimensionMismatch("exponent vector length mismatch");
    MPoly p(nvars);
    p.add_term(exponents, c);
    return p;
}

void MPoly::add_term(const std::vector<int>& exponents, const Scalar& c) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw DimensionMismatch("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> MPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

bool MPoly::is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        const int s = std::accumulate(e.begin(), e.end(), 0);
        if (!d) d = s;
        else if (*d != s) return false;
    }
    return true;
}

Scalar MPoly::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Scalar(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial variable counts differ");
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial variable counts differ");
    MPoly out(nvars_);
    std::vector<int> e(static_cast<size_t>(nvars_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool MPoly::operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MPoly MPoly::scaled(const Scalar& c) const {
    MPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

MPoly MPoly::substituted(std::span<const MPoly> images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw DimensionMismatch("substitution needs one image per variable");
    for (const MPoly& im : images)
        if (im.nvars() != nvars_)
            throw DimensionMismatch("substitution image variable count differs");
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(nvars_, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
                term *= images[static_cast<size_t>(i)];
        out += term;
    }
    return out;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // iterate descending so leading terms come first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        std::string vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << vars;
        } else if (cs == "-1" && it == terms_.rbegin()) {
            os << "-" << vars;
        } else {
            os << cs << "*" << vars;
        }
    }
    return os.str();
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    if (nvars <= 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    // descending lex: leftmost exponent as large as possible first
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace gelmod
