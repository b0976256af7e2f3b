#include "gelmod/weyl.hpp"

#include "gelmod/errors.hpp"

#include <numeric>
#include <sstream>

namespace gelmod {

WeylOperator WeylOperator::monomial_op(int nvars, std::vector<int> xExp,
                                       std::vector<int> dExp, const Scalar& c) {
    WeylOperator op(nvars);
    op.add_term(xExp, dExp, c);
    return op;
}

void WeylOperator::add_term(const std::vector<int>& xExp, const std::vector<int>& dExp,
                            const Scalar& c) {
    if (static_cast<int>(xExp.size()) != nvars_ || static_cast<int>(dExp.size()) != nvars_)
        throw DimensionMismatch("operator exponent length mismatch");
    if (c.is_zero()) return;
    auto key = std::make_pair(xExp, dExp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> WeylOperator::degree() const {
    if (terms_.empty()) return std::nullopt;
    std::optional<int> best;
    for (const auto& [key, c] : terms_) {
        const int d = std::accumulate(key.first.begin(), key.first.end(), 0) -
                      std::accumulate(key.second.begin(), key.second.end(), 0);
        if (!best || d > *best) best = d;
    }
    return best;
}

WeylOperator WeylOperator::operator+(const WeylOperator& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("operator variable counts differ");
    WeylOperator out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, c);
    return out;
}

WeylOperator WeylOperator::operator-() const {
    WeylOperator out(nvars_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

WeylOperator WeylOperator::operator-(const WeylOperator& o) const { return *this + (-o); }

WeylOperator WeylOperator::scaled(const Scalar& c) const {
    WeylOperator out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

bool WeylOperator::operator==(const WeylOperator& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string WeylOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string cs = c.to_string();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        std::string vars;
        auto emit = [&vars](const char* stem, const std::vector<int>& exps) {
            for (size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += stem + std::to_string(i);
                if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
            }
        };
        emit("x", key.first);
        emit("d", key.second);
        if (vars.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << vars;
        } else if (cs == "-1" && first) {
            os << "-" << vars;
        } else {
            os << cs << "*" << vars;
        }
        first = false;
    }
    return os.str();
}

WeylOperator euler_operator(int nvars) {
    WeylOperator op(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    for (int i = 0; i < nvars; ++i) {
        e[static_cast<size_t>(i)] = 1;
        op.add_term(e, e, Scalar(1));
        e[static_cast<size_t>(i)] = 0;
    }
    return op;
}

MPoly weyl_apply(const WeylOperator& D, const MPoly& P) {
    if (D.nvars() != P.nvars())
        throw DimensionMismatch("operator and polynomial variable counts differ");
    const int n = P.nvars();
    MPoly out(n);
    std::vector<int> e(static_cast<size_t>(n));
    for (const auto& [key, c] : D.terms()) {
        const auto& [xExp, dExp] = key;
        for (const auto& [mono, pc] : P.terms()) {
            Int falling = 1;
            bool vanished = false;
            for (size_t i = 0; i < e.size(); ++i) {
                if (dExp[i] > mono[i]) {
                    vanished = true;
                    break;
                }
                for (int k = 0; k < dExp[i]; ++k) falling *= mono[i] - k;
                e[i] = mono[i] - dExp[i] + xExp[i];
            }
            if (vanished) continue;
            out.add_term(e, c * pc * Scalar(falling));
        }
    }
    return out;
}

MPoly matrix_act(const Matrix& g, const MPoly& P) {
    if (g.size() != P.nvars())
        throw DimensionMismatch("matrix size and variable count differ");
    const int n = P.nvars();
    std::vector<MPoly> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        MPoly im(n);
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(j)] = 1;
            im.add_term(e, g.at(j, i));
        }
        images.push_back(std::move(im));
    }
    return P.substituted(images);
}

WeylOperator weyl_act_group(const Matrix& g, const Matrix& gInverse,
                            const WeylOperator& D) {
    if (g.size() != D.nvars() || gInverse.size() != D.nvars())
        throw DimensionMismatch("matrix size and operator variable count differ");
    const int n = D.nvars();
    // linear images once: x_i -> column i of g, d_k -> row k of gInverse
    std::vector<MPoly> ximg(static_cast<size_t>(n), MPoly(n));
    std::vector<MPoly> dimg(static_cast<size_t>(n), MPoly(n));
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            e[static_cast<size_t>(j)] = 1;
            ximg[static_cast<size_t>(i)].add_term(e, g.at(j, i));
            dimg[static_cast<size_t>(i)].add_term(e, gInverse.at(i, j));
            e[static_cast<size_t>(j)] = 0;
        }
    WeylOperator out(n);
    for (const auto& [key, c] : D.terms()) {
        MPoly xpart = MPoly::constant(n, Scalar(1));
        MPoly dpart = MPoly::constant(n, Scalar(1));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < key.first[static_cast<size_t>(i)]; ++k)
                xpart *= ximg[static_cast<size_t>(i)];
            for (int k = 0; k < key.second[static_cast<size_t>(i)]; ++k)
                dpart *= dimg[static_cast<size_t>(i)];
        }
        for (const auto& [xm, xc] : xpart.terms())
            for (const auto& [dm, dc] : dpart.terms())
                out.add_term(xm, dm, c * xc * dc);
    }
    return out;
}

WeylOperator weyl_act_group(const Matrix& g, const WeylOperator& D) {
    return weyl_act_group(g, g.inverse(), D);
}

} // namespace gelmod
