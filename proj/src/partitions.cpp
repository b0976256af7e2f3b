#include "gelmod/partitions.hpp"

#include "gelmod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gelmod {

Partition::Partition(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw Error("partition parts must be nonnegative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
    for (int p : parts_) sum_ += p;
}

int Partition::part(int i) const {
    if (i < 1 || i > count()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= (parts_.empty() ? 0 : parts_[0]); ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(std::string_view s) {
    // strip whitespace
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("partition must look like [3,1]: got '" + std::string(s) + "'");
    std::vector<int> parts;
    std::string body = t.substr(1, t.size() - 2);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                parts.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad partition part '" + tok + "'");
            }
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid partition: ") + e.what());
    }
}

namespace {

void gen_partitions(int n, int maxPart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, maxPart); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw ParameterOutOfRange("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<int> lambda_values(const Partition& alpha, int padTo) {
    if (padTo < alpha.count())
        throw PadTooSmall("padTo " + std::to_string(padTo) + " < parts " +
                          std::to_string(alpha.count()));
    std::vector<int> lam(static_cast<size_t>(padTo));
    for (int i = 1; i <= padTo; ++i)
        lam[static_cast<size_t>(i - 1)] = alpha.part(i) - i + padTo;
    return lam;
}

std::string BiPartition::to_string() const {
    return "(" + alpha.to_string() + "," + beta.to_string() + ")";
}

std::vector<BiPartition> bipartitions_of(int n) {
    if (n < 0) throw ParameterOutOfRange("bipartitions_of: n must be nonnegative");
    std::vector<BiPartition> out;
    for (int a = n; a >= 0; --a)
        for (const auto& alpha : partitions_of(a))
            for (const auto& beta : partitions_of(n - a))
                out.push_back(BiPartition{alpha, beta});
    return out;
}

std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int length) {
    std::vector<std::pair<Partition, int>> out;
    if (length <= 0) throw Error("rim hook length must be positive");
    if (length > p.sum()) return out;
    const int m = p.count();
    // beta numbers: strictly decreasing, beta_i = p_i - i + m (i = 1..m)
    std::vector<int> betas = lambda_values(p, m);
    for (int i = 0; i < m; ++i) {
        const int target = betas[static_cast<size_t>(i)] - length;
        if (target < 0) continue;
        if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
        // leg length: betas strictly between target and betas[i]
        int leg = 0;
        for (int b : betas)
            if (b > target && b < betas[static_cast<size_t>(i)]) ++leg;
        std::vector<int> nb = betas;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts(static_cast<size_t>(m));
        for (int j = 1; j <= m; ++j)
            parts[static_cast<size_t>(j - 1)] = nb[static_cast<size_t>(j - 1)] + j - m;
        out.emplace_back(Partition(std::move(parts)), leg);
    }
    return out;
}

Int standard_tableaux_count(const Partition& p) {
    Int num = factorial(p.sum());
    const Partition conj = p.conjugate();
    Int den = 1;
    for (int i = 1; i <= p.count(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            den *= (p.part(i) - j) + (conj.part(j) - i) + 1;
    return num / den; // exact: hook length formula
}

} // namespace gelmod
