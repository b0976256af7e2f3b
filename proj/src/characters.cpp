#include "gelmod/characters.hpp"

#include "gelmod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gelmod {

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

std::vector<IrreducibleLabel> irreducible_labels(const CoxeterDescriptor& g) {
    std::vector<IrreducibleLabel> out;
    switch (g.family()) {
        case Family::A:
            for (const auto& p : partitions_of(g.parameter() + 1))
                out.push_back(ALabel{p});
            break;
        case Family::B:
            for (const auto& bp : bipartitions_of(g.parameter()))
                out.push_back(BLabel{bp});
            break;
        case Family::D:
            for (const auto& bp : bipartitions_of(g.parameter())) {
                const auto& a = bp.alpha;
                const auto& b = bp.beta;
                const bool canonical =
                    a.sum() > b.sum() || (a.sum() == b.sum() && a > b);
                if (canonical) {
                    out.push_back(DLabel{bp, 0});
                } else if (a == b) {
                    out.push_back(DLabel{bp, 1});
                    out.push_back(DLabel{bp, 2});
                } // mirror orientation: skip
            }
            break;
        case Family::Dihedral: {
            const int n = g.parameter();
            out.push_back(DihedralLabel{DihedralLabel::Triv, 0});
            out.push_back(DihedralLabel{DihedralLabel::Sign, 0});
            if (n % 2 == 0) {
                out.push_back(DihedralLabel{DihedralLabel::DetPlus, 0});
                out.push_back(DihedralLabel{DihedralLabel::DetMinus, 0});
            }
            for (int j = 1; 2 * j < n; ++j)
                out.push_back(DihedralLabel{DihedralLabel::TwoDim, j});
            break;
        }
        case Family::H3:
            for (int i = 0; i < 5; ++i)
                for (bool primed : {false, true})
                    out.push_back(H3Label{i, primed});
            break;
        default:
            throw UnsupportedFamily("irreducible_labels: " + family_name(g.family()));
    }
    return out;
}

std::string label_to_string(const IrreducibleLabel& label) {
    struct V {
        std::string operator()(const ALabel& l) const { return l.alpha.to_string(); }
        std::string operator()(const BLabel& l) const { return l.pair.to_string(); }
        std::string operator()(const DLabel& l) const {
            std::string s = l.pair.to_string();
            if (l.split == 1) s += "'";
            if (l.split == 2) s += "''";
            return s;
        }
        std::string operator()(const DihedralLabel& l) const {
            switch (l.kind) {
                case DihedralLabel::Triv: return "triv";
                case DihedralLabel::Sign: return "sign";
                case DihedralLabel::DetPlus: return "det+";
                case DihedralLabel::DetMinus: return "det-";
                case DihedralLabel::TwoDim: return "W" + std::to_string(l.j);
            }
            return "?";
        }
        std::string operator()(const H3Label& l) const {
            static const char* base[] = {"U1", "V4", "W5", "Y3", "Z3"};
            std::string s = base[l.a5_index];
            if (l.primed) s += "'";
            return s;
        }
    };
    return std::visit(V{}, label);
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama
// ---------------------------------------------------------------------------

namespace {

Int mn_symmetric(const Partition& shape, std::span<const int> cycles, size_t idx) {
    if (idx == cycles.size()) return 1; // shape is empty here by size bookkeeping
    Int total = 0;
    for (const auto& [sub, leg] : remove_rim_hooks(shape, cycles[idx])) {
        const Int term = mn_symmetric(sub, cycles, idx + 1);
        total += (leg % 2) ? -term : term;
    }
    return total;
}

// Wreath recursion: strip positive cycles (both components weight +),
// then negative cycles (the second component picks up a minus sign).
Int mn_wreath(const Partition& a, const Partition& b, std::span<const int> pos,
              std::span<const int> neg, size_t pi, size_t ni) {
    if (pi < pos.size()) {
        const int l = pos[pi];
        Int total = 0;
        for (const auto& [sub, leg] : remove_rim_hooks(a, l)) {
            const Int term = mn_wreath(sub, b, pos, neg, pi + 1, ni);
            total += (leg % 2) ? -term : term;
        }
        for (const auto& [sub, leg] : remove_rim_hooks(b, l)) {
            const Int term = mn_wreath(a, sub, pos, neg, pi + 1, ni);
            total += (leg % 2) ? -term : term;
        }
        return total;
    }
    if (ni < neg.size()) {
        const int l = neg[ni];
        Int total = 0;
        for (const auto& [sub, leg] : remove_rim_hooks(a, l)) {
            const Int term = mn_wreath(sub, b, pos, neg, pi, ni + 1);
            total += (leg % 2) ? -term : term;
        }
        for (const auto& [sub, leg] : remove_rim_hooks(b, l)) {
            const Int term = mn_wreath(a, sub, pos, neg, pi, ni + 1);
            total -= (leg % 2) ? -term : term;
        }
        return total;
    }
    return 1;
}

} // namespace

Int character_S(const Partition& alpha, const Partition& cycleType) {
    if (alpha.sum() != cycleType.sum())
        throw SizeMismatch("character_S: |alpha| = " + std::to_string(alpha.sum()) +
                           " but cycle type has weight " +
                           std::to_string(cycleType.sum()));
    return mn_symmetric(alpha, cycleType.parts(), 0);
}

Int character_B(const BiPartition& label, const Partition& pos, const Partition& neg) {
    if (label.total() != pos.sum() + neg.sum())
        throw SizeMismatch("character_B: label weight " + std::to_string(label.total()) +
                           " but class weight " +
                           std::to_string(pos.sum() + neg.sum()));
    return mn_wreath(label.alpha, label.beta, pos.parts(), neg.parts(), 0, 0);
}

Int character_D_restricted(const BiPartition& label, const SignedCycleKey& cls) {
    if (cls.neg.count() % 2 != 0)
        throw OddNegativeClass("class " + cls.pos.to_string() + "," +
                               cls.neg.to_string() + " is not in the index-2 subgroup");
    // alpha != beta: the restriction stays irreducible and keeps its values;
    // alpha == beta: this is the sum of the two split constituents.
    return character_B(label, cls.pos, cls.neg);
}

Scalar character_dihedral(int n, const DihedralLabel& label, const DihedralKey& cls) {
    const bool even = n % 2 == 0;
    switch (label.kind) {
        case DihedralLabel::Triv:
            return Scalar(1);
        case DihedralLabel::Sign:
            return cls.reflection ? Scalar(-1) : Scalar(1);
        case DihedralLabel::DetPlus:
            if (!even) throw InvalidLabel("det+ needs even n");
            return Scalar(cls.k % 2 == 0 ? 1 : -1);
        case DihedralLabel::DetMinus:
            if (!even) throw InvalidLabel("det- needs even n");
            if (cls.reflection) return Scalar(cls.k % 2 == 0 ? -1 : 1);
            return Scalar(cls.k % 2 == 0 ? 1 : -1);
        case DihedralLabel::TwoDim: {
            if (label.j < 1 || 2 * label.j >= n)
                throw InvalidLabel("two-dimensional index out of range");
            if (cls.reflection) return Scalar();
            return Scalar::root_of_unity(n, static_cast<long>(label.j) * cls.k) +
                   Scalar::root_of_unity(n, -static_cast<long>(label.j) * cls.k);
        }
    }
    throw InvalidLabel("unknown dihedral label");
}

Scalar character_H3(const H3Label& label, const H3Key& cls) {
    if (label.a5_index < 0 || label.a5_index > 4 || cls.a5_class < 0 || cls.a5_class > 4)
        throw InvalidLabel("H3 label/class index out of range");
    // rows: U1, V4, W5, Y3, Z3; columns: 1A, 2A, 3A, 5A, 5B
    static const std::vector<std::vector<Scalar>> table = [] {
        const Scalar golden(Quad{Rational(1, 2), Rational(1, 2)});
        const Scalar golden_conj(Quad{Rational(1, 2), Rational(-1, 2)});
        return std::vector<std::vector<Scalar>>{
            {Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1)},
            {Scalar(4), Scalar(0), Scalar(1), Scalar(-1), Scalar(-1)},
            {Scalar(5), Scalar(1), Scalar(-1), Scalar(0), Scalar(0)},
            {Scalar(3), Scalar(-1), Scalar(0), golden, golden_conj},
            {Scalar(3), Scalar(-1), Scalar(0), golden_conj, golden},
        };
    }();
    Scalar v = table[static_cast<size_t>(label.a5_index)][static_cast<size_t>(cls.a5_class)];
    if (label.primed && cls.eps < 0) v = -v;
    return v;
}

Scalar character_value(const CoxeterDescriptor& g, const IrreducibleLabel& label,
                       const ClassDatum& cls) {
    switch (g.family()) {
        case Family::A: {
            const auto* l = std::get_if<ALabel>(&label);
            const auto* k = std::get_if<CycleTypeKey>(&cls.key);
            if (!l || !k) throw InvalidLabel("label/class do not match family A");
            return Scalar(character_S(l->alpha, k->mu));
        }
        case Family::B: {
            const auto* l = std::get_if<BLabel>(&label);
            const auto* k = std::get_if<SignedCycleKey>(&cls.key);
            if (!l || !k) throw InvalidLabel("label/class do not match family B");
            return Scalar(character_B(l->pair, k->pos, k->neg));
        }
        case Family::D: {
            const auto* l = std::get_if<DLabel>(&label);
            const auto* k = std::get_if<SignedCycleKey>(&cls.key);
            if (!l || !k) throw InvalidLabel("label/class do not match family D");
            return Scalar(character_D_restricted(l->pair, *k));
        }
        case Family::Dihedral: {
            const auto* l = std::get_if<DihedralLabel>(&label);
            const auto* k = std::get_if<DihedralKey>(&cls.key);
            if (!l || !k) throw InvalidLabel("label/class do not match dihedral");
            return character_dihedral(g.parameter(), *l, *k);
        }
        case Family::H3: {
            const auto* l = std::get_if<H3Label>(&label);
            const auto* k = std::get_if<H3Key>(&cls.key);
            if (!l || !k) throw InvalidLabel("label/class do not match H3");
            return character_H3(*l, *k);
        }
        default:
            throw UnsupportedFamily("character_value: " + family_name(g.family()));
    }
}

Int label_dimension(const CoxeterDescriptor& g, const IrreducibleLabel& label) {
    switch (g.family()) {
        case Family::A:
            return standard_tableaux_count(std::get<ALabel>(label).alpha);
        case Family::B: {
            const auto& pair = std::get<BLabel>(label).pair;
            return binomial(g.parameter(), pair.alpha.sum()) *
                   standard_tableaux_count(pair.alpha) *
                   standard_tableaux_count(pair.beta);
        }
        case Family::D: {
            const auto& l = std::get<DLabel>(label);
            Int full = binomial(g.parameter(), l.pair.alpha.sum()) *
                       standard_tableaux_count(l.pair.alpha) *
                       standard_tableaux_count(l.pair.beta);
            return l.split ? full / 2 : full;
        }
        case Family::Dihedral:
            return std::get<DihedralLabel>(label).kind == DihedralLabel::TwoDim ? 2 : 1;
        case Family::H3: {
            static const int dims[] = {1, 4, 5, 3, 3};
            return dims[std::get<H3Label>(label).a5_index];
        }
        default:
            throw UnsupportedFamily("label_dimension: " + family_name(g.family()));
    }
}

OrthogonalityReport orthogonality_check(const CoxeterDescriptor& g) {
    OrthogonalityReport report;
    const auto all = irreducible_labels(g);
    const auto classes = conjugacy_classes(g);
    const Int order = g.order();

    // For type D the stored table is not the plain character table: the two
    // halves of a split pair share one summed class function, and the classes
    // on which they differ (all cycles positive and even) are kept merged.
    // Keep one row per pair -- its norm is 2|G| -- and skip columns indexed by
    // a merged class, where the stored values do not determine the true ones.
    std::vector<IrreducibleLabel> labels;
    std::vector<bool> pairRow;
    for (const auto& l : all) {
        if (const auto* dl = std::get_if<DLabel>(&l)) {
            if (dl->split == 2) continue;
            labels.push_back(l);
            pairRow.push_back(dl->split == 1);
        } else {
            labels.push_back(l);
            pairRow.push_back(false);
        }
    }
    const auto classMerged = [&](size_t c) {
        if (g.family() != Family::D) return false;
        const auto* k = std::get_if<SignedCycleKey>(&classes[c].key);
        if (!k || !k->neg.empty()) return false;
        for (int part : k->pos.parts())
            if (part % 2 != 0) return false;
        return true;
    };

    // cache the full value table once
    std::vector<std::vector<Scalar>> chi(labels.size(),
                                         std::vector<Scalar>(classes.size()));
    for (size_t u = 0; u < labels.size(); ++u)
        for (size_t c = 0; c < classes.size(); ++c)
            chi[u][c] = character_value(g, labels[u], classes[c]);

    for (size_t u = 0; u < labels.size(); ++u) {
        for (size_t w = u; w < labels.size(); ++w) {
            Scalar sum;
            for (size_t c = 0; c < classes.size(); ++c)
                sum += Scalar(classes[c].size) * chi[u][c] *
                       chi[w][c].complex_conjugate();
            const Scalar expected =
                u == w ? Scalar(order) * Scalar(Int(pairRow[u] ? 2 : 1))
                       : Scalar();
            if (!(sum == expected)) {
                report.pass = false;
                report.failures.push_back(
                    "<" + label_to_string(labels[u]) + ", " + label_to_string(labels[w]) +
                    "> = " + sum.to_string() + ", expected " + expected.to_string());
            }
        }
    }
    // column orthogonality: sum_U chi_U(c) * conj(chi_U(c')) = delta |G|/|c|.
    // On unmerged classes a pair's halves agree, each contributing a quarter
    // of the squared stored value, so the pair rows enter with weight 1/2.
    for (size_t c = 0; c < classes.size(); ++c) {
        if (classMerged(c)) continue;
        for (size_t d = c; d < classes.size(); ++d) {
            if (classMerged(d)) continue;
            Scalar sum;
            for (size_t u = 0; u < labels.size(); ++u) {
                Scalar term = chi[u][c] * chi[u][d].complex_conjugate();
                if (pairRow[u]) term = term * Scalar(Rational(1, 2));
                sum += term;
            }
            const Scalar expected =
                c == d ? Scalar(Rational(order, classes[c].size)) : Scalar();
            if (!(sum == expected)) {
                report.pass = false;
                report.failures.push_back("columns " + classes[c].label + ", " +
                                          classes[d].label + ": " + sum.to_string() +
                                          ", expected " + expected.to_string());
            }
        }
    }
    return report;
}

} // namespace gelmod
