#include "gelmod/cli.hpp"

#include "gelmod/errors.hpp"
#include "gelmod/weylmodel.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace gelmod::cli {

using Json = nlohmann::ordered_json;

namespace {

// --- group expression parsing ----------------------------------------------

int read_digits(const std::string& s, size_t& i) {
    const size_t start = i;
    long long n = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        n = n * 10 + (s[i] - '0');
        if (n > 1000000) throw ParameterOutOfRange("group parameter too large");
        ++i;
    }
    if (i == start)
        throw ParseError("expected a number at position " + std::to_string(start));
    return static_cast<int>(n);
}

GroupFactor read_factor(const std::string& s, size_t& i) {
    const char c = s[i];
    if (c == 'A' || c == 'B' || c == 'D') {
        ++i;
        const int n = read_digits(s, i);
        const Family fam = c == 'A' ? Family::A : c == 'B' ? Family::B : Family::D;
        descriptor(fam, n); // range check
        return GroupFactor{fam, n};
    }
    if (c == 'I') {
        if (i + 2 >= s.size() || s[i + 1] != '2' || s[i + 2] != '(')
            throw ParseError("expected I2(n) at position " + std::to_string(i));
        i += 3;
        const int n = read_digits(s, i);
        if (i >= s.size() || s[i] != ')')
            throw ParseError("expected ')' at position " + std::to_string(i));
        ++i;
        descriptor(Family::Dihedral, n);
        return GroupFactor{Family::Dihedral, n};
    }
    if (c == 'H' || c == 'E' || c == 'F') {
        if (i + 1 >= s.size())
            throw UnknownType("incomplete type '" + std::string(1, c) + "' at position " +
                              std::to_string(i));
        const char d = s[i + 1];
        i += 2;
        if (c == 'H' && d == '3') return GroupFactor{Family::H3, 3};
        if (c == 'H' && d == '4') return GroupFactor{Family::H4, 4};
        if (c == 'E' && d == '6') return GroupFactor{Family::E6, 6};
        if (c == 'E' && d == '7') return GroupFactor{Family::E7, 7};
        if (c == 'E' && d == '8') return GroupFactor{Family::E8, 8};
        if (c == 'F' && d == '4') return GroupFactor{Family::F4, 4};
        throw UnknownType("unknown type '" + std::string{c, d} + "' at position " +
                          std::to_string(i - 2));
    }
    throw UnknownType("unknown family '" + std::string(1, c) + "' at position " +
                      std::to_string(i));
}

} // namespace

ProductDescriptor parse_group(const std::string& text) {
    const size_t a = text.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty group expression");
    const size_t b = text.find_last_not_of(" \t");
    const std::string s = text.substr(a, b - a + 1);
    ProductDescriptor pd;
    size_t i = 0;
    while (true) {
        if (i >= s.size())
            throw ParseError("missing factor at position " + std::to_string(i));
        pd.factors.push_back(read_factor(s, i));
        if (i == s.size()) break;
        if (s[i] != 'x')
            throw ParseError("expected 'x' at position " + std::to_string(i) + ", found '" +
                             std::string(1, s[i]) + "'");
        ++i;
    }
    return pd;
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw ParseError("unknown format '" + s + "' (expected text, json or csv)");
}

namespace {

// --- shared rendering helpers ----------------------------------------------

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

std::vector<long long> coeff_list(const IntPolynomial& f) {
    std::vector<long long> out;
    if (const auto d = f.degree())
        for (int k = 0; k <= *d; ++k) out.push_back(to_ll(f.coeff(k)));
    return out;
}

std::string coeff_field(const IntPolynomial& f) {
    std::string out;
    for (const long long c : coeff_list(f)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(c);
    }
    return out.empty() ? "0" : out;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json witnesses_json(const Verdict& v) {
    Json arr = Json::array();
    for (const Witness& w : v.witnesses) {
        Json jw;
        jw["factor"] = w.factor;
        jw["label"] = w.label;
        jw["firstMultiplicity"] = to_ll(w.firstMultiplicity);
        arr.push_back(std::move(jw));
    }
    return arr;
}

void require_computable(const ProductDescriptor& pd, const std::string& verb) {
    for (const GroupFactor& f : pd.factors)
        if (!f.computable())
            throw UnsupportedFamily(verb + " needs computable factors; '" + f.name() +
                                    "' is classification-only");
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

RunResult error_result(const std::string& type, const std::string& message,
                       const Options& opt) {
    RunResult r;
    r.exitCode = 2;
    if (opt.format == Format::Json) {
        Json j;
        j["error"]["type"] = type;
        j["error"]["message"] = message;
        r.output = dump(j);
    } else {
        r.output = "error: " + message + "\n";
    }
    return r;
}

std::string classify_error(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const UnknownType*>(&e)) return "UnknownType";
    if (dynamic_cast<const UnsupportedFamily*>(&e)) return "UnsupportedFamily";
    if (dynamic_cast<const ParameterOutOfRange*>(&e)) return "ParameterOutOfRange";
    if (dynamic_cast<const OrderExceedsCap*>(&e)) return "OrderExceedsCap";
    if (dynamic_cast<const NonIntegralResult*>(&e)) return "NonIntegralResult";
    if (dynamic_cast<const MissingSplitTag*>(&e)) return "MissingSplitTag";
    return "Error";
}

struct FactorReports {
    std::string name;
    std::vector<FakeDegreeReport> reports;
};

std::vector<FactorReports> all_reports(const ProductDescriptor& pd) {
    std::vector<FactorReports> out;
    for (const GroupFactor& f : pd.factors)
        out.push_back({f.name(), fake_degree_reports(f.desc())});
    return out;
}

} // namespace

// --- fake-degrees ------------------------------------------------------------

RunResult run_fake_degrees(const std::string& groupExpr, const Options& opt) {
    const ProductDescriptor pd = parse_group(groupExpr);
    require_computable(pd, "fake-degrees");
    const std::vector<FactorReports> factors = all_reports(pd);
    const Verdict v = gelfand_verdict(pd);
    RunResult r;
    if (opt.format == Format::Json) {
        Json j;
        j["group"] = pd.name();
        j["method"] = v.method;
        Json labels = Json::array();
        for (const FactorReports& fr : factors)
            for (const FakeDegreeReport& rep : fr.reports) {
                Json e;
                e["factor"] = fr.name;
                e["label"] = rep.label;
                e["fakeDegree"] = coeff_list(rep.fakeDegree);
                e["p"] = rep.p;
                e["firstMultiplicity"] = to_ll(rep.firstMultiplicity);
                e["dim"] = to_ll(rep.dim);
                labels.push_back(std::move(e));
            }
        j["labels"] = std::move(labels);
        j["isGelfand"] = v.isGelfand;
        j["witnesses"] = witnesses_json(v);
        r.output = dump(j);
    } else if (opt.format == Format::Csv) {
        std::ostringstream os;
        os << "group,factor,label,p,firstMultiplicity,dim,fakeDegree\n";
        for (const FactorReports& fr : factors)
            for (const FakeDegreeReport& rep : fr.reports)
                os << pd.name() << ',' << fr.name << ',' << csv_quote(rep.label) << ','
                   << rep.p << ',' << rep.firstMultiplicity << ',' << rep.dim << ','
                   << coeff_field(rep.fakeDegree) << '\n';
        r.output = os.str();
    } else {
        std::ostringstream os;
        os << "group " << pd.name() << "\n";
        os << "method " << v.method << "\n";
        for (const FactorReports& fr : factors) {
            if (factors.size() > 1) os << "factor " << fr.name << "\n";
            size_t width = 0;
            for (const FakeDegreeReport& rep : fr.reports)
                width = std::max(width, rep.label.size());
            for (const FakeDegreeReport& rep : fr.reports) {
                os << "  " << rep.label << std::string(width - rep.label.size(), ' ')
                   << "  p=" << rep.p << "  mult=" << rep.firstMultiplicity
                   << "  dim=" << rep.dim << "  f = " << rep.fakeDegree.to_string() << "\n";
            }
        }
        os << "isGelfand " << bool_word(v.isGelfand) << "\n";
        for (const Witness& w : v.witnesses)
            os << "witness " << w.factor
               << (w.label.empty() ? std::string(" (classification rule)")
                                   : " " + w.label + " mult=" + to_string(w.firstMultiplicity))
               << "\n";
        r.output = os.str();
    }
    return r;
}

// --- verdict -----------------------------------------------------------------

RunResult run_verdict(const std::string& groupExpr, const Options& opt) {
    const ProductDescriptor pd = parse_group(groupExpr);
    const Verdict v = gelfand_verdict(pd);
    RunResult r;
    if (opt.format == Format::Json) {
        Json j;
        j["group"] = pd.name();
        j["method"] = v.method;
        j["labels"] = Json::array();
        j["isGelfand"] = v.isGelfand;
        j["witnesses"] = witnesses_json(v);
        r.output = dump(j);
    } else if (opt.format == Format::Csv) {
        std::ostringstream os;
        os << "group,method,isGelfand,witnessFactor,witnessLabel,witnessMultiplicity\n";
        if (v.witnesses.empty())
            os << pd.name() << ',' << v.method << ',' << bool_word(v.isGelfand) << ",,,\n";
        for (const Witness& w : v.witnesses)
            os << pd.name() << ',' << v.method << ',' << bool_word(v.isGelfand) << ','
               << w.factor << ',' << csv_quote(w.label) << ',' << w.firstMultiplicity
               << '\n';
        r.output = os.str();
    } else {
        std::ostringstream os;
        os << "group " << pd.name() << "\n";
        os << "method " << v.method << "\n";
        os << "isGelfand " << bool_word(v.isGelfand) << "\n";
        for (const Witness& w : v.witnesses)
            os << "witness " << w.factor
               << (w.label.empty() ? std::string(" (classification rule)")
                                   : " " + w.label + " mult=" + to_string(w.firstMultiplicity))
               << "\n";
        r.output = os.str();
    }
    return r; // a negative verdict is still a successful run
}

// --- model -------------------------------------------------------------------

RunResult run_model(const std::string& groupExpr, const Options& opt) {
    const ProductDescriptor pd = parse_group(groupExpr);
    require_computable(pd, "model");
    std::map<int, Int> dims = model_graded_dimensions(pd.factors[0].desc());
    for (size_t k = 1; k < pd.factors.size(); ++k)
        dims = convolve_graded(dims, model_graded_dimensions(pd.factors[k].desc()));
    if (opt.maxDegree)
        std::erase_if(dims, [&](const auto& kv) { return kv.first > *opt.maxDegree; });
    Int total = 0;
    for (const auto& [deg, d] : dims) total += d;
    RunResult r;
    if (opt.format == Format::Json) {
        Json j;
        j["group"] = pd.name();
        Json g;
        for (const auto& [deg, d] : dims) g[std::to_string(deg)] = to_ll(d);
        j["gradedDimension"] = std::move(g);
        j["totalDimension"] = to_ll(total);
        r.output = dump(j);
    } else if (opt.format == Format::Csv) {
        std::ostringstream os;
        os << "group,degree,dimension\n";
        for (const auto& [deg, d] : dims)
            os << pd.name() << ',' << deg << ',' << d << '\n';
        r.output = os.str();
    } else {
        std::ostringstream os;
        os << "group " << pd.name() << "\n";
        for (const auto& [deg, d] : dims) os << "degree " << deg << ": " << d << "\n";
        os << "total " << total << "\n";
        r.output = os.str();
    }
    return r;
}

// --- oracle ------------------------------------------------------------------

namespace {

struct OracleFactor {
    std::string name;
    int compared = 0;
    std::vector<std::string> mismatches; // rendered lines
    bool poincare = false;
};

OracleFactor oracle_factor(const CoxeterDescriptor& g) {
    OracleFactor of;
    of.name = g.name();
    for (const IrreducibleLabel& label : irreducible_labels(g)) {
        IntPolynomial closed = fake_degree_closed(g, label);
        if (const DLabel* dl = std::get_if<DLabel>(&label); dl && dl->split != 0) {
            // class data sees the two split halves together
            closed = fake_degree_D(dl->pair, 1) + fake_degree_D(dl->pair, 2);
        }
        const IntPolynomial series = fake_degree_molien(g, label);
        ++of.compared;
        if (!(closed == series))
            of.mismatches.push_back(label_to_string(label) + ": closed " +
                                    closed.to_string() + ", series " + series.to_string());
    }
    of.poincare = poincare_check(g).pass;
    return of;
}

} // namespace

RunResult run_oracle(const std::string& groupExpr, const Options& opt) {
    const ProductDescriptor pd = parse_group(groupExpr);
    require_computable(pd, "oracle");
    std::vector<OracleFactor> factors;
    for (const GroupFactor& f : pd.factors) factors.push_back(oracle_factor(f.desc()));
    const bool pass = std::all_of(factors.begin(), factors.end(), [](const OracleFactor& f) {
        return f.mismatches.empty() && f.poincare;
    });
    RunResult r;
    r.exitCode = pass ? 0 : 1;
    if (opt.format == Format::Json) {
        Json j;
        j["group"] = pd.name();
        Json arr = Json::array();
        for (const OracleFactor& f : factors) {
            Json e;
            e["factor"] = f.name;
            e["labelsCompared"] = f.compared;
            e["allEqual"] = f.mismatches.empty();
            e["poincare"] = f.poincare;
            e["failures"] = f.mismatches;
            arr.push_back(std::move(e));
        }
        j["factors"] = std::move(arr);
        j["pass"] = pass;
        r.output = dump(j);
    } else if (opt.format == Format::Csv) {
        std::ostringstream os;
        os << "group,factor,labelsCompared,allEqual,poincare\n";
        for (const OracleFactor& f : factors)
            os << pd.name() << ',' << f.name << ',' << f.compared << ','
               << bool_word(f.mismatches.empty()) << ',' << bool_word(f.poincare) << '\n';
        r.output = os.str();
    } else {
        std::ostringstream os;
        os << "group " << pd.name() << "\n";
        for (const OracleFactor& f : factors) {
            os << "factor " << f.name << ": " << f.compared << " labels compared, ";
            if (f.mismatches.empty())
                os << "all equal";
            else
                os << f.mismatches.size() << " mismatch"
                   << (f.mismatches.size() == 1 ? "" : "es");
            os << "; poincare " << (f.poincare ? "pass" : "fail") << "\n";
            for (const std::string& m : f.mismatches) os << "  mismatch " << m << "\n";
        }
        os << (pass ? "pass" : "fail") << "\n";
        r.output = os.str();
    }
    return r;
}

// --- dihedral-model ------------------------------------------------------------

RunResult run_dihedral_model(const std::string& groupExpr, const Options& opt) {
    const ProductDescriptor pd = parse_group(groupExpr);
    if (pd.factors.size() != 1 || pd.factors[0].family != Family::Dihedral)
        throw UnsupportedFamily("dihedral-model needs a single I2(n) factor");
    const int n = pd.factors[0].parameter;
    const DihedralModel dm = dihedral_model_basis(n);
    // the kernel comparison is only claimed (and only run) for small n
    std::optional<bool> matches;
    if (n <= 6) matches = dihedral_model_matches_kernel(n);
    const bool pass = dm.annihilationCertified && matches.value_or(true);
    const std::vector<std::string> names = {"z", "zb"};
    RunResult r;
    r.exitCode = pass ? 0 : 1;
    if (opt.format == Format::Json) {
        Json j;
        j["group"] = pd.name();
        j["dimension"] = to_ll(dm.dimension);
        Json basis;
        for (const auto& [deg, polys] : dm.basis) {
            Json arr = Json::array();
            for (const MPoly& p : polys) arr.push_back(p.to_string(names));
            basis[std::to_string(deg)] = std::move(arr);
        }
        j["basis"] = std::move(basis);
        Json ann = Json::array();
        for (const WeylOperator& op : dm.annihilators) ann.push_back(op.to_string());
        j["annihilators"] = std::move(ann);
        j["annihilationCertified"] = dm.annihilationCertified;
        if (matches) j["matchesKernel"] = *matches;
        r.output = dump(j);
    } else if (opt.format == Format::Csv) {
        std::ostringstream os;
        os << "group,kind,degree,value\n";
        for (const auto& [deg, polys] : dm.basis)
            for (const MPoly& p : polys)
                os << pd.name() << ",basis," << deg << ',' << csv_quote(p.to_string(names))
                   << '\n';
        for (const WeylOperator& op : dm.annihilators)
            os << pd.name() << ",annihilator,," << csv_quote(op.to_string()) << '\n';
        os << pd.name() << ",certified,," << bool_word(dm.annihilationCertified) << '\n';
        if (matches) os << pd.name() << ",matchesKernel,," << bool_word(*matches) << '\n';
        r.output = os.str();
    } else {
        std::ostringstream os;
        os << "group " << pd.name() << "\n";
        os << "dimension " << dm.dimension << "\n";
        for (const auto& [deg, polys] : dm.basis) {
            os << "degree " << deg << ": ";
            for (size_t k = 0; k < polys.size(); ++k)
                os << (k ? ", " : "") << polys[k].to_string(names);
            os << "\n";
        }
        for (const WeylOperator& op : dm.annihilators)
            os << "annihilator " << op.to_string() << "\n";
        os << "annihilationCertified " << bool_word(dm.annihilationCertified) << "\n";
        if (matches) os << "matchesKernel " << bool_word(*matches) << "\n";
        r.output = os.str();
    }
    return r;
}

// --- check ---------------------------------------------------------------------

namespace {

struct CheckEntry {
    std::string name;
    std::string result; // pass | fail | match | mismatch | skipped
    std::string detail; // optional, text mode only
};

struct CheckFactor {
    std::string name;
    std::vector<CheckEntry> entries;
};

bool entry_failed(const CheckEntry& e) {
    return e.result == "fail" || e.result == "mismatch";
}

CheckFactor check_factor(const CoxeterDescriptor& g, const Options& opt) {
    CheckFactor cf;
    cf.name = g.name();

    const OrthogonalityReport orth = orthogonality_check(g);
    cf.entries.push_back({"orthogonality", orth.pass ? "pass" : "fail", ""});

    const PoincareReport poin = poincare_check(g);
    cf.entries.push_back({"poincare", poin.pass ? "pass" : "fail", ""});

    const OracleFactor of = oracle_factor(g);
    cf.entries.push_back({"oracle", of.mismatches.empty() ? "pass" : "fail",
                          std::to_string(of.compared) + " labels"});

    if (g.order() <= opt.cap) {
        const GroupElementList els = enumerate_elements(g, opt.cap);
        Int involutions = 0;
        for (const Matrix& m : els.elements)
            if ((m * m).is_identity()) ++involutions;
        const Int expected = gelfand_dimension(g);
        cf.entries.push_back({"gelfandDimension", involutions == expected ? "pass" : "fail",
                              to_string(expected)});
    } else {
        cf.entries.push_back({"gelfandDimension", "skipped", "order above cap"});
    }

    const ProductDescriptor single{{GroupFactor{g.family(), g.parameter()}}};
    const bool verdictsAgree = gelfand_verdict_computed(g).isGelfand ==
                               gelfand_verdict_classification(single).isGelfand;
    cf.entries.push_back({"verdictConsistent", verdictsAgree ? "pass" : "fail", ""});

    const int bound = std::min(g.reflection_count(),
                               opt.maxDegree.value_or(g.reflection_count()));
    if (g.rank() <= 3 && g.order() <= 48 && bound <= 8) {
        const TruncatedModel tm = truncated_model(g, bound, bound);
        std::map<int, Int> expected = model_graded_dimensions(g);
        std::erase_if(expected, [&](const auto& kv) { return kv.first > bound; });
        cf.entries.push_back({"model", tm.gradedDimension == expected ? "match" : "mismatch",
                              "degrees 0.." + std::to_string(bound)});
    } else {
        cf.entries.push_back({"model", "skipped", "outside the kernel gate"});
    }
    return cf;
}

} // namespace

RunResult run_check(const std::string& groupExpr, const Options& opt) {
    const ProductDescriptor pd = parse_group(groupExpr);
    require_computable(pd, "check");
    std::vector<CheckFactor> factors;
    for (const GroupFactor& f : pd.factors) factors.push_back(check_factor(f.desc(), opt));
    bool pass = true;
    for (const CheckFactor& cf : factors)
        for (const CheckEntry& e : cf.entries)
            if (entry_failed(e)) pass = false;
    RunResult r;
    r.exitCode = pass ? 0 : 1;
    if (opt.format == Format::Json) {
        Json j;
        j["group"] = pd.name();
        Json arr = Json::array();
        for (const CheckFactor& cf : factors) {
            Json e;
            e["factor"] = cf.name;
            for (const CheckEntry& ce : cf.entries) e[ce.name] = ce.result;
            arr.push_back(std::move(e));
        }
        j["factors"] = std::move(arr);
        j["pass"] = pass;
        r.output = dump(j);
    } else if (opt.format == Format::Csv) {
        std::ostringstream os;
        os << "group,factor,check,result\n";
        for (const CheckFactor& cf : factors)
            for (const CheckEntry& ce : cf.entries)
                os << pd.name() << ',' << cf.name << ',' << ce.name << ',' << ce.result
                   << '\n';
        r.output = os.str();
    } else {
        std::ostringstream os;
        os << "group " << pd.name() << "\n";
        for (const CheckFactor& cf : factors) {
            os << "factor " << cf.name << "\n";
            for (const CheckEntry& ce : cf.entries) {
                os << "  " << ce.name << " " << ce.result;
                if (!ce.detail.empty()) os << " (" << ce.detail << ")";
                os << "\n";
            }
        }
        os << (pass ? "pass" : "fail") << "\n";
        r.output = os.str();
    }
    return r;
}

// --- dispatch --------------------------------------------------------------------

RunResult run_command(const std::string& subcommand, const std::string& groupExpr,
                      const Options& opt) {
    try {
        if (subcommand == "fake-degrees") return run_fake_degrees(groupExpr, opt);
        if (subcommand == "verdict") return run_verdict(groupExpr, opt);
        if (subcommand == "model") return run_model(groupExpr, opt);
        if (subcommand == "oracle") return run_oracle(groupExpr, opt);
        if (subcommand == "dihedral-model") return run_dihedral_model(groupExpr, opt);
        if (subcommand == "check") return run_check(groupExpr, opt);
        throw ParseError("unknown subcommand '" + subcommand + "'");
    } catch (const Error& e) {
        return error_result(classify_error(e), e.what(), opt);
    } catch (const std::exception& e) {
        return error_result("Error", e.what(), opt);
    }
}

} // namespace gelmod::cli
