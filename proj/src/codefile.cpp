#include "exotic/codefile.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace exotic {

using ordered_json = nlohmann::ordered_json;

CodeFileData make_codefile(const QubitCode& code) {
    CodeFileData data;
    data.n = code.n();
    data.j = format_half_integer(code.spin.twoj);
    data.group = code.spin.group_label;
    data.irrep = code.spin.irrep_label;
    for (const Rat& q : code.spin.selector) data.selector.push_back(q.get_str());
    for (int which = 0; which < 2; ++which) {
        std::vector<CodeTerm> terms;
        for (const CoefficientForm& cf : normalized_coefficients(code.spin, which)) {
            CodeTerm t;
            t.weight = cf.weight;
            t.sign = cf.sign;
            t.exact = cf.exact;
            if (cf.exact) t.square = cf.square;
            t.decimal = decimal_string(cf.value_hp, 30);
            terms.push_back(std::move(t));
        }
        data.codewords.push_back(std::move(terms));
    }
    return data;
}

std::string codefile_json(const CodeFileData& data) {
    ordered_json root;
    root["format_version"] = data.format_version;
    root["n"] = data.n;
    root["j"] = data.j;
    root["group"] = data.group;
    root["irrep"] = data.irrep;
    root["selector"] = data.selector;
    ordered_json conventions;
    conventions["m_ordering"] = "m = j down to -j; row index equals Dicke weight w = j - m";
    conventions["ket1"] = "|1> = i D(X) |0>";
    root["conventions"] = conventions;
    ordered_json codewords = ordered_json::array();
    const char* names[2] = {"0bar", "1bar"};
    for (size_t w = 0; w < data.codewords.size(); ++w) {
        ordered_json cw;
        cw["name"] = names[w < 2 ? w : 1];
        ordered_json terms = ordered_json::array();
        for (const CodeTerm& t : data.codewords[w]) {
            ordered_json jt;
            jt["weight"] = t.weight;
            jt["sign"] = t.sign;
            if (t.exact) {
                jt["sq_numerator"] = t.square.get_num().get_str();
                jt["sq_denominator"] = t.square.get_den().get_str();
            }
            jt["decimal"] = t.decimal;
            terms.push_back(std::move(jt));
        }
        cw["terms"] = std::move(terms);
        codewords.push_back(std::move(cw));
    }
    root["codewords"] = std::move(codewords);
    return root.dump(2) + "\n";
}

void write_codefile(const CodeFileData& data, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << codefile_json(data);
}

CodeFileData read_codefile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedFile("cannot open " + path);
    ordered_json root;
    try {
        in >> root;
    } catch (const std::exception& e) {
        throw MalformedFile(std::string("invalid JSON: ") + e.what());
    }
    CodeFileData data;
    try {
        data.format_version = root.at("format_version").get<int>();
        data.n = root.at("n").get<long>();
        data.j = root.at("j").get<std::string>();
        data.group = root.at("group").get<std::string>();
        data.irrep = root.at("irrep").get<std::string>();
        for (const auto& s : root.at("selector")) data.selector.push_back(s.get<std::string>());
        for (const auto& cw : root.at("codewords")) {
            std::vector<CodeTerm> terms;
            for (const auto& jt : cw.at("terms")) {
                CodeTerm t;
                t.weight = jt.at("weight").get<long>();
                t.sign = jt.at("sign").get<int>();
                if (jt.contains("sq_numerator")) {
                    t.exact = true;
                    Int num(jt.at("sq_numerator").get<std::string>());
                    Int den(jt.at("sq_denominator").get<std::string>());
                    if (den <= 0 || num < 0) throw MalformedFile("squared coefficients must be >= 0");
                    t.square = Rat(num, den);
                    t.square.canonicalize();
                }
                t.decimal = jt.at("decimal").get<std::string>();
                terms.push_back(std::move(t));
            }
            data.codewords.push_back(std::move(terms));
        }
    } catch (const MalformedFile&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedFile(std::string("missing or ill-typed field: ") + e.what());
    }
    if (data.codewords.size() != 2) throw MalformedFile("expected exactly two codewords");
    if (data.n < 1 || data.n % 2 == 0) throw MalformedFile("n must be a positive odd integer");
    // when every coefficient is exact, the squares must sum to 1 per codeword
    for (const auto& terms : data.codewords) {
        bool all_exact = true;
        Rat total(0);
        for (const CodeTerm& t : terms) {
            if (!t.exact) all_exact = false;
            else total += t.square;
        }
        if (all_exact && total != 1)
            throw MalformedFile("squared coefficients of a codeword must sum to 1");
    }
    return data;
}

std::optional<QubitCode> codefile_to_code(const CodeFileData& data) {
    const CycloField& f = field40();
    long n = data.n;
    SpinCode spin;
    spin.twoj = n;
    spin.group_label = data.group;
    spin.irrep_label = data.irrep;
    for (const std::string& s : data.selector) spin.selector.push_back(parse_rational(s));
    spin.mu = static_cast<long>(spin.selector.size());

    for (int which = 0; which < 2; ++which) {
        const auto& terms = data.codewords[which];
        CycloVec ket(n + 1, Cyclo::zero(f));
        if (terms.empty()) return std::nullopt;
        for (const CodeTerm& t : terms)
            if (!t.exact || t.weight < 0 || t.weight > n) return std::nullopt;
        // reconstruct relative to the first term: xi_w0 = sign, and
        // xi_w = sign * sqrt(sq_w F_w0 / (sq_w0 F_w)) which must be rational
        const CodeTerm& first = terms.front();
        Rat sq0 = first.square;
        Int f0 = SpinOperator::gram_weight(n, first.weight);
        for (const CodeTerm& t : terms) {
            Rat ratio = t.square * Rat(f0) / (sq0 * Rat(SpinOperator::gram_weight(n, t.weight)));
            ratio.canonicalize();
            auto root = sqrt_exact(ratio);
            if (!root) return std::nullopt;
            Rat val = (t.sign < 0 ? Rat(-1) : Rat(1)) * *root;
            ket[t.weight] = Cyclo::from_rational(f, val);
        }
        if (which == 0)
            spin.ket0 = std::move(ket);
        else
            spin.ket1 = std::move(ket);
    }
    spin.norm_sq = gram_inner(n, spin.ket0, spin.ket0);
    if (spin.norm_sq.is_zero()) return std::nullopt;
    return QubitCode{std::move(spin)};
}

namespace {
std::string sqrt_text(const Rat& square) {
    auto num_root = sqrt_exact(Rat(square.get_num()));
    auto den_root = sqrt_exact(Rat(square.get_den()));
    std::ostringstream os;
    if (num_root && den_root) {
        os << num_root->get_num().get_str() << "/" << den_root->get_num().get_str();
    } else if (den_root) {
        os << "sqrt(" << square.get_num().get_str() << ")/" << den_root->get_num().get_str();
    } else {
        os << "sqrt(" << square.get_num().get_str() << "/" << square.get_den().get_str() << ")";
    }
    return os.str();
}
} // namespace

std::string render_display(const CodeFileData& data) {
    std::ostringstream os;
    os << "((" << data.n << ",2,3)) code  group=" << data.group << "  irrep=" << data.irrep
       << "  j=" << data.j << "\n";
    const char* names[2] = {"|0bar>", "|1bar>"};
    for (size_t w = 0; w < data.codewords.size(); ++w) {
        os << names[w] << " =";
        bool first = true;
        for (const CodeTerm& t : data.codewords[w]) {
            os << (t.sign < 0 ? " - " : (first ? "  " : " + "));
            if (t.exact)
                os << sqrt_text(t.square);
            else
                os << (t.decimal[0] == '-' ? t.decimal.substr(1) : t.decimal);
            os << " |D_" << t.weight << "^" << data.n << ">";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace exotic
