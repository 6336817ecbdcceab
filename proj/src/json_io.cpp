#include "qf/json_io.hpp"

namespace qf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

bool read_laurent(const Json& j) {
    if (j.is_object() && j.contains("laurent")) {
        const Json& l = j.at("laurent");
        if (!l.is_boolean()) bad("\"laurent\" must be a boolean");
        return l.get<bool>();
    }
    return true;
}

std::size_t read_size(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_unsigned()) bad(std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

Json elem_to_json(const GroupRingElem& e) {
    Json out = Json::object();
    if (e.modulus() == 0)
        out["modulus"] = nullptr;
    else
        out["modulus"] = e.modulus();
    Json coeffs = Json::object();
    for (const auto& [exp, c] : e.coeffs()) coeffs[std::to_string(exp)] = c.str();
    out["coeffs"] = std::move(coeffs);
    return out;
}

GroupRingElem elem_from_json(const Json& j) {
    const Json& mod = need(j, "modulus");
    std::int64_t m = 0;
    if (!mod.is_null()) {
        if (!mod.is_number_integer()) bad("\"modulus\" must be an integer or null");
        m = mod.get<std::int64_t>();
        if (m < 0) bad("\"modulus\" must be nonnegative");
    }
    GroupRingElem e(m);
    const Json& coeffs = need(j, "coeffs");
    if (!coeffs.is_object()) bad("\"coeffs\" must be an object");
    for (const auto& [key, val] : coeffs.items()) {
        std::int64_t exp = 0;
        try {
            exp = std::stoll(key);
        } catch (const std::exception&) {
            bad("coefficient key \"" + key + "\" is not an integer exponent");
        }
        if (!val.is_string()) bad("coefficient values must be decimal strings");
        try {
            e.set_coeff(exp, Int(val.get<std::string>()));
        } catch (const std::exception&) {
            bad("coefficient \"" + val.get<std::string>() + "\" is not a decimal integer");
        }
    }
    return e;
}

Json matrix_to_json(const RingMatrix& m) {
    Json out = Json::object();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

RingMatrix matrix_from_json(const Json& j, bool laurent) {
    const std::size_t rows = read_size(j, "rows"), cols = read_size(j, "cols");
    const Json& entries = need(j, "entries");
    if (!entries.is_array() || entries.size() != rows) bad("\"entries\" has the wrong row count");
    std::vector<std::vector<GroupRingElem>> parsed(rows);
    std::int64_t modulus = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = entries.at(i);
        if (!row.is_array() || row.size() != cols) bad("matrix row has the wrong length");
        for (std::size_t k = 0; k < cols; ++k) {
            GroupRingElem e = elem_from_json(row.at(k));
            if (e.modulus() != 0) {
                if (modulus != 0 && modulus != e.modulus()) bad("mixed moduli in one matrix");
                modulus = e.modulus();
            }
            if (!laurent && !e.is_constant())
                bad("non-constant entry in a matrix over a plain ring");
            parsed[i].push_back(std::move(e));
        }
    }
    RingMatrix out(rows, cols, Ring{modulus, laurent});
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) out.set(i, k, parsed[i][k]);
    return out;
}

Json form_to_json(const EpsQuadraticForm& f) {
    Json out = Json::object();
    out["eps"] = f.eps;
    out["psi"] = matrix_to_json(f.psi);
    return out;
}

EpsQuadraticForm form_from_json(const Json& j, bool laurent) {
    const Json& eps = need(j, "eps");
    if (!eps.is_number_integer()) bad("\"eps\" must be +1 or -1");
    const int e = eps.get<int>();
    if (e != 1 && e != -1) bad("\"eps\" must be +1 or -1");
    return {e, matrix_from_json(need(j, "psi"), laurent)};
}

Json formation_to_json(const SplitFormation& x) {
    Json out = Json::object();
    out["F_rank"] = x.F_rank();
    out["gamma"] = matrix_to_json(x.gamma);
    out["delta"] = matrix_to_json(x.delta);
    out["G_form"] = form_to_json(x.hessian);
    return out;
}

SplitFormation formation_from_json(const Json& j, bool laurent) {
    SplitFormation x{matrix_from_json(need(j, "gamma"), laurent),
                     matrix_from_json(need(j, "delta"), laurent),
                     form_from_json(need(j, "G_form"), laurent)};
    if (read_size(j, "F_rank") != x.F_rank()) bad("\"F_rank\" does not match gamma");
    return x;
}

Json iso_to_json(const StableIso& f) {
    Json out = Json::object();
    out["laurent"] = f.src.ring().laurent;
    out["alpha"] = matrix_to_json(f.alpha);
    out["beta"] = matrix_to_json(f.beta);
    out["nu"] = matrix_to_json(f.nu);
    out["src"] = formation_to_json(f.src);
    out["dst"] = formation_to_json(f.dst);
    out["src_stab"] = f.src_stab;
    out["dst_stab"] = f.dst_stab;
    return out;
}

StableIso iso_from_json(const Json& j) {
    const bool laurent = read_laurent(j);
    StableIso f;
    f.alpha = matrix_from_json(need(j, "alpha"), laurent);
    f.beta = matrix_from_json(need(j, "beta"), laurent);
    f.nu = matrix_from_json(need(j, "nu"), laurent);
    f.src = formation_from_json(need(j, "src"), laurent);
    f.dst = formation_from_json(need(j, "dst"), laurent);
    f.src_stab = read_size(j, "src_stab");
    f.dst_stab = read_size(j, "dst_stab");
    return f;
}

Json embedding_to_json(const TwoSidedPrimEmbedding& pe) {
    Json out = Json::object();
    out["laurent"] = pe.m.ring().laurent;
    out["v"] = form_to_json(pe.v);
    out["vprime"] = form_to_json(pe.vprime);
    out["m"] = form_to_json(pe.m);
    out["j"] = matrix_to_json(pe.j);
    out["jprime"] = matrix_to_json(pe.jprime);
    out["sigma"] = pe.sigma ? matrix_to_json(*pe.sigma) : Json(nullptr);
    return out;
}

TwoSidedPrimEmbedding embedding_from_json(const Json& j) {
    const bool laurent = read_laurent(j);
    TwoSidedPrimEmbedding pe;
    pe.v = form_from_json(need(j, "v"), laurent);
    pe.vprime = form_from_json(need(j, "vprime"), laurent);
    pe.m = form_from_json(need(j, "m"), laurent);
    pe.j = matrix_from_json(need(j, "j"), laurent);
    pe.jprime = matrix_from_json(need(j, "jprime"), laurent);
    const Json& sigma = need(j, "sigma");
    if (!sigma.is_null()) pe.sigma = matrix_from_json(sigma, laurent);
    return pe;
}

Json esf_to_json(const ExtendedSymmetricForm& e) {
    Json out = Json::object();
    out["laurent"] = e.lambda.ring().laurent;
    out["lambda"] = matrix_to_json(e.lambda);
    out["nu"] = matrix_to_json(e.nu);
    return out;
}

ExtendedSymmetricForm esf_from_json(const Json& j) {
    const bool laurent = read_laurent(j);
    return {matrix_from_json(need(j, "lambda"), laurent),
            matrix_from_json(need(j, "nu"), laurent)};
}

Json quasiformation_to_json(const QuasiFormation& x) {
    Json out = Json::object();
    out["laurent"] = x.V.ring().laurent;
    out["K_rank"] = x.K_rank;
    out["V"] = matrix_to_json(x.V);
    out["eps"] = x.eps;
    return out;
}

QuasiFormation quasiformation_from_json(const Json& j) {
    const bool laurent = read_laurent(j);
    QuasiFormation x;
    x.K_rank = read_size(j, "K_rank");
    x.V = matrix_from_json(need(j, "V"), laurent);
    const Json& eps = need(j, "eps");
    if (!eps.is_number_integer()) bad("\"eps\" must be +1 or -1");
    x.eps = eps.get<int>();
    if (x.eps != 1 && x.eps != -1) bad("\"eps\" must be +1 or -1");
    return x;
}

}  // namespace qf
