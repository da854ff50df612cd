#include "gdnov/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <vector>

namespace gdnov {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("BadJson", std::string("malformed JSON: ") + e.what());
    }
}

const json& get(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError("MissingKey", std::string("missing key '") + key + "'");
    return *it;
}

std::size_t get_count(const json& j, const char* key) {
    const json& v = get(j, key);
    if (!v.is_number_unsigned())
        throw SchemaError("BadValue", std::string("'") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::size_t get_index(const json& j, const char* key, std::size_t bound) {
    const std::size_t v = get_count(j, key);
    if (v >= bound)
        throw SchemaError("IndexOutOfRange", std::string("'") + key + "' = " + std::to_string(v) +
                                                 " out of range [0," + std::to_string(bound) + ")");
    return v;
}

json field_to_json(const Field& f) {
    json j;
    if (f.kind() == Field::Kind::rationals) {
        j["type"] = "Q";
    } else {
        j["type"] = "GF";
        j["p"] = f.modulus();
    }
    return j;
}

Field field_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("BadField", "'field' must be an object");
    const json& t = get(j, "type");
    if (t == "Q") return Field::rationals();
    if (t == "GF") {
        const json& p = get(j, "p");
        if (!p.is_number_unsigned()) throw SchemaError("BadField", "'p' must be a positive integer");
        return Field::prime(p.get<std::uint32_t>());
    }
    throw SchemaError("BadField", "field type must be \"Q\" or \"GF\"");
}

template <Scalar K>
K scalar_from_json(const Field& f, const json& j) {
    if (!j.is_string())
        throw SchemaError("BadScalar", "scalars must be strings, got " + j.dump());
    return FieldOps<K>::parse(f, j.get<std::string>());
}

template <Scalar K>
Vec<K> vector_from_json(const Field& f, const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n)
        throw SchemaError("BadVector",
                          std::string(what) + " must be an array of " + std::to_string(n) + " scalars");
    Vec<K> v;
    v.reserve(n);
    for (const auto& e : j) v.push_back(scalar_from_json<K>(f, e));
    return v;
}

template <Scalar K>
json vector_to_json(const Vec<K>& v) {
    json a = json::array();
    for (const K& x : v) a.push_back(x.str());
    return a;
}

template <Scalar K>
Matrix<K> matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols,
                           const char* what) {
    if (!j.is_array() || j.size() != rows)
        throw SchemaError("BadMatrix",
                          std::string(what) + " must have " + std::to_string(rows) + " rows");
    Matrix<K> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Vec<K> row = vector_from_json<K>(f, j[i], cols, what);
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = row[c];
    }
    return m;
}

template <Scalar K>
json matrix_to_json(const Matrix<K>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
    return rows;
}

/// Shared sparse layout of brackets/products: [{"i":..,"j":..,"terms":[{"c":..,"k":..}]}]
template <Scalar K>
std::map<ScKey, K> sparse_from_json(const Field& f, const json& j, std::size_t dim,
                                    bool require_i_lt_j, const char* what) {
    if (!j.is_array()) throw SchemaError("BadValue", std::string(what) + " must be an array");
    std::map<ScKey, K> out;
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const auto& row : j) {
        const std::size_t i = get_index(row, "i", dim);
        const std::size_t jj = get_index(row, "j", dim);
        if (require_i_lt_j && i >= jj)
            throw SchemaError("BadStructureConstants",
                              std::string(what) + " rows require i < j, got i=" + std::to_string(i) +
                                  ", j=" + std::to_string(jj));
        if (seen.count({i, jj}))
            throw SchemaError("DuplicateEntry", std::string(what) + " repeats pair (" +
                                                    std::to_string(i) + "," + std::to_string(jj) + ")");
        seen[{i, jj}] = true;
        const json& terms = get(row, "terms");
        if (!terms.is_array()) throw SchemaError("BadValue", "'terms' must be an array");
        std::vector<bool> seen_k(dim, false);
        for (const auto& term : terms) {
            const std::size_t k = get_index(term, "k", dim);
            if (seen_k[k])
                throw SchemaError("DuplicateEntry", std::string(what) + " repeats k=" +
                                                        std::to_string(k) + " in one term list");
            seen_k[k] = true;
            const K c = scalar_from_json<K>(f, get(term, "c"));
            if (!c.is_zero()) out[{i, jj, k}] = c;
        }
    }
    return out;
}

template <Scalar K>
json sparse_to_json(const std::map<ScKey, K>& sc) {
    json rows = json::array();
    json* current = nullptr;
    std::size_t cur_i = 0, cur_j = 0;
    for (const auto& [key, c] : sc) {
        const auto [i, j, k] = key;
        if (!current || cur_i != i || cur_j != j) {
            json row;
            row["i"] = i;
            row["j"] = j;
            row["terms"] = json::array();
            rows.push_back(std::move(row));
            current = &rows.back();
            cur_i = i;
            cur_j = j;
        }
        json term;
        term["c"] = c.str();
        term["k"] = k;
        (*current)["terms"].push_back(std::move(term));
    }
    return rows;
}

template <Scalar K>
json subspace_to_json(const Subspace<K>& s) {
    json j;
    j["ambient_dim"] = s.ambient_dim();
    j["basis"] = matrix_to_json(s.basis());
    return j;
}

template <Scalar K>
json check_report_to_json(const CheckReport<K>& rep) {
    json j;
    j["passed"] = rep.passed;
    j["witness_count"] = rep.witness_count;
    json ws = json::array();
    for (const auto& w : rep.witnesses) {
        json wj;
        wj["axiom"] = w.axiom;
        wj["eq"] = w.eq;
        wj["indices"] = w.indices;
        wj["defect"] = vector_to_json(w.defect);
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

} // namespace

Field parse_field_of(const std::string& text) {
    return field_from_json(get(parse_text(text), "field"));
}

template <Scalar K>
LieAlgebra<K> parse_algebra(const std::string& text) {
    const json j = parse_text(text);
    const Field f = field_from_json(get(j, "field"));
    if (!FieldOps<K>::matches(f))
        throw SchemaError("FieldMismatch", "scalar type does not match file field");
    const std::size_t dim = get_count(j, "dim");
    const json& basis = get(j, "basis");
    if (!basis.is_array() || basis.size() != dim)
        throw SchemaError("BadBasisNames", "'basis' must list one name per dimension");
    std::vector<std::string> names;
    for (const auto& b : basis) {
        if (!b.is_string()) throw SchemaError("BadBasisNames", "basis names must be strings");
        names.push_back(b.get<std::string>());
    }
    const auto sc = sparse_from_json<K>(f, get(j, "brackets"), dim, true, "brackets");
    return LieAlgebra<K>(f, dim, std::move(names), sc);
}

template <Scalar K>
std::string algebra_json(const LieAlgebra<K>& L) {
    json j;
    j["field"] = field_to_json(L.field());
    j["dim"] = L.dim();
    j["basis"] = L.basis_names();
    j["brackets"] = sparse_to_json(L.constants());
    return dump(j);
}

static const char* kOperatorConvention = "T(b_j)=sum_i M[i][j] b_i";

template <Scalar K>
LinearOperator<K> parse_operator(const std::string& text) {
    const json j = parse_text(text);
    const Field f = field_from_json(get(j, "field"));
    if (!FieldOps<K>::matches(f))
        throw SchemaError("FieldMismatch", "scalar type does not match file field");
    const std::size_t dim = get_count(j, "dim");
    if (j.contains("convention") && j["convention"] != kOperatorConvention)
        throw SchemaError("BadConvention",
                          std::string("operator files use the convention \"") + kOperatorConvention +
                              "\"");
    return LinearOperator<K>(matrix_from_json<K>(f, get(j, "matrix"), dim, dim, "matrix"));
}

template <Scalar K>
std::string operator_json(const LinearOperator<K>& T) {
    json j;
    j["convention"] = kOperatorConvention;
    j["field"] = field_to_json(T.field());
    j["dim"] = T.dim();
    j["matrix"] = matrix_to_json(T.matrix());
    return dump(j);
}

template <Scalar K>
BilinearProduct<K> parse_product(const std::string& text) {
    const json j = parse_text(text);
    const Field f = field_from_json(get(j, "field"));
    if (!FieldOps<K>::matches(f))
        throw SchemaError("FieldMismatch", "scalar type does not match file field");
    const std::size_t dim = get_count(j, "dim");
    const auto d = sparse_from_json<K>(f, get(j, "products"), dim, false, "products");
    return BilinearProduct<K>(f, dim, d);
}

template <Scalar K>
std::string product_json(const BilinearProduct<K>& P) {
    json j;
    j["field"] = field_to_json(P.field());
    j["dim"] = P.dim();
    j["products"] = sparse_to_json(P.constants());
    return dump(j);
}

template <Scalar K>
TensorElement<K> parse_tensor(const std::string& text) {
    const json j = parse_text(text);
    const Field f = field_from_json(get(j, "field"));
    if (!FieldOps<K>::matches(f))
        throw SchemaError("FieldMismatch", "scalar type does not match file field");
    const std::size_t dim = get_count(j, "dim");
    return TensorElement<K>(matrix_from_json<K>(f, get(j, "r"), dim, dim, "r"));
}

template <Scalar K>
std::string tensor_json(const TensorElement<K>& X) {
    json j;
    j["field"] = field_to_json(X.field());
    j["dim"] = X.dim();
    j["r"] = matrix_to_json(X.r);
    return dump(j);
}

template <Scalar K>
AbelianOperatorSpec<K> parse_abelian_spec(const std::string& text, const LieAlgebra<K>& L) {
    const json j = parse_text(text);
    const Field& f = L.field();
    const std::size_t n = L.dim();

    auto span_from = [&](const json& rows, const char* what) {
        if (!rows.is_array()) throw SchemaError("BadValue", std::string(what) + " must be an array");
        std::vector<Vec<K>> gens;
        for (const auto& r : rows) gens.push_back(vector_from_json<K>(f, r, n, what));
        return Subspace<K>::span_of(f, n, gens);
    };

    const Subspace<K> sub_k = span_from(get(j, "k"), "k");
    Subspace<K> kbar = Subspace<K>::zero(f, n);
    if (j.contains("kbar")) {
        kbar = span_from(j["kbar"], "kbar");
    } else {
        kbar = complement(subspace_sum(sub_k, ad_image(L, sub_k)));
    }
    Matrix<K> t0(f, sub_k.dim(), kbar.dim());
    if (j.contains("t0")) {
        t0 = matrix_from_json<K>(f, j["t0"], sub_k.dim(), kbar.dim(), "t0");
    } else if (sub_k.dim() > 0 && kbar.dim() > 0) {
        t0.at(0, 0) = FieldOps<K>::one(f);
    }
    return AbelianOperatorSpec<K>{sub_k, kbar, std::move(t0)};
}

template <Scalar K>
std::pair<LoopElement<K>, LoopElement<K>> parse_loop_pair(const std::string& text,
                                                          const LieAlgebra<K>& L) {
    const json j = parse_text(text);
    auto element_from = [&](const json& terms, const char* what) {
        if (!terms.is_array())
            throw SchemaError("BadValue", std::string(what) + " must be an array of terms");
        LoopElement<K> e(L.field(), L.dim());
        for (const auto& t : terms) {
            const json& deg = get(t, "deg");
            if (!deg.is_number_integer())
                throw SchemaError("BadValue", "'deg' must be an integer");
            e.add_term(deg.get<long long>(),
                       vector_from_json<K>(L.field(), get(t, "coeffs"), L.dim(), "coeffs"));
        }
        return e;
    };
    return {element_from(get(j, "a"), "a"), element_from(get(j, "b"), "b")};
}

template <Scalar K>
std::string loop_element_json(const LoopElement<K>& e) {
    json j;
    j["dim"] = e.dim();
    j["field"] = field_to_json(e.field());
    json terms = json::array();
    for (const auto& [deg, v] : e.terms()) {
        json t;
        t["deg"] = deg;
        t["coeffs"] = vector_to_json(v);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return dump(j);
}

template <Scalar K>
std::string check_report_json(const CheckReport<K>& rep) {
    return dump(check_report_to_json(rep));
}

template <Scalar K>
std::string form_report_json(const FormReport<K>& rep) {
    json j;
    j["gram_rank"] = rep.gram_rank;
    j["invariant"] = rep.report.passed;
    j["nondegenerate"] = rep.nondegenerate;
    j["report"] = check_report_to_json(rep.report);
    return dump(j);
}

template <Scalar K>
std::string subspace_json(const Subspace<K>& s) {
    return dump(subspace_to_json(s));
}

template <Scalar K>
std::string certificate_json(const ExistenceCertificate<K>& cert) {
    json j;
    j["budget"] = cert.budget;
    j["candidates_tried"] = cert.candidates_tried;
    j["seed"] = cert.seed;
    json nt;
    if (cert.kind == ExistenceCertificate<K>::Case::abelian) {
        j["case"] = "abelian";
        j["sigma"] = vector_to_json(*cert.sigma);
        nt["identity"] = "b0*b0 = sigma(b0)*b0";
    } else {
        j["case"] = "noncentral";
        j["u0"] = vector_to_json(*cert.u0);
        j["v0"] = vector_to_json(*cert.v0);
        j["v_space"] = subspace_to_json(*cert.v_space);
        j["operator"] = json::parse(operator_json(*cert.op));
        nt["identity"] = "v0*v0 = -[u0,v0]";
    }
    nt["value"] = vector_to_json(cert.nontrivial);
    j["nontrivial"] = std::move(nt);
    j["product"] = json::parse(product_json(cert.product));
    return dump(j);
}

template <Scalar K>
std::string audit_report_json(const AuditReport<K>& rep) {
    json j;
    j["p"] = rep.p;
    j["dim"] = rep.dim;
    j["total"] = rep.total;
    j["cybe_solutions"] = rep.cybe_solutions;
    j["rmatrix_solutions"] = rep.rmatrix_solutions;
    j["both"] = rep.both;
    auto matrices = [](const std::vector<Matrix<K>>& ms) {
        json a = json::array();
        for (const auto& m : ms) a.push_back(matrix_to_json(m));
        return a;
    };
    j["only_cybe"] = matrices(rep.only_cybe);
    j["only_rmatrix"] = matrices(rep.only_rmatrix);
    j["consistency_failures"] = matrices(rep.consistency_failures);
    return dump(j);
}

template <Scalar K>
std::string sln_heights_json(const SlnHeights<K>& h) {
    json j;
    j["n"] = h.heights.n;
    j["k"] = h.heights.k;
    j["ell"] = h.heights.ell;
    json layers;
    for (const auto& [m, sub] : h.heights.layers) layers[std::to_string(m)] = subspace_to_json(sub);
    j["layers"] = std::move(layers);
    j["k_subspace"] = subspace_to_json(h.heights.sub_k);
    j["kbar"] = subspace_to_json(h.spec.kbar);
    j["t0"] = matrix_to_json(h.spec.t0);
    return dump(j);
}

template <Scalar K>
std::string tensor3_json(const Tensor3<K>& t) {
    json j;
    j["dim"] = t.dim();
    j["field"] = field_to_json(t.field());
    j["zero"] = t.is_zero();
    json entries = json::array();
    const std::size_t n = t.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const K& v = t.at(a, b, c);
                if (v.is_zero()) continue;
                json e;
                e["a"] = a;
                e["b"] = b;
                e["c"] = c;
                e["v"] = v.str();
                entries.push_back(std::move(e));
            }
    j["entries"] = std::move(entries);
    return dump(j);
}

template <Scalar K>
std::string matrix_key(const Matrix<K>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += m.at(i, j).str();
        }
    }
    return s;
}

// ---- explicit instantiations ---------------------------------------------

#define GDNOV_INSTANTIATE(K)                                                                    \
    template LieAlgebra<K> parse_algebra<K>(const std::string&);                                \
    template LinearOperator<K> parse_operator<K>(const std::string&);                           \
    template BilinearProduct<K> parse_product<K>(const std::string&);                           \
    template TensorElement<K> parse_tensor<K>(const std::string&);                              \
    template AbelianOperatorSpec<K> parse_abelian_spec<K>(const std::string&,                   \
                                                          const LieAlgebra<K>&);                \
    template std::pair<LoopElement<K>, LoopElement<K>> parse_loop_pair<K>(const std::string&,   \
                                                                          const LieAlgebra<K>&); \
    template std::string algebra_json<K>(const LieAlgebra<K>&);                                 \
    template std::string operator_json<K>(const LinearOperator<K>&);                            \
    template std::string product_json<K>(const BilinearProduct<K>&);                            \
    template std::string tensor_json<K>(const TensorElement<K>&);                               \
    template std::string check_report_json<K>(const CheckReport<K>&);                           \
    template std::string form_report_json<K>(const FormReport<K>&);                             \
    template std::string loop_element_json<K>(const LoopElement<K>&);                           \
    template std::string subspace_json<K>(const Subspace<K>&);                                  \
    template std::string certificate_json<K>(const ExistenceCertificate<K>&);                   \
    template std::string audit_report_json<K>(const AuditReport<K>&);                           \
    template std::string sln_heights_json<K>(const SlnHeights<K>&);                             \
    template std::string tensor3_json<K>(const Tensor3<K>&);                                    \
    template std::string matrix_key<K>(const Matrix<K>&);

GDNOV_INSTANTIATE(Rational)
GDNOV_INSTANTIATE(Mod)

#undef GDNOV_INSTANTIATE

} // namespace gdnov
