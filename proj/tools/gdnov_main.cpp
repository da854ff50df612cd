// gdnov — batch CLI over the exact Gel'fand-Dorfman / Novikov toolkit.
//
// Exit codes: 0 = checks passed / construction succeeded, 1 = a verification
// failed (witnesses in the JSON report), 2 = input or schema error,
// 3 = bounded search gave up (NotFound / CapExceeded).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gdnov/digest.hpp"
#include "gdnov/json_io.hpp"

using nlohmann::json;
using namespace gdnov;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("FileNotFound", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw SchemaError("FileNotWritable", "cannot write '" + path + "'");
    out << content;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

Field parse_field_flag(const std::string& s) {
    if (s == "Q" || s == "q") return Field::rationals();
    if (s.rfind("GF:", 0) == 0) {
        try {
            return Field::prime(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw SchemaError("BadField", "cannot parse field '" + s + "'");
        }
    }
    throw SchemaError("BadField", "field must be 'Q' or 'GF:<p>', got '" + s + "'");
}

template <Scalar K>
Vec<K> parse_scalar_list(const Field& f, const std::string& csv, std::size_t n) {
    Vec<K> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(FieldOps<K>::parse(f, item));
    if (out.size() != n)
        throw SchemaError("BadVector", "expected " + std::to_string(n) + " comma-separated scalars");
    return out;
}

struct VerifyArgs {
    std::string target;
    std::string algebra_path;
    std::string second_path; // operator or product, when applicable
    std::size_t witness_cap = 10;
};

int run_verify(const VerifyArgs& a) {
    const std::string alg_text = read_file(a.algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        CheckReport<K> rep(a.witness_cap);
        if (a.target == "lie") {
            rep = check_lie(L, a.witness_cap);
        } else if (a.target == "rmatrix" || a.target == "strong") {
            const LinearOperator<K> T = parse_operator<K>(read_file(a.second_path));
            require_same_field(L.field(), T.field(), "verify");
            rep = a.target == "rmatrix" ? check_rmatrix(L, T, a.witness_cap)
                                        : check_strong(L, T, a.witness_cap);
        } else {
            const BilinearProduct<K> P = parse_product<K>(read_file(a.second_path));
            require_same_field(L.field(), P.field(), "verify");
            if (a.target == "novikov") {
                rep.absorb(check_left_symmetric(P, a.witness_cap));
                rep.absorb(check_right_commutative(P, a.witness_cap));
            } else { // gd
                rep = check_gd(L, P, a.witness_cap);
            }
        }
        json out;
        out["command"] = "verify " + a.target;
        out["passed"] = rep.passed;
        out["report"] = json::parse(check_report_json(rep));
        emit(out);
        return rep.passed ? 0 : 1;
    });
}

int run_build_novikov(const std::string& algebra_path, const std::string& operator_path,
                      const std::string& out_path) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const LinearOperator<K> T = parse_operator<K>(read_file(operator_path));
        require_same_field(L.field(), T.field(), "build novikov");
        const BilinearProduct<K> P = product_from_operator(L, T);
        const std::string text = product_json(P);
        if (!out_path.empty()) write_file(out_path, text);
        json out;
        out["command"] = "build novikov";
        out["product"] = json::parse(text);
        if (!out_path.empty()) out["written"] = out_path;
        emit(out);
        return 0;
    });
}

void maybe_write(const std::string& path, const std::string& text) {
    if (!path.empty()) write_file(path, text);
}

int run_sl2_example(const Field& f, const std::string& alg_out, const std::string& op_out,
                    const std::string& prod_out) {
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const Sl2Example<K> ex = sl2_example<K>(f);
        const std::string a = algebra_json(ex.algebra);
        const std::string o = operator_json(ex.op);
        const std::string p = product_json(ex.product);
        maybe_write(alg_out, a);
        maybe_write(op_out, o);
        maybe_write(prod_out, p);
        json out;
        out["command"] = "construct sl2-example";
        out["algebra"] = json::parse(a);
        out["operator"] = json::parse(o);
        out["product"] = json::parse(p);
        emit(out);
        return 0;
    });
}

int run_sigma(const std::string& algebra_path, const std::string& sigma_csv,
              const std::string& out_path) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const Vec<K> sigma = parse_scalar_list<K>(f, sigma_csv, L.dim());
        const BilinearProduct<K> P = sigma_product(L, sigma);
        const std::string text = product_json(P);
        maybe_write(out_path, text);
        json out;
        out["command"] = "construct sigma";
        out["product"] = json::parse(text);
        if (!out_path.empty()) out["written"] = out_path;
        emit(out);
        return 0;
    });
}

int run_abelian(const std::string& algebra_path, const std::string& spec_path,
                const std::string& op_out, const std::string& prod_out) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const AbelianOperatorSpec<K> spec = parse_abelian_spec<K>(read_file(spec_path), L);
        const LinearOperator<K> T = abelian_operator(L, spec);
        const BilinearProduct<K> P = product_from_operator(L, T);
        const std::string o = operator_json(T);
        const std::string p = product_json(P);
        maybe_write(op_out, o);
        maybe_write(prod_out, p);
        json out;
        out["command"] = "construct abelian";
        out["operator"] = json::parse(o);
        out["product"] = json::parse(p);
        emit(out);
        return 0;
    });
}

int run_existence(const std::string& algebra_path, std::uint64_t seed, std::size_t budget,
                  const std::string& out_path) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const ExistenceCertificate<K> cert = existence(L, seed, budget);
        const std::string text = certificate_json(cert);
        maybe_write(out_path, text);
        json out;
        out["command"] = "construct existence";
        out["certificate"] = json::parse(text);
        emit(out);
        return 0;
    });
}

int run_sln_heights(std::size_t n, const Field& f, const std::string& alg_out,
                    const std::string& op_out, const std::string& prod_out) {
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const SlnHeights<K> h = sln_heights<K>(n, f);
        const LinearOperator<K> T = abelian_operator(h.algebra, h.spec);
        const BilinearProduct<K> P = product_from_operator(h.algebra, T);
        const std::string a = algebra_json(h.algebra);
        const std::string o = operator_json(T);
        const std::string p = product_json(P);
        maybe_write(alg_out, a);
        maybe_write(op_out, o);
        maybe_write(prod_out, p);
        json out;
        out["command"] = "construct sln-heights";
        out["heights"] = json::parse(sln_heights_json(h));
        out["operator"] = json::parse(o);
        out["product"] = json::parse(p);
        emit(out);
        return 0;
    });
}

int run_affine_jacobi(const std::string& algebra_path, const std::string& product_path,
                      std::size_t window, std::size_t witness_cap) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const BilinearProduct<K> P = parse_product<K>(read_file(product_path));
        require_same_field(L.field(), P.field(), "affine jacobi");
        const CheckReport<K> rep = check_affine_jacobi(L, P, window, witness_cap);
        json out;
        out["command"] = "affine jacobi";
        out["window"] = window;
        out["passed"] = rep.passed;
        out["report"] = json::parse(check_report_json(rep));
        emit(out);
        return rep.passed ? 0 : 1;
    });
}

int run_affine_bracket(const std::string& algebra_path, const std::string& product_path,
                       const std::string& elements_path) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const BilinearProduct<K> P = parse_product<K>(read_file(product_path));
        require_same_field(L.field(), P.field(), "affine bracket");
        const auto [a, b] = parse_loop_pair<K>(read_file(elements_path), L);
        const LoopElement<K> r = loop_bracket(L, P, a, b);
        json out;
        out["command"] = "affine bracket";
        out["bracket"] = json::parse(loop_element_json(r));
        emit(out);
        return 0;
    });
}

int run_cybe_defect(const std::string& algebra_path, const std::string& tensor_path) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const TensorElement<K> X = parse_tensor<K>(read_file(tensor_path));
        require_same_field(L.field(), X.field(), "cybe defect");
        const Tensor3<K> d = cybe_defect(L, X);
        json out;
        out["command"] = "cybe defect";
        out["defect"] = json::parse(tensor3_json(d));
        out["zero"] = d.is_zero();
        emit(out);
        return 0;
    });
}

int run_cybe_tmap(const std::string& tensor_path, const std::string& out_path) {
    const std::string text = read_file(tensor_path);
    const Field f = parse_field_of(text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const TensorElement<K> X = parse_tensor<K>(text);
        const LinearOperator<K> T = t_from_tensor(X);
        const std::string o = operator_json(T);
        maybe_write(out_path, o);
        json out;
        out["command"] = "cybe tmap";
        out["operator"] = json::parse(o);
        emit(out);
        return 0;
    });
}

int run_cybe_rep_defect(const std::string& algebra_path, const std::string& tensor_path) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const TensorElement<K> X = parse_tensor<K>(read_file(tensor_path));
        require_same_field(L.field(), X.field(), "cybe rep-defect");
        const Representation<K> adj = adjoint_rep(L);
        const Matrix<K> d = rep_defect(adj, X);
        json out;
        out["command"] = "cybe rep-defect";
        out["representation"] = "adjoint";
        out["zero"] = d.is_zero();
        json rows = json::array();
        for (std::size_t i = 0; i < d.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(d.at(i, j).str());
            rows.push_back(std::move(row));
        }
        out["matrix"] = std::move(rows);
        emit(out);
        return 0;
    });
}

int run_cybe_audit(const std::string& algebra_path, std::uint64_t cap,
                   const std::string& out_path) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        const BilinearForm<K> form = BilinearForm<K>::identity(L.field(), L.dim());
        const AuditReport<K> rep = cybe_audit(L, form, cap);
        const std::string text = audit_report_json(rep);
        maybe_write(out_path, text);
        json out = json::parse(text);
        out["command"] = "cybe audit";
        emit(out);
        return rep.consistency_failures.empty() ? 0 : 1;
    });
}

int run_enumerate(const std::string& algebra_path, const std::string& filter_name,
                  std::uint64_t cap, bool list) {
    const std::string alg_text = read_file(algebra_path);
    const Field f = parse_field_of(alg_text);
    OperatorFilter filter;
    if (filter_name == "all")
        filter = OperatorFilter::All;
    else if (filter_name == "rmatrix")
        filter = OperatorFilter::Rmatrix;
    else if (filter_name == "rmatrix-strong")
        filter = OperatorFilter::RmatrixAndStrong;
    else
        throw SchemaError("BadFilter", "filter must be all|rmatrix|rmatrix-strong");

    return field_dispatch(f, [&]<Scalar K>() -> int {
        const LieAlgebra<K> L = parse_algebra<K>(alg_text);
        std::uint64_t count = 0;
        std::string keys;
        json matrices = json::array();
        for_each_operator(L, filter, cap, [&](const LinearOperator<K>& T) {
            ++count;
            keys += matrix_key(T.matrix());
            keys += "\n";
            if (list) {
                json rows = json::array();
                for (std::size_t i = 0; i < T.dim(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < T.dim(); ++j)
                        row.push_back(T.matrix().at(i, j).str());
                    rows.push_back(std::move(row));
                }
                matrices.push_back(std::move(rows));
            }
        });
        json out;
        out["command"] = "enumerate";
        out["filter"] = filter_name;
        out["count"] = count;
        out["digest"] = fnv1a64_hex(keys);
        if (list) out["matrices"] = std::move(matrices);
        emit(out);
        return 0;
    });
}

json error_report(const std::string& code, const std::string& message) {
    json out;
    out["error"]["code"] = code;
    out["error"]["message"] = message;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gel'fand-Dorfman bialgebra toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run an axiom check and report witnesses");
    verify->require_subcommand(1);
    VerifyArgs vargs;
    for (const char* target : {"lie", "rmatrix", "strong", "novikov", "gd"}) {
        auto* sub = verify->add_subcommand(target);
        sub->add_option("algebra", vargs.algebra_path, "algebra JSON file")->required();
        if (std::string(target) != "lie") {
            const char* desc = (std::string(target) == "rmatrix" || std::string(target) == "strong")
                                   ? "operator JSON file"
                                   : "product JSON file";
            sub->add_option("input", vargs.second_path, desc)->required();
        }
        sub->add_option("--witness-cap", vargs.witness_cap, "max stored witnesses");
        sub->callback([target, &vargs]() { vargs.target = target; });
    }

    // build
    auto* build = app.add_subcommand("build", "construct derived objects");
    auto* build_nov = build->add_subcommand("novikov", "product u∘v = T([u,v]) − [T(u),v]");
    std::string b_alg, b_op, b_out;
    build_nov->add_option("algebra", b_alg)->required();
    build_nov->add_option("operator", b_op)->required();
    build_nov->add_option("-o,--out", b_out, "write the product file here");

    // construct
    auto* cons = app.add_subcommand("construct", "run a construction");
    cons->require_subcommand(1);

    auto* c_sl2 = cons->add_subcommand("sl2-example", "the golden sl(2) triple");
    std::string sl2_field = "Q", sl2_alg_out, sl2_op_out, sl2_prod_out;
    c_sl2->add_option("--field", sl2_field, "Q or GF:<p>");
    c_sl2->add_option("--algebra-out", sl2_alg_out);
    c_sl2->add_option("--operator-out", sl2_op_out);
    c_sl2->add_option("--product-out", sl2_prod_out);

    auto* c_sigma = cons->add_subcommand("sigma", "u∘v = σ(v)u on an abelian algebra");
    std::string sg_alg, sg_sigma, sg_out;
    c_sigma->add_option("algebra", sg_alg)->required();
    c_sigma->add_option("--sigma", sg_sigma, "comma-separated covector")->required();
    c_sigma->add_option("-o,--out", sg_out);

    auto* c_abel = cons->add_subcommand("abelian", "operator from an abelian subalgebra");
    std::string ab_alg, ab_spec, ab_op_out, ab_prod_out;
    c_abel->add_option("algebra", ab_alg)->required();
    c_abel->add_option("spec", ab_spec, "JSON with k (spanning rows), optional kbar, t0")->required();
    c_abel->add_option("--operator-out", ab_op_out);
    c_abel->add_option("--product-out", ab_prod_out);

    auto* c_exist = cons->add_subcommand("existence", "bounded search for a nontrivial product");
    std::string ex_alg, ex_out;
    std::uint64_t ex_seed = 1;
    std::size_t ex_budget = 1000;
    c_exist->add_option("algebra", ex_alg)->required();
    c_exist->add_option("--seed", ex_seed);
    c_exist->add_option("--budget", ex_budget);
    c_exist->add_option("-o,--out", ex_out, "write the certificate here");

    auto* c_sln = cons->add_subcommand("sln-heights", "root-height abelian subalgebra of sl(n)");
    std::size_t sln_n = 2;
    std::string sln_field = "Q", sln_alg_out, sln_op_out, sln_prod_out;
    c_sln->add_option("--n", sln_n, "rank parameter, n >= 2")->required();
    c_sln->add_option("--field", sln_field, "Q or GF:<p>");
    c_sln->add_option("--algebra-out", sln_alg_out);
    c_sln->add_option("--operator-out", sln_op_out);
    c_sln->add_option("--product-out", sln_prod_out);

    // affine
    auto* aff = app.add_subcommand("affine", "loop-extension bracket and its Jacobi check");
    auto* aff_jac = aff->add_subcommand("jacobi", "windowed skew + Jacobi verification");
    std::string aj_alg, aj_prod;
    std::size_t aj_window = 3, aj_cap = 10;
    aff_jac->add_option("algebra", aj_alg)->required();
    aff_jac->add_option("product", aj_prod)->required();
    aff_jac->add_option("--window", aj_window, "degree window (default 3)");
    aff_jac->add_option("--witness-cap", aj_cap);
    auto* aff_br = aff->add_subcommand("bracket", "bracket of two loop elements");
    std::string ab2_alg, ab2_prod, ab2_elems;
    aff_br->add_option("algebra", ab2_alg)->required();
    aff_br->add_option("product", ab2_prod)->required();
    aff_br->add_option("--elements", ab2_elems, "JSON file with elements a and b")->required();

    // cybe
    auto* cy = app.add_subcommand("cybe", "Yang-Baxter apparatus");
    auto* cy_def = cy->add_subcommand("defect", "tensor-form defect in G⊗G⊗G");
    std::string cd_alg, cd_tensor;
    cy_def->add_option("algebra", cd_alg)->required();
    cy_def->add_option("tensor", cd_tensor)->required();
    auto* cy_tmap = cy->add_subcommand("tmap", "operator T_X from a tensor");
    std::string ct_tensor, ct_out;
    cy_tmap->add_option("tensor", ct_tensor)->required();
    cy_tmap->add_option("-o,--out", ct_out);
    auto* cy_rep = cy->add_subcommand("rep-defect", "defect of R on V⊗V⊗V (adjoint rep)");
    std::string cr_alg, cr_tensor;
    cy_rep->add_option("algebra", cr_alg)->required();
    cy_rep->add_option("tensor", cr_tensor)->required();
    auto* cy_audit = cy->add_subcommand("audit", "exhaustive GF(p) tensor audit, identity form");
    std::string ca_alg, ca_out;
    std::uint64_t ca_cap = (1u << 24);
    cy_audit->add_option("algebra", ca_alg)->required();
    cy_audit->add_option("--cap", ca_cap);
    cy_audit->add_option("-o,--out", ca_out, "write the audit report here");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "stream all GF(p) operators through a filter");
    std::string en_alg, en_filter = "all";
    std::uint64_t en_cap = (1u << 24);
    bool en_list = false;
    en->add_option("algebra", en_alg)->required();
    en->add_option("--filter", en_filter, "all|rmatrix|rmatrix-strong");
    en->add_option("--cap", en_cap);
    en->add_flag("--list", en_list, "include the matrices in the report");

    try {
        app.parse(argc, argv);

        if (verify->parsed()) return run_verify(vargs);
        if (build_nov->parsed()) return run_build_novikov(b_alg, b_op, b_out);
        if (c_sl2->parsed())
            return run_sl2_example(parse_field_flag(sl2_field), sl2_alg_out, sl2_op_out,
                                   sl2_prod_out);
        if (c_sigma->parsed()) return run_sigma(sg_alg, sg_sigma, sg_out);
        if (c_abel->parsed()) return run_abelian(ab_alg, ab_spec, ab_op_out, ab_prod_out);
        if (c_exist->parsed()) return run_existence(ex_alg, ex_seed, ex_budget, ex_out);
        if (c_sln->parsed())
            return run_sln_heights(sln_n, parse_field_flag(sln_field), sln_alg_out, sln_op_out,
                                   sln_prod_out);
        if (aff_jac->parsed()) return run_affine_jacobi(aj_alg, aj_prod, aj_window, aj_cap);
        if (aff_br->parsed()) return run_affine_bracket(ab2_alg, ab2_prod, ab2_elems);
        if (cy_def->parsed()) return run_cybe_defect(cd_alg, cd_tensor);
        if (cy_tmap->parsed()) return run_cybe_tmap(ct_tensor, ct_out);
        if (cy_rep->parsed()) return run_cybe_rep_defect(cr_alg, cr_tensor);
        if (cy_audit->parsed()) return run_cybe_audit(ca_alg, ca_cap, ca_out);
        if (en->parsed()) return run_enumerate(en_alg, en_filter, en_cap, en_list);

        emit(error_report("BadCommand", "no subcommand selected"));
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        emit(error_report("BadArguments", e.what()));
        return 2;
    } catch (const SearchError& e) {
        emit(error_report(e.code(), e.what()));
        return 3;
    } catch (const Error& e) {
        emit(error_report(e.code(), e.what()));
        return 2;
    } catch (const std::exception& e) {
        emit(error_report("InternalError", e.what()));
        return 2;
    }
}
