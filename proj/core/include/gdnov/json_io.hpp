#ifndef GDNOV_JSON_IO_HPP
#define GDNOV_JSON_IO_HPP

#include <string>
#include <utility>

#include "gdnov/affine.hpp"
#include "gdnov/construct.hpp"
#include "gdnov/cybe.hpp"
#include "gdnov/novikov.hpp"

// Canonical JSON model files and reports.  Serialization is canonical:
// alphabetically sorted keys, sparse indices in ascending order, scalars as
// reduced exact strings ("3/4", "-2", residues in [0,p)), two-space indent,
// trailing newline.  save(load(f)) is byte-identical for canonical files.
//
// Scalar encoding of fields: {"type":"Q"} or {"p":7,"type":"GF"}.

namespace gdnov {

/// Reads just the "field" descriptor of any model file.
Field parse_field_of(const std::string& json_text);

template <Scalar K> LieAlgebra<K> parse_algebra(const std::string& json_text);
template <Scalar K> LinearOperator<K> parse_operator(const std::string& json_text);
template <Scalar K> BilinearProduct<K> parse_product(const std::string& json_text);
template <Scalar K> TensorElement<K> parse_tensor(const std::string& json_text);

/// {"k": [[...]], "kbar": [[...]](optional), "t0": [[...]](optional)} read
/// against an algebra; omitted parts get the deterministic defaults
/// (canonical complement of K+[K,G]; first-to-first T0).
template <Scalar K>
AbelianOperatorSpec<K> parse_abelian_spec(const std::string& json_text, const LieAlgebra<K>& L);

/// {"a": [{"coeffs": [...], "deg": j}, ...], "b": [...]}
template <Scalar K>
std::pair<LoopElement<K>, LoopElement<K>> parse_loop_pair(const std::string& json_text,
                                                          const LieAlgebra<K>& L);

template <Scalar K> std::string algebra_json(const LieAlgebra<K>& L);
template <Scalar K> std::string operator_json(const LinearOperator<K>& T);
template <Scalar K> std::string product_json(const BilinearProduct<K>& P);
template <Scalar K> std::string tensor_json(const TensorElement<K>& X);
template <Scalar K> std::string check_report_json(const CheckReport<K>& rep);
template <Scalar K> std::string form_report_json(const FormReport<K>& rep);
template <Scalar K> std::string loop_element_json(const LoopElement<K>& e);
template <Scalar K> std::string subspace_json(const Subspace<K>& s);
template <Scalar K> std::string certificate_json(const ExistenceCertificate<K>& cert);
template <Scalar K> std::string audit_report_json(const AuditReport<K>& rep);
template <Scalar K> std::string sln_heights_json(const SlnHeights<K>& h);
template <Scalar K> std::string tensor3_json(const Tensor3<K>& t);

/// Row-major compact rendering, "a,b;c,d" — stable key for digests.
template <Scalar K> std::string matrix_key(const Matrix<K>& m);

} // namespace gdnov

#endif
