#pragma once

#include "qha/algebroid.hpp"
#include "qha/coefficients.hpp"
#include "qha/cyclic.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qha::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

enum class ErrorCode { Io, Syntax, Schema, NonPrime, Dimension, ScalarParse, Incompatible, Usage, Limit };

const char* error_code_name(ErrorCode c);

class InputError : public std::runtime_error {
 public:
  InputError(ErrorCode code, std::string pointer, const std::string& message)
      : std::runtime_error(message), code_(code), pointer_(std::move(pointer)) {}
  ErrorCode code() const { return code_; }
  const std::string& pointer() const { return pointer_; }

 private:
  ErrorCode code_;
  std::string pointer_;
};

enum class Kind { QuasiHopf, HopfAlgebroid, Module, Contramodule, ModuleAlgebra };

const char* kind_name(Kind k);
Kind parse_kind(const Json& doc);

// A loaded file: raw JSON plus its provenance and content hash.
struct Document {
  Json json;
  std::string file;  // basename, or "<inline>"
  std::filesystem::path dir;
  std::string hash;
  Kind kind = Kind::QuasiHopf;
  FieldSpec field;
  std::string name;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string content_hash(const Json& j);
std::string canonical(const Json& j);

Document load_document(const std::filesystem::path& path);
Document document_from_json(Json j, std::string file, std::filesystem::path dir);
// The "algebra" member of a dependent document, inline or by path relative to the document.
Document referenced_algebra(const Document& doc);
bool has_algebra_reference(const Document& doc);

FieldSpec parse_field(const Json& j, const std::string& pointer);
OrderedJson field_json(const FieldSpec& f);
Flavor parse_flavor(const std::string& s);
const char* flavor_key(Flavor f);

std::string dump(const OrderedJson& j, bool pretty = true);
void write_text(const std::filesystem::path& path, const std::string& text);

namespace detail {

const Json& member(const Json& obj, const std::string& key, const std::string& pointer);
Index read_dim(const Json& obj, const std::string& key, const std::string& pointer);
std::string read_name(const Json& obj);

// Reads a nested array of the given shape into a row-major flat list of scalars.
template <class S>
std::vector<S> read_tensor(const Json& j, const std::string& pointer, const std::vector<Index>& shape,
                           const FieldSpec& f, std::size_t level = 0) {
  std::vector<S> out;
  if (level == shape.size()) {
    if (!j.is_string()) throw InputError(ErrorCode::Schema, pointer, pointer + ": scalar must be a string");
    try {
      out.push_back(FieldOps<S>::parse(j.get<std::string>(), f));
    } catch (const FieldError& e) {
      throw InputError(ErrorCode::ScalarParse, pointer, pointer + ": " + e.what());
    }
    return out;
  }
  if (!j.is_array()) throw InputError(ErrorCode::Schema, pointer, pointer + ": array expected");
  if (static_cast<Index>(j.size()) != shape[level])
    throw InputError(ErrorCode::Dimension, pointer,
                     pointer + ": dimension mismatch, expected length " + std::to_string(shape[level]) + ", got " +
                         std::to_string(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto part = read_tensor<S>(j[i], pointer + "/" + std::to_string(i), shape, f, level + 1);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

template <class S>
OrderedJson write_tensor(const std::vector<S>& flat, const std::vector<Index>& shape, std::size_t level = 0,
                         std::size_t offset = 0) {
  if (level == shape.size()) return FieldOps<S>::to_string(flat[offset]);
  std::size_t stride = 1;
  for (std::size_t l = level + 1; l < shape.size(); ++l) stride *= static_cast<std::size_t>(shape[l]);
  OrderedJson arr = OrderedJson::array();
  for (Index i = 0; i < shape[level]; ++i)
    arr.push_back(write_tensor<S>(flat, shape, level + 1, offset + static_cast<std::size_t>(i) * stride));
  return arr;
}

template <class S>
Vector<S> read_vector(const Json& obj, const std::string& key, const std::string& pointer, Index n,
                      const FieldSpec& f) {
  auto flat = read_tensor<S>(member(obj, key, pointer), pointer + "/" + key, {n}, f);
  Vector<S> v(n);
  for (Index i = 0; i < n; ++i) v(i) = flat[static_cast<std::size_t>(i)];
  return v;
}

template <class S>
OrderedJson write_vector(const Vector<S>& v) {
  return write_tensor<S>(std::vector<S>(v.data(), v.data() + v.size()), {v.size()});
}

// [r][c] = m(r, c)
template <class S>
Matrix<S> read_rows(const Json& obj, const std::string& key, const std::string& pointer, Index rows, Index cols,
                    const FieldSpec& f) {
  auto flat = read_tensor<S>(member(obj, key, pointer), pointer + "/" + key, {rows, cols}, f);
  Matrix<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = flat[static_cast<std::size_t>(r * cols + c)];
  return m;
}

template <class S>
OrderedJson write_rows(const Matrix<S>& m) {
  std::vector<S> flat;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
  return write_tensor<S>(flat, {m.rows(), m.cols()});
}

// [c][r] = m(r, c): each entry lists the image of one basis vector
template <class S>
Matrix<S> read_columns(const Json& obj, const std::string& key, const std::string& pointer, Index rows, Index cols,
                       const FieldSpec& f) {
  auto flat = read_tensor<S>(member(obj, key, pointer), pointer + "/" + key, {cols, rows}, f);
  Matrix<S> m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = flat[static_cast<std::size_t>(c * rows + r)];
  return m;
}

template <class S>
OrderedJson write_columns(const Matrix<S>& m) {
  return write_rows<S>(Matrix<S>(m.transpose()));
}

// [i][j][k] = coefficient of e_k in e_i e_j
template <class S>
Matrix<S> read_product(const Json& obj, const std::string& key, const std::string& pointer, Index n,
                       const FieldSpec& f) {
  auto flat = read_tensor<S>(member(obj, key, pointer), pointer + "/" + key, {n, n, n}, f);
  Matrix<S> m(n, n * n);
  for (Index c = 0; c < n * n; ++c)
    for (Index k = 0; k < n; ++k) m(k, c) = flat[static_cast<std::size_t>(c * n + k)];
  return m;
}

template <class S>
OrderedJson write_product(const Matrix<S>& m) {
  const Index n = m.rows();
  std::vector<S> flat;
  for (Index c = 0; c < n * n; ++c)
    for (Index k = 0; k < n; ++k) flat.push_back(m(k, c));
  return write_tensor<S>(flat, {n, n, n});
}

// [i][p][q] = coefficient of e_p (x) e_q in Delta(e_i)
template <class S>
Matrix<S> read_coproduct(const Json& obj, const std::string& key, const std::string& pointer, Index n,
                         const FieldSpec& f) {
  auto flat = read_tensor<S>(member(obj, key, pointer), pointer + "/" + key, {n, n, n}, f);
  Matrix<S> m(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index pq = 0; pq < n * n; ++pq) m(pq, i) = flat[static_cast<std::size_t>(i * n * n + pq)];
  return m;
}

template <class S>
OrderedJson write_coproduct(const Matrix<S>& m) {
  const Index n = m.cols();
  std::vector<S> flat;
  for (Index i = 0; i < n; ++i)
    for (Index pq = 0; pq < n * n; ++pq) flat.push_back(m(pq, i));
  return write_tensor<S>(flat, {n, n, n});
}

// [a][b][c] = coefficient of e_a (x) e_b (x) e_c
template <class S>
Vector<S> read_triple(const Json& obj, const std::string& key, const std::string& pointer, Index n,
                      const FieldSpec& f) {
  auto flat = read_tensor<S>(member(obj, key, pointer), pointer + "/" + key, {n, n, n}, f);
  Vector<S> v(n * n * n);
  for (Index i = 0; i < v.size(); ++i) v(i) = flat[static_cast<std::size_t>(i)];
  return v;
}

template <class S>
OrderedJson write_triple(const Vector<S>& v, Index n) {
  return write_tensor<S>(std::vector<S>(v.data(), v.data() + v.size()), {n, n, n});
}

template <class S>
std::vector<Matrix<S>> read_action(const Json& obj, const std::string& pointer, Index n, Index d,
                                   const FieldSpec& f) {
  auto flat = read_tensor<S>(member(obj, "action", pointer), pointer + "/action", {n, d, d}, f);
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < n; ++i) {
    Matrix<S> m(d, d);
    for (Index r = 0; r < d; ++r)
      for (Index c = 0; c < d; ++c) m(r, c) = flat[static_cast<std::size_t>((i * d + r) * d + c)];
    act.push_back(std::move(m));
  }
  return act;
}

template <class S>
OrderedJson write_action(const std::vector<Matrix<S>>& act) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& m : act) arr.push_back(write_rows<S>(m));
  return arr;
}

template <class T, class F>
T wrap_library_errors(F&& build) {
  try {
    return build();
  } catch (const DimensionError& e) {
    throw InputError(ErrorCode::Dimension, "", e.what());
  } catch (const FieldError& e) {
    throw InputError(ErrorCode::Schema, "/field", e.what());
  }
}

}  // namespace detail

template <class S>
QuasiHopfData<S> parse_quasi_hopf_data(const Document& doc) {
  const Json& j = doc.json;
  const FieldSpec& f = doc.field;
  const Index n = detail::read_dim(j, "dim", "");
  QuasiHopfData<S> d;
  d.field = f;
  d.name = doc.name;
  d.dim = n;
  d.mult = detail::read_product<S>(j, "mult", "", n, f);
  d.unit = detail::read_vector<S>(j, "unit", "", n, f);
  d.comult = detail::read_coproduct<S>(j, "comult", "", n, f);
  d.counit = detail::read_vector<S>(j, "counit", "", n, f);
  d.antipode = detail::read_columns<S>(j, "antipode", "", n, n, f);
  d.antipode_inv = detail::read_columns<S>(j, "antipode_inv", "", n, n, f);
  d.phi = detail::read_triple<S>(j, "phi", "", n, f);
  d.phi_inv = detail::read_triple<S>(j, "phi_inv", "", n, f);
  d.alpha = detail::read_vector<S>(j, "alpha", "", n, f);
  d.beta = detail::read_vector<S>(j, "beta", "", n, f);
  return d;
}

template <class S>
AlgebraPtr<S> parse_quasi_hopf(const Document& doc) {
  if (doc.kind != Kind::QuasiHopf) throw InputError(ErrorCode::Schema, "/kind", "quasi_hopf document expected");
  auto d = parse_quasi_hopf_data<S>(doc);
  return detail::wrap_library_errors<AlgebraPtr<S>>([&] { return make_algebra(std::move(d)); });
}

template <class S>
OrderedJson to_json(const QuasiHopfData<S>& d) {
  const Index n = d.dim;
  OrderedJson j;
  j["kind"] = "quasi_hopf";
  j["name"] = d.name;
  j["field"] = field_json(d.field);
  j["dim"] = n;
  j["mult"] = detail::write_product<S>(d.mult);
  j["unit"] = detail::write_vector<S>(d.unit);
  j["comult"] = detail::write_coproduct<S>(d.comult);
  j["counit"] = detail::write_vector<S>(d.counit);
  j["antipode"] = detail::write_columns<S>(d.antipode);
  j["antipode_inv"] = detail::write_columns<S>(d.antipode_inv);
  j["phi"] = detail::write_triple<S>(d.phi, n);
  j["phi_inv"] = detail::write_triple<S>(d.phi_inv, n);
  j["alpha"] = detail::write_vector<S>(d.alpha);
  j["beta"] = detail::write_vector<S>(d.beta);
  return j;
}

template <class S>
HopfAlgebroidData<S> parse_algebroid_data(const Document& doc) {
  const Json& j = doc.json;
  const FieldSpec& f = doc.field;
  const Json& bj = detail::member(j, "base", "");
  if (!bj.is_object()) throw InputError(ErrorCode::Schema, "/base", "/base: object expected");
  const Index r = detail::read_dim(bj, "dim", "/base");
  Matrix<S> bmult = detail::read_product<S>(bj, "mult", "/base", r, f);
  Vector<S> bunit = detail::read_vector<S>(bj, "unit", "/base", r, f);
  const Index n = detail::read_dim(j, "dim", "");
  HopfAlgebroidData<S> d;
  d.field = f;
  d.name = doc.name;
  d.base = BaseRing<S>(f, std::move(bmult), std::move(bunit));
  d.dim = n;
  d.mult = detail::read_product<S>(j, "mult", "", n, f);
  d.unit = detail::read_vector<S>(j, "unit", "", n, f);
  d.s_l = detail::read_columns<S>(j, "s_l", "", n, r, f);
  d.t_l = detail::read_columns<S>(j, "t_l", "", n, r, f);
  d.s_r = detail::read_columns<S>(j, "s_r", "", n, r, f);
  d.t_r = detail::read_columns<S>(j, "t_r", "", n, r, f);
  d.delta_l = detail::read_coproduct<S>(j, "delta_l", "", n, f);
  d.delta_r = detail::read_coproduct<S>(j, "delta_r", "", n, f);
  d.eps_l = detail::read_columns<S>(j, "eps_l", "", r, n, f);
  d.eps_r = detail::read_columns<S>(j, "eps_r", "", r, n, f);
  d.antipode = detail::read_columns<S>(j, "antipode", "", n, n, f);
  d.antipode_inv = detail::read_columns<S>(j, "antipode_inv", "", n, n, f);
  return d;
}

template <class S>
AlgebroidPtr<S> parse_algebroid(const Document& doc) {
  if (doc.kind != Kind::HopfAlgebroid)
    throw InputError(ErrorCode::Schema, "/kind", "hopf_algebroid document expected");
  auto d = detail::wrap_library_errors<HopfAlgebroidData<S>>([&] { return parse_algebroid_data<S>(doc); });
  return detail::wrap_library_errors<AlgebroidPtr<S>>([&] { return make_algebroid(std::move(d)); });
}

template <class S>
OrderedJson to_json(const HopfAlgebroidData<S>& d) {
  OrderedJson j;
  j["kind"] = "hopf_algebroid";
  j["name"] = d.name;
  j["field"] = field_json(d.field);
  OrderedJson b;
  b["dim"] = d.base.dim();
  b["mult"] = detail::write_product<S>(d.base.mult());
  b["unit"] = detail::write_vector<S>(d.base.unit());
  j["base"] = b;
  j["dim"] = d.dim;
  j["mult"] = detail::write_product<S>(d.mult);
  j["unit"] = detail::write_vector<S>(d.unit);
  j["s_l"] = detail::write_columns<S>(d.s_l);
  j["t_l"] = detail::write_columns<S>(d.t_l);
  j["s_r"] = detail::write_columns<S>(d.s_r);
  j["t_r"] = detail::write_columns<S>(d.t_r);
  j["delta_l"] = detail::write_coproduct<S>(d.delta_l);
  j["delta_r"] = detail::write_coproduct<S>(d.delta_r);
  j["eps_l"] = detail::write_columns<S>(d.eps_l);
  j["eps_r"] = detail::write_columns<S>(d.eps_r);
  j["antipode"] = detail::write_columns<S>(d.antipode);
  j["antipode_inv"] = detail::write_columns<S>(d.antipode_inv);
  return j;
}

// Module carried by an object {"dim", "action"} found at pointer.
template <class Mod, class Ptr>
Mod parse_carrier(const Json& obj, const std::string& pointer, const Ptr& parent) {
  using S = ScalarOf<Mod>;
  if (!obj.is_object()) throw InputError(ErrorCode::Schema, pointer, pointer + ": object expected");
  const Index d = detail::read_dim(obj, "dim", pointer);
  auto act = detail::read_action<S>(obj, pointer, parent->dim(), d, parent->field());
  return detail::wrap_library_errors<Mod>([&] { return Mod(parent, std::move(act)); });
}

template <class Mod>
OrderedJson carrier_json(const Mod& M) {
  OrderedJson j;
  j["dim"] = M.dim();
  j["action"] = detail::write_action<ScalarOf<Mod>>(M.action());
  return j;
}

void require_kind(const Document& doc, Kind k);
void require_field(const Document& doc, const FieldSpec& f);

template <class Mod, class Ptr>
Mod parse_module(const Document& doc, const Ptr& parent) {
  require_kind(doc, Kind::Module);
  require_field(doc, parent->field());
  return parse_carrier<Mod>(doc.json, "", parent);
}

template <class Mod, class Ptr>
Contramodule<Mod> parse_contramodule(const Document& doc, const Ptr& parent) {
  using S = ScalarOf<Mod>;
  require_kind(doc, Kind::Contramodule);
  require_field(doc, parent->field());
  const Json& fl = detail::member(doc.json, "flavor", "");
  if (!fl.is_string()) throw InputError(ErrorCode::Schema, "/flavor", "/flavor: string expected");
  Flavor flavor;
  try {
    flavor = parse_flavor(fl.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(ErrorCode::Schema, "/flavor", e.what());
  }
  Mod M = parse_carrier<Mod>(detail::member(doc.json, "module", ""), "/module", parent);
  const Index dm = M.dim(), n = parent->dim();
  auto flat = detail::read_tensor<S>(detail::member(doc.json, "mu", ""), "/mu", {dm, dm, n}, parent->field());
  Matrix<S> mu(dm, dm * n);
  for (Index i = 0; i < dm; ++i)
    for (Index c = 0; c < dm * n; ++c) mu(i, c) = flat[static_cast<std::size_t>(i * dm * n + c)];
  try {
    return Contramodule<Mod>(std::move(M), std::move(mu), flavor);
  } catch (const FlavorError& e) {
    throw InputError(ErrorCode::Incompatible, "/flavor", e.what());
  }
}

// [i][j][a] = component i of mu(e_a -> m_j)
template <class Mod>
OrderedJson to_json(const Contramodule<Mod>& C, const std::string& name, const OrderedJson& algebra_ref) {
  using S = ScalarOf<Mod>;
  const Index dm = C.dim(), n = C.algebra_dim();
  OrderedJson j;
  j["kind"] = "contramodule";
  j["name"] = name;
  j["field"] = field_json(C.carrier().algebra().field());
  j["algebra"] = algebra_ref;
  j["flavor"] = flavor_key(C.flavor());
  j["module"] = carrier_json(C.carrier());
  std::vector<S> flat;
  for (Index i = 0; i < dm; ++i)
    for (Index c = 0; c < dm * n; ++c) flat.push_back(C.mu()(i, c));
  j["mu"] = detail::write_tensor<S>(flat, {dm, dm, n});
  return j;
}

template <class Mod>
OrderedJson to_json(const Mod& M, const std::string& name, const OrderedJson& algebra_ref) {
  OrderedJson j;
  j["kind"] = "module";
  j["name"] = name;
  j["field"] = field_json(M.algebra().field());
  j["algebra"] = algebra_ref;
  const OrderedJson carrier = carrier_json(M);
  for (const auto& [k, v] : carrier.items()) j[k] = v;
  return j;
}

template <class Mod, class Ptr>
ModuleAlgebra<Mod> parse_module_algebra(const Document& doc, const Ptr& parent) {
  using S = ScalarOf<Mod>;
  require_kind(doc, Kind::ModuleAlgebra);
  require_field(doc, parent->field());
  Mod X = parse_carrier<Mod>(detail::member(doc.json, "module", ""), "/module", parent);
  const Index xx = detail::wrap_library_errors<Index>([&] { return tensor(X, X).dim(); });
  const Index u = unit_object(X).dim();
  Matrix<S> mult = detail::read_rows<S>(doc.json, "mult", "", X.dim(), xx, parent->field());
  Matrix<S> unit = detail::read_rows<S>(doc.json, "unit", "", X.dim(), u, parent->field());
  return {std::move(X), std::move(mult), std::move(unit)};
}

template <class Mod>
OrderedJson to_json(const ModuleAlgebra<Mod>& A, const std::string& name, const OrderedJson& algebra_ref) {
  using S = ScalarOf<Mod>;
  OrderedJson j;
  j["kind"] = "module_algebra";
  j["name"] = name;
  j["field"] = field_json(A.carrier.algebra().field());
  j["algebra"] = algebra_ref;
  j["module"] = carrier_json(A.carrier);
  j["mult"] = detail::write_rows<S>(A.mult);
  j["unit"] = detail::write_rows<S>(A.unit);
  return j;
}

// Inline copy of a document, as embedded in dependent files.
OrderedJson ordered(const Json& j);

}  // namespace qha::io
