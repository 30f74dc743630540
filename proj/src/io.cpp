#include "qha/io.hpp"

#include <fstream>
#include <sstream>

namespace qha::io {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Io: return "E_IO";
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::Schema: return "E_SCHEMA";
    case ErrorCode::NonPrime: return "E_NONPRIME";
    case ErrorCode::Dimension: return "E_DIMENSION";
    case ErrorCode::ScalarParse: return "E_SCALAR";
    case ErrorCode::Incompatible: return "E_INCOMPATIBLE";
    case ErrorCode::Usage: return "E_USAGE";
    case ErrorCode::Limit: return "E_LIMIT";
  }
  return "E_UNKNOWN";
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::QuasiHopf: return "quasi_hopf";
    case Kind::HopfAlgebroid: return "hopf_algebroid";
    case Kind::Module: return "module";
    case Kind::Contramodule: return "contramodule";
    case Kind::ModuleAlgebra: return "module_algebra";
  }
  return "unknown";
}

Kind parse_kind(const Json& doc) {
  const Json& k = detail::member(doc, "kind", "");
  if (!k.is_string()) throw InputError(ErrorCode::Schema, "/kind", "/kind: string expected");
  const auto s = k.get<std::string>();
  for (Kind c : {Kind::QuasiHopf, Kind::HopfAlgebroid, Kind::Module, Kind::Contramodule, Kind::ModuleAlgebra})
    if (s == kind_name(c)) return c;
  throw InputError(ErrorCode::Schema, "/kind", "/kind: unknown kind '" + s + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string canonical(const Json& j) { return j.dump(); }

std::string content_hash(const Json& j) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a64(canonical(j));
  return os.str();
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(ErrorCode::Io, "", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Document document_from_json(Json j, std::string file, std::filesystem::path dir) {
  if (!j.is_object()) throw InputError(ErrorCode::Schema, "", "top level must be an object");
  Document doc;
  doc.kind = parse_kind(j);
  doc.field = parse_field(detail::member(j, "field", ""), "/field");
  doc.name = detail::read_name(j);
  doc.hash = content_hash(j);
  doc.json = std::move(j);
  doc.file = std::move(file);
  doc.dir = std::move(dir);
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(ErrorCode::Syntax, line_column(text, e.byte),
                     path.filename().string() + ": " + line_column(text, e.byte) + ": malformed JSON");
  }
  return document_from_json(std::move(j), path.filename().string(), path.parent_path());
}

bool has_algebra_reference(const Document& doc) { return doc.json.contains("algebra"); }

Document referenced_algebra(const Document& doc) {
  const Json& a = detail::member(doc.json, "algebra", "");
  if (a.is_string()) {
    std::filesystem::path p = a.get<std::string>();
    if (p.is_relative()) p = doc.dir / p;
    return load_document(p);
  }
  if (a.is_object()) {
    try {
      return document_from_json(a, doc.file + "#/algebra", doc.dir);
    } catch (const InputError& e) {
      throw InputError(e.code(), "/algebra" + e.pointer(), std::string("/algebra: ") + e.what());
    }
  }
  throw InputError(ErrorCode::Schema, "/algebra", "/algebra: path or object expected");
}

FieldSpec parse_field(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw InputError(ErrorCode::Schema, pointer, pointer + ": object expected");
  const Json& t = detail::member(j, "type", pointer);
  if (!t.is_string()) throw InputError(ErrorCode::Schema, pointer + "/type", pointer + "/type: string expected");
  const auto type = t.get<std::string>();
  if (type == "Q") return FieldSpec::rationals();
  if (type != "GFp")
    throw InputError(ErrorCode::Schema, pointer + "/type", pointer + "/type: expected \"Q\" or \"GFp\"");
  const Json& p = detail::member(j, "p", pointer);
  if (!p.is_number_unsigned())
    throw InputError(ErrorCode::Schema, pointer + "/p", pointer + "/p: positive integer expected");
  try {
    return FieldSpec::prime_field(p.get<std::uint64_t>());
  } catch (const FieldError& e) {
    throw InputError(ErrorCode::NonPrime, pointer + "/p", e.what());
  }
}

OrderedJson field_json(const FieldSpec& f) {
  OrderedJson j;
  if (f.is_prime_field()) {
    j["type"] = "GFp";
    j["p"] = f.characteristic;
  } else {
    j["type"] = "Q";
  }
  return j;
}

Flavor parse_flavor(const std::string& s) {
  for (Flavor f : {Flavor::HopfMu, Flavor::QuasiTypeI, Flavor::QuasiTypeII, Flavor::AlgebroidMu})
    if (s == flavor_key(f)) return f;
  throw std::invalid_argument("unknown flavor '" + s + "' (hopf, typeI, typeII, algebroid)");
}

const char* flavor_key(Flavor f) {
  switch (f) {
    case Flavor::HopfMu: return "hopf";
    case Flavor::QuasiTypeI: return "typeI";
    case Flavor::QuasiTypeII: return "typeII";
    case Flavor::AlgebroidMu: return "algebroid";
  }
  return "unknown";
}

std::string dump(const OrderedJson& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(ErrorCode::Io, "", "cannot write " + path.string());
  out << text;
  if (!out) throw InputError(ErrorCode::Io, "", "write failed for " + path.string());
}

OrderedJson ordered(const Json& j) { return OrderedJson::parse(j.dump()); }

void require_kind(const Document& doc, Kind k) {
  if (doc.kind != k)
    throw InputError(ErrorCode::Schema, "/kind",
                     doc.file + ": expected kind " + kind_name(k) + ", got " + kind_name(doc.kind));
}

void require_field(const Document& doc, const FieldSpec& f) {
  if (!(doc.field == f))
    throw InputError(ErrorCode::Schema, "/field",
                     doc.file + ": field " + doc.field.name() + " differs from the algebra's " + f.name());
}

namespace detail {

const Json& member(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object() || !obj.contains(key))
    throw InputError(ErrorCode::Schema, pointer + "/" + key, pointer + "/" + key + ": required member missing");
  return obj.at(key);
}

Index read_dim(const Json& obj, const std::string& key, const std::string& pointer) {
  const Json& v = member(obj, key, pointer);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 || v.get<std::uint64_t>() > 1000000)
    throw InputError(ErrorCode::Schema, pointer + "/" + key, pointer + "/" + key + ": positive integer expected");
  return static_cast<Index>(v.get<std::uint64_t>());
}

std::string read_name(const Json& obj) {
  if (!obj.contains("name")) return "";
  if (!obj.at("name").is_string()) throw InputError(ErrorCode::Schema, "/name", "/name: string expected");
  return obj.at("name").get<std::string>();
}

}  // namespace detail

}  // namespace qha::io
