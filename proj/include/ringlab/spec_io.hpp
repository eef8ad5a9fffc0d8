#pragma once

/**
 * @file spec_io.hpp
 * @brief Reading and writing ring-spec documents.
 *
 * A ring-spec is a JSON object, either raw tables
 *
 *   {"kind":"tables", "order":N, "add":[[...]], "mul":[[...]], "zero":i, "one":j,
 *    "involution": ...}
 *
 * or a construction
 *
 *   {"ring":{"kind":"upper_triangular","base":{"kind":"zn","n":2},"k":2},
 *    "involution":"antidiagonal"}
 *
 * The involution is "identity" | "swap" | "transpose" | "antidiagonal" |
 * "frobenius" | {"kind":"table","map":[...]} | {"kind":"transpose","base":...}
 * and defaults to "identity". A corpus file holds a JSON array of specs, an
 * object {"corpus":[...]}, or one spec per line.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/constructions.hpp"

namespace ringlab {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& ex) {
    throw SpecParseError(std::string("field \"") + key + "\": " + ex.what());
  }
}

}  // namespace detail

inline RingExpr ring_expr_from_json(const Json& j) {
  using detail::get_as;
  const auto kind = get_as<std::string>(j, "kind");
  if (kind == "zn") return RingExpr::zn(get_as<unsigned>(j, "n"));
  if (kind == "gf4") return RingExpr::gf4();
  if (kind == "matrix") return RingExpr::matrix(ring_expr_from_json(detail::field(j, "base")), get_as<unsigned>(j, "k"));
  if (kind == "upper_triangular")
    return RingExpr::upper_triangular(ring_expr_from_json(detail::field(j, "base")), get_as<unsigned>(j, "k"));
  if (kind == "product")
    return RingExpr::product(ring_expr_from_json(detail::field(j, "left")),
                             ring_expr_from_json(detail::field(j, "right")));
  if (kind == "zero_pairing") return RingExpr::zero_pairing(ring_expr_from_json(detail::field(j, "base")));
  if (kind == "tables") {
    auto add = get_as<Table>(j, "add");
    auto mul = get_as<Table>(j, "mul");
    if (j.contains("order") && get_as<std::size_t>(j, "order") != add.size())
      throw SpecParseError("order does not match table size");
    const std::string label = j.contains("label") ? get_as<std::string>(j, "label") : "tables";
    return RingExpr::tables(std::move(add), std::move(mul), get_as<std::uint32_t>(j, "zero"),
                            get_as<std::uint32_t>(j, "one"), label);
  }
  throw SpecParseError("unknown ring kind \"" + kind + "\"");
}

inline InvExpr inv_expr_from_json(const Json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "identity") return InvExpr::identity();
    if (name == "swap") return InvExpr::swap();
    if (name == "transpose") return InvExpr::transpose();
    if (name == "antidiagonal") return InvExpr::antidiagonal();
    if (name == "frobenius") return InvExpr::frobenius();
    throw SpecParseError("unknown involution \"" + name + "\"");
  }
  const auto kind = detail::get_as<std::string>(j, "kind");
  if (kind == "table") {
    const std::string label = j.contains("label") ? detail::get_as<std::string>(j, "label") : "table";
    return InvExpr::table(detail::get_as<std::vector<std::uint32_t>>(j, "map"), label);
  }
  if (kind == "transpose")
    return j.contains("base") ? InvExpr::transpose(inv_expr_from_json(j.at("base"))) : InvExpr::transpose();
  return inv_expr_from_json(Json(kind));
}

inline StarSpec star_spec_from_json(const Json& j) {
  if (!j.is_object()) throw SpecParseError("ring-spec must be an object");
  StarSpec spec;
  spec.ring = j.contains("ring") ? ring_expr_from_json(j.at("ring")) : ring_expr_from_json(j);
  spec.involution = j.contains("involution") ? inv_expr_from_json(j.at("involution")) : InvExpr::identity();
  return spec;
}

inline Json to_json(const RingExpr& e) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::Zn: return {{"kind", "zn"}, {"n", e.n}};
    case K::GF4: return {{"kind", "gf4"}};
    case K::Matrix: return {{"kind", "matrix"}, {"base", to_json(*e.base)}, {"k", e.k}};
    case K::UpperTriangular: return {{"kind", "upper_triangular"}, {"base", to_json(*e.base)}, {"k", e.k}};
    case K::Product: return {{"kind", "product"}, {"left", to_json(*e.left)}, {"right", to_json(*e.right)}};
    case K::ZeroPairing: return {{"kind", "zero_pairing"}, {"base", to_json(*e.base)}};
    case K::Tables:
      return {{"kind", "tables"}, {"order", e.add.size()}, {"add", e.add}, {"mul", e.mul},
              {"zero", e.zero},   {"one", e.one},          {"label", e.tables_label}};
  }
  throw std::logic_error("unknown ring kind");
}

inline Json to_json(const InvExpr& e) {
  using K = InvExpr::Kind;
  switch (e.kind) {
    case K::Table: return {{"kind", "table"}, {"map", e.map}, {"label", e.table_label}};
    case K::Transpose:
      if (e.base && e.base->kind != K::Identity) return {{"kind", "transpose"}, {"base", to_json(*e.base)}};
      return "transpose";
    default: return e.label();
  }
}

inline Json to_json(const StarSpec& s) { return {{"ring", to_json(s.ring)}, {"involution", to_json(s.involution)}}; }

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw SpecParseError(origin + ": " + ex.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline StarSpec read_spec_file(const std::string& path) {
  return star_spec_from_json(parse_json_text(read_text_file(path), path));
}

/// Specs from a corpus file: array, {"corpus": [...]}, or one spec per line.
inline std::vector<StarSpec> read_corpus_file(const std::string& path) {
  const std::string text = read_text_file(path);
  std::vector<StarSpec> out;
  auto take_array = [&](const Json& arr) {
    for (const auto& item : arr) out.push_back(star_spec_from_json(item));
  };
  Json whole;
  bool parsed = true;
  try {
    whole = Json::parse(text);
  } catch (const Json::parse_error&) {
    parsed = false;
  }
  if (parsed) {
    if (whole.is_array()) take_array(whole);
    else if (whole.is_object() && whole.contains("corpus")) take_array(whole.at("corpus"));
    else out.push_back(star_spec_from_json(whole));
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(star_spec_from_json(parse_json_text(line, path + ":" + std::to_string(number))));
  }
  return out;
}

/// Short forms used on the command line: "zn:N[:INV]", "gf4[:INV]", inline
/// JSON, or a path to a spec file.
inline StarSpec parse_spec_argument(const std::string& text) {
  if (!text.empty() && text.front() == '{') return star_spec_from_json(parse_json_text(text, "argument"));
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto involution = [&](std::size_t at) {
    return parts.size() > at ? inv_expr_from_json(Json(parts[at])) : InvExpr::identity();
  };
  if (!parts.empty() && parts[0] == "zn") {
    if (parts.size() < 2) throw SpecParseError("zn needs a modulus, e.g. zn:2");
    try {
      return StarSpec{RingExpr::zn(static_cast<unsigned>(std::stoul(parts[1]))), involution(2)};
    } catch (const std::logic_error&) {
      throw SpecParseError("bad modulus in " + text);
    }
  }
  if (!parts.empty() && parts[0] == "gf4") return StarSpec{RingExpr::gf4(), involution(1)};
  return read_spec_file(text);
}

}  // namespace ringlab
