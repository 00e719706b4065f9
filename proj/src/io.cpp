#include "leibniz/io.hpp"

#include <fstream>
#include <set>

#include "leibniz/form.hpp"

namespace leibniz {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
  }
  parse_fail(where, "expected an integer or a \"num/den\" string");
}

Json series_to_json(const SeriesChain& chain) {
  Json terms = Json::array();
  for (const auto& t : chain.terms) terms.push_back(subspace_to_json(t));
  Json dims = Json::array();
  for (const auto& t : chain.terms) dims.push_back(t.dim());
  return Json{{"dims", dims}, {"stabilized", chain.stabilized}, {"terms", terms}};
}

}  // namespace

FieldSpec field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "rationals") return FieldSpec::rationals();
  if (j.is_object() && j.contains("prime") && j.at("prime").is_number_integer()) {
    const auto p = j.at("prime").get<std::int64_t>();
    if (p <= 0) parse_fail("field.prime", "must be a positive prime");
    try {
      return FieldSpec::prime(static_cast<std::uint64_t>(p));
    } catch (const Error& e) {
      parse_fail("field.prime", e.what());
    }
  }
  parse_fail("field", "expected {\"prime\": p} or \"rationals\"");
}

Json field_to_json(const FieldSpec& f) {
  if (f.is_finite()) return Json{{"prime", f.characteristic()}};
  return "rationals";
}

AlgebraFile parse_algebra(const Json& j) {
  if (!j.is_object()) parse_fail("<root>", "expected an object");
  if (!j.contains("field")) parse_fail("field", "missing");
  const auto f = field_from_json(j.at("field"));
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<std::int64_t>() < 1) {
    parse_fail("dim", "expected a positive integer");
  }
  const auto n = j.at("dim").get<std::size_t>();
  StructureConstants c(f, n);
  const auto constants = j.value("constants", Json::array());
  if (!constants.is_array()) parse_fail("constants", "expected an array");
  for (std::size_t e = 0; e < constants.size(); ++e) {
    const auto where = "constants[" + std::to_string(e) + "]";
    const auto& entry = constants[e];
    if (!entry.is_array() || entry.size() != 4) parse_fail(where, "expected [i, j, k, scalar]");
    std::size_t idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!entry[t].is_number_integer()) parse_fail(where, "indices must be integers");
      const auto v = entry[t].get<std::int64_t>();
      if (v < 1 || v > static_cast<std::int64_t>(n)) {
        parse_fail(where, "index " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      }
      idx[t] = static_cast<std::size_t>(v - 1);
    }
    c.set(idx[0], idx[1], idx[2], c(idx[0], idx[1], idx[2]) + scalar_from_json(f, entry[3], where));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (!l.is_array() || l.size() != n) parse_fail("labels", "expected " + std::to_string(n) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) parse_fail("labels", "expected strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return {std::move(c), std::move(labels)};
}

AlgebraFile read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path.string() + ": cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  try {
    return parse_algebra(j);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

Json algebra_to_json(const Algebra& a) {
  Json constants = Json::array();
  const auto n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = a.constants()(i, j, k);
        if (!c.is_zero()) constants.push_back(Json{i + 1, j + 1, k + 1, c.to_string()});
      }
    }
  }
  return Json{{"field", field_to_json(a.field())},
              {"dim", n},
              {"constants", constants},
              {"labels", a.labels()}};
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& row : s.basis()) out.push_back(vector_to_json(row));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Json map_to_json(const LinearMap& f) {
  Json out = Json::array();
  for (std::size_t c = 0; c < f.dim(); ++c) out.push_back(vector_to_json(f.image_of_basis(c)));
  return out;
}

std::optional<Scalar> lei4_lambda(const Algebra& a) {
  if (a.dim() != 3) return std::nullopt;
  const auto& c = a.constants();
  const auto lambda = c(1, 1, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        const bool a11 = i == 0 && j == 0 && k == 2;
        const bool a22 = i == 1 && j == 1 && k == 2;
        if (a11 && !c(i, j, k).is_one()) return std::nullopt;
        if (!a11 && !a22 && !c(i, j, k).is_zero()) return std::nullopt;
      }
    }
  }
  if (lambda.is_zero()) return std::nullopt;
  return lambda;
}

Json check_results(const std::vector<LeibnizViolation>& violations) {
  Json list = Json::array();
  for (const auto& v : violations) {
    list.push_back(Json{{"triple", {v.i + 1, v.j + 1, v.k + 1}},
                        {"lhs", vector_to_json(v.lhs)},
                        {"rhs", vector_to_json(v.rhs)}});
  }
  return Json{{"left_leibniz", violations.empty() ? "pass" : "fail"}, {"violations", list}};
}

Json invariants_results(const Algebra& a) {
  const auto c = centers(a);
  const auto cls = nilpotency_class(a);
  return Json{{"field", field_to_json(a.field())},
              {"dim", a.dim()},
              {"labels", a.labels()},
              {"leibniz_kernel", subspace_to_json(leibniz_kernel(a))},
              {"derived_ideal", subspace_to_json(derived_ideal(a))},
              {"left_center", subspace_to_json(c.left)},
              {"right_center", subspace_to_json(c.right)},
              {"center", subspace_to_json(c.two_sided)},
              {"upper_central_series", series_to_json(upper_central_series(a))},
              {"lower_central_series", series_to_json(lower_central_series(a))},
              {"nilpotency_class", cls ? Json(*cls) : Json(nullptr)},
              {"extraspecial", is_extraspecial(a)}};
}

Json enumeration_results(const AutSet& s, bool list_elements) {
  Json out{{"order", s.size()}};
  if (list_elements) {
    Json elems = Json::array();
    for (const auto& f : s) elems.push_back(map_to_json(f));
    out["elements"] = elems;
  }
  return out;
}

Json theorem1_results(const Theorem1Report& r, bool list_differences) {
  const auto& c = r.comparison;
  Json out{{"predicted_order", c.predicted_order},
           {"predicted_family_size", c.predicted_family_size},
           {"predicted_order_consistent", r.predicted_order_consistent},
           {"enumerated_order", c.enumerated_order},
           {"equal", c.equal},
           {"missing_count", c.missing.size()},
           {"extra_count", c.extra.size()},
           {"reducible_flag", c.reducible_flag},
           {"kernel_size", r.quotient.kernel_size},
           {"kernel_equals_centralizer", r.quotient.kernel_matches_centralizer},
           {"image_size", r.quotient.image_size},
           {"image_matches_blocks", r.quotient.image_matches_blocks},
           {"upsilon_multiplicative", r.quotient.multiplicative},
           {"upsilon_pairs_checked", r.quotient.pairs_checked},
           {"upsilon_exhaustive", r.quotient.exhaustive},
           {"family_closed", r.family_closed},
           {"closure_pairs_checked", r.closure_pairs_checked},
           {"det_identity", r.det_identity ? "pass" : "fail"}};
  if (list_differences) {
    Json missing = Json::array();
    for (const auto& f : c.missing) missing.push_back(map_to_json(f));
    Json extra = Json::array();
    for (const auto& f : c.extra) extra.push_back(map_to_json(f));
    out["missing"] = missing;
    out["extra"] = extra;
  }
  return out;
}

Json form_results(const Algebra& a, const Vector& generator) {
  const auto phi = induced_form(a, generator);
  Json basis = Json::array();
  for (auto c : phi.quotient_basis) basis.push_back(a.labels()[c]);
  Json out{{"generator", vector_to_json(phi.generator)},
           {"quotient_basis", basis},
           {"gram", matrix_to_json(phi.gram)}};
  if (a.field().is_finite()) {
    EnumerationOptions options;
    options.guard = default_guard();
    const auto group = enumerate_automorphisms(a, options);
    const auto z = centers(a).two_sided;
    std::set<Matrix> induced;
    std::size_t preserving = 0;
    std::size_t scaling = 0;
    for (const auto& f : group) {
      const auto g = induced_quotient_map(f, z);
      if (!induced.insert(g.matrix()).second) continue;
      if (preserves_form(g, phi)) ++preserving;
      if (similitude_factor(g, phi)) ++scaling;
    }
    out["automorphism_count"] = group.size();
    out["induced_map_count"] = induced.size();
    out["induced_maps_preserving_form"] = preserving;
    out["induced_maps_scaling_form"] = scaling;
  }
  return out;
}

Json make_report(const Json& command, Json results) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"results", std::move(results)}};
}

}  // namespace leibniz
