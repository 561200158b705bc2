#include "sgconj/io.hpp"

#include <algorithm>

#include "sgconj/green.hpp"

namespace sgconj {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> int_table(const json& j, const char* what) {
  if (!j.is_array()) throw_format(std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw_format(std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw_format(std::string(what) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

int required_degree(const json& j) {
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw_format("missing integer \"degree\"");
  int deg = j["degree"].get<int>();
  if (deg < 1) throw_format("degree must be >= 1");
  return deg;
}

}  // namespace

Semigroup semigroup_from_json(const json& j, int cap) {
  if (!j.is_object()) throw_format("semigroup JSON must be an object");

  if (j.contains("table")) {
    return Semigroup::from_table(int_table(j["table"], "table"));
  }

  if (j.contains("transformations")) {
    int deg = required_degree(j);
    std::vector<Transformation> gens;
    for (auto& row : int_table(j["transformations"], "transformations")) {
      if (static_cast<int>(row.size()) != deg)
        throw_format("transformation length differs from degree");
      gens.push_back(Transformation::checked(std::move(row)));
    }
    return close_generators(gens, cap);
  }

  if (j.contains("partial_injections")) {
    int deg = required_degree(j);
    const json& arr = j["partial_injections"];
    if (!arr.is_array()) throw_format("partial_injections must be an array");
    std::vector<PartialInjection> gens;
    for (const auto& row : arr) {
      if (!row.is_array() || static_cast<int>(row.size()) != deg)
        throw_format("partial injection length differs from degree");
      std::vector<int> img;
      for (const auto& v : row) {
        if (v.is_null())
          img.push_back(PartialInjection::kUndefined);
        else if (v.is_number_integer())
          img.push_back(v.get<int>());
        else
          throw_format("partial injection entries must be integers or null");
      }
      gens.push_back(PartialInjection::checked(std::move(img)));
    }
    return close_generators(gens, cap);
  }

  if (j.contains("matrices")) {
    if (!j.contains("q") || !j["q"].is_number_integer())
      throw_format("matrix generators need an integer \"q\"");
    long q = j["q"].get<long>();
    const GfField& f = GfField::get(q);
    if (!j["matrices"].is_array()) throw_format("matrices must be an array");
    std::vector<GfMat> gens;
    for (const auto& mj : j["matrices"]) {
      auto rows = int_table(mj, "matrix");
      int n = static_cast<int>(rows.size());
      GfMat m(f, n, n);
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
          throw_format("matrix generators must be square");
        for (int k = 0; k < n; ++k) {
          if (rows[i][k] < 0 || rows[i][k] >= q)
            throw_format("matrix entry is not an F_q element code");
          m.at(i, k) = static_cast<GfElem>(rows[i][k]);
        }
      }
      gens.push_back(std::move(m));
    }
    return close_generators(gens, cap);
  }

  throw_format(
      "semigroup JSON needs one of: table, transformations, "
      "partial_injections, matrices");
}

json semigroup_to_json(const Semigroup& S) {
  json out;
  if (!S.provenance()) {
    json table = json::array();
    for (int a = 0; a < S.size(); ++a) {
      json row = json::array();
      for (int b = 0; b < S.size(); ++b) row.push_back(S.product(a, b));
      table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
    return out;
  }

  const Provenance& prov = *S.provenance();
  if (const auto* tr = std::get_if<std::vector<Transformation>>(&prov.elements)) {
    json arr = json::array();
    for (const auto& t : *tr) arr.push_back(t.img);
    out["transformations"] = std::move(arr);
    out["degree"] = (*tr)[0].degree();
  } else if (const auto* pi =
                 std::get_if<std::vector<PartialInjection>>(&prov.elements)) {
    json arr = json::array();
    for (const auto& t : *pi) {
      json row = json::array();
      for (int v : t.img) {
        if (v == PartialInjection::kUndefined)
          row.push_back(nullptr);
        else
          row.push_back(v);
      }
      arr.push_back(std::move(row));
    }
    out["partial_injections"] = std::move(arr);
    out["degree"] = (*pi)[0].degree();
  } else {
    const auto& mats = std::get<std::vector<GfMat>>(prov.elements);
    json arr = json::array();
    for (const auto& m : mats) {
      json rows = json::array();
      for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols; ++k) row.push_back(static_cast<int>(m.at(i, k)));
        rows.push_back(std::move(row));
      }
      arr.push_back(std::move(rows));
    }
    out["matrices"] = std::move(arr);
    out["q"] = mats[0].f->q();
  }
  return out;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("entries"))
    throw_format("matrix JSON needs \"field\" and \"entries\"");
  std::string field = j["field"].get<std::string>();
  const json& entries = j["entries"];
  if (!entries.is_array()) throw_format("entries must be an array");

  if (field == "Q") {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : entries) {
      if (!row.is_array()) throw_format("entries rows must be arrays");
      std::vector<Rational> r;
      for (const auto& v : row) {
        if (v.is_number_integer())
          r.emplace_back(v.get<long>());
        else if (v.is_string())
          r.push_back(parse_rational(v.get<std::string>()));
        else
          throw_format("rational entries must be integers or \"a/b\" strings");
      }
      rows.push_back(std::move(r));
    }
    return rational_matrix(rows);
  }
  if (field.size() > 1 && field[0] == 'F') {
    long q = 0;
    for (std::size_t i = 1; i < field.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(field[i])))
        throw_format("bad matrix field: " + field);
      q = q * 10 + (field[i] - '0');
    }
    return gf_matrix(q, int_table(entries, "entries"));
  }
  throw_format("matrix field must be \"Q\" or \"F<q>\"");
}

json matrix_to_json(const ExactMatrix& M) {
  json out;
  out["field"] = M.field_name();
  json rows = json::array();
  if (M.is_rational()) {
    const auto& m = std::get<Mat<QField>>(M.m);
    for (int i = 0; i < m.rows; ++i) {
      json row = json::array();
      for (int k = 0; k < m.cols; ++k) row.push_back(format_rational(m.at(i, k)));
      rows.push_back(std::move(row));
    }
  } else {
    const auto& m = std::get<Mat<GfField>>(M.m);
    for (int i = 0; i < m.rows; ++i) {
      json row = json::array();
      for (int k = 0; k < m.cols; ++k) row.push_back(static_cast<int>(m.at(i, k)));
      rows.push_back(std::move(row));
    }
  }
  out["entries"] = std::move(rows);
  return out;
}

json verdict_to_json(const ConjugacyVerdict& v) {
  json out;
  out["result"] = v.result;
  if (v.witness) {
    json w;
    w["x"] = v.witness->x;
    w["x_prime"] = v.witness->x_prime;
    if (v.witness->j) w["j"] = *v.witness->j;
    out["witness"] = std::move(w);
  }
  if (v.failed_condition)
    out["failed_condition"] = failed_condition_name(*v.failed_condition);
  json ev;
  if (v.evidence.failing_k) ev["failing_k"] = *v.evidence.failing_k;
  if (v.evidence.j_class_s) ev["j_class_s"] = *v.evidence.j_class_s;
  if (v.evidence.j_class_t) ev["j_class_t"] = *v.evidence.j_class_t;
  if (v.evidence.modulus) ev["modulus"] = *v.evidence.modulus;
  if (!v.evidence.note.empty()) ev["note"] = v.evidence.note;
  if (!ev.empty()) out["evidence"] = std::move(ev);
  return out;
}

json partition_to_json(const Partition& p) {
  json out;
  out["count"] = p.classes.size();
  out["classes"] = p.classes;
  return out;
}

json info_to_json(const Semigroup& S, bool pretty_elements) {
  GreenClasses green = green_classes(S);
  json out;
  out["size"] = S.size();
  out["n_j_classes"] = green.n_j();
  out["n_r_classes"] = green.n_r();
  out["n_l_classes"] = green.n_l();
  out["n_h_classes"] = green.n_h();

  int idempotents = 0;
  for (int s = 0; s < S.size(); ++s)
    if (S.is_idempotent(s)) ++idempotents;
  out["n_idempotents"] = idempotents;

  auto members = green.j_class_members();
  json jcls = json::array();
  for (int label = 0; label < green.n_j(); ++label) {
    json c;
    c["label"] = label;
    c["size"] = members[label].size();
    c["representative"] = members[label].front();
    std::vector<bool> rs(green.n_r(), false), ls(green.n_l(), false);
    int nr = 0, nl = 0, idem = 0;
    ElementId first_idem = -1;
    for (ElementId e : members[label]) {
      if (!rs[green.r_of(e)]) {
        rs[green.r_of(e)] = true;
        ++nr;
      }
      if (!ls[green.l_of(e)]) {
        ls[green.l_of(e)] = true;
        ++nl;
      }
      if (S.is_idempotent(e)) {
        ++idem;
        if (first_idem < 0) first_idem = e;
      }
    }
    c["n_r_classes"] = nr;
    c["n_l_classes"] = nl;
    c["n_idempotents"] = idem;
    if (first_idem >= 0)
      c["max_subgroup_order"] =
          maximal_subgroup(S, green, first_idem).elements.size();
    else
      c["max_subgroup_order"] = nullptr;
    jcls.push_back(std::move(c));
  }
  out["j_classes"] = std::move(jcls);

  json leq = json::array();
  for (int a = 0; a < green.n_j(); ++a)
    for (int b = 0; b < green.n_j(); ++b)
      if (a != b && green.j_leq(a, b)) leq.push_back(json::array({a, b}));
  out["j_order_leq"] = std::move(leq);

  if (pretty_elements && S.provenance()) {
    json rendered = json::array();
    const Provenance& prov = *S.provenance();
    if (const auto* tr = std::get_if<std::vector<Transformation>>(&prov.elements)) {
      for (const auto& t : *tr) rendered.push_back(one_line(t));
    } else if (const auto* pi =
                   std::get_if<std::vector<PartialInjection>>(&prov.elements)) {
      for (const auto& t : *pi) rendered.push_back(one_line(t));
    }
    if (!rendered.empty()) out["elements_pretty"] = std::move(rendered);
  }
  return out;
}

std::optional<std::string> element_pretty(const Semigroup& S, ElementId s) {
  if (!S.provenance()) return std::nullopt;
  const Provenance& prov = *S.provenance();
  if (const auto* tr = std::get_if<std::vector<Transformation>>(&prov.elements))
    return one_line((*tr)[s]);
  if (const auto* pi = std::get_if<std::vector<PartialInjection>>(&prov.elements))
    return one_line((*pi)[s]);
  return std::nullopt;
}

}  // namespace sgconj
