#include "ncrs/json_io.hpp"

#include <json.hpp>

namespace ncrs {

namespace {

using json = nlohmann::ordered_json;

json field_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "Q"}};
  return {{"kind", "Fp"}, {"p", f.characteristic()}};
}

json vector_json(const Vector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("presentation json: " + what); }

Scalar scalar(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_string()) bad("scalars must be strings");
  auto s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return f.parse(s);
  auto d = f.parse(s.substr(slash + 1));
  if (d.is_zero()) bad("zero denominator in '" + s + "'");
  return f.parse(s.substr(0, slash)) / d;
}

Vector vector(const Field& f, const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) bad(std::string(what) + " must be an array of length " + std::to_string(n));
  Vector v;
  for (const auto& x : j) v.push_back(scalar(f, x));
  return v;
}

}  // namespace

std::string to_json(const LinearPresentation& A) {
  json j;
  j["field"] = field_json(A.field());
  j["alphabet"] = A.alphabet().names();
  j["dim"] = A.dim();
  j["initial"] = vector_json(A.initial());
  j["final"] = vector_json(A.final());
  json m = json::object();
  for (std::size_t x = 0; x < A.letters(); ++x) {
    json rows = json::array();
    for (std::size_t r = 0; r < A.dim(); ++r) {
      auto row = A.matrix(x).row(r);
      rows.push_back(vector_json(Vector(row.begin(), row.end())));
    }
    m[A.alphabet().name(x)] = rows;
  }
  j["matrix"] = m;
  return j.dump();
}

LinearPresentation presentation_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  try {
    const auto& fj = j.at("field");
    auto kind = fj.at("kind").get<std::string>();
    Field f;
    if (kind == "Fp")
      f = Field::prime(fj.at("p").get<std::uint32_t>());
    else if (kind != "Q")
      bad("unknown field kind '" + kind + "'");
    Alphabet a(j.at("alphabet").get<std::vector<std::string>>());
    auto n = j.at("dim").get<std::size_t>();
    auto s = vector(f, j.at("initial"), n, "initial");
    auto g = vector(f, j.at("final"), n, "final");
    const auto& mj = j.at("matrix");
    if (!mj.is_object() || mj.size() != a.size()) bad("matrix needs one entry per letter");
    std::vector<Matrix> M;
    for (const auto& name : a.names()) {
      if (!mj.contains(name)) bad("no matrix for letter '" + name + "'");
      const auto& rows = mj.at(name);
      if (!rows.is_array() || rows.size() != n) bad("matrix " + name + " must have " + std::to_string(n) + " rows");
      std::vector<Vector> r;
      for (const auto& row : rows) r.push_back(vector(f, row, n, "matrix rows"));
      M.push_back(Matrix::from_rows(f, r, n));
    }
    return LinearPresentation(f, std::move(a), std::move(M), std::move(s), std::move(g));
  } catch (const json::exception& e) {
    bad(e.what());
  } catch (const FieldError& e) {
    bad(e.what());
  }
}

std::string to_json(const NormalPresentation& N) {
  auto words = [&](const std::vector<Word>& ws) {
    json j = json::array();
    for (const auto& w : ws) j.push_back(w.to_string(N.alphabet()));
    return j;
  };
  json j;
  j["field"] = field_json(N.field());
  j["alphabet"] = N.alphabet().names();
  j["interior"] = words(N.interior());
  j["epsilon"] = vector_json(N.eps());
  j["leaves"] = words(N.leaves());
  json mu = json::array();
  for (const auto& row : N.mu()) mu.push_back(vector_json(row));
  j["mu"] = mu;
  return j.dump();
}

}  // namespace ncrs
