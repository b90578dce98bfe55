#include "qmts/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qmts {

namespace {

nlohmann::json matrix_to_json(const Matrix& m, int dim) {
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return nlohmann::json{{"dim", dim}, {"re", re}, {"im", im}};
}

Matrix matrix_from_json(const nlohmann::json& j, Eigen::Index side) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array())
    throw std::invalid_argument("json: 're' and 'im' must be arrays");
  if (re.size() != static_cast<std::size_t>(side * side) || im.size() != re.size())
    throw std::invalid_argument("json: entry count does not match dim");
  Matrix m(side, side);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j2 = 0; j2 < side; ++j2, ++idx)
      m(i, j2) = Complex(re[idx].get<double>(), im[idx].get<double>());
  return m;
}

}  // namespace

nlohmann::json operator_to_json(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("operator_to_json: square required");
  return matrix_to_json(a, static_cast<int>(a.rows()));
}

Matrix operator_from_json(const nlohmann::json& j) {
  const int d = j.at("dim").get<int>();
  if (d < 1) throw std::invalid_argument("json: dim must be positive");
  return matrix_from_json(j, d);
}

nlohmann::json superoperator_to_json(const Superoperator& s) {
  return matrix_to_json(s.matrix(), s.dim());
}

Superoperator superoperator_from_json(const nlohmann::json& j) {
  const int d = j.at("dim").get<int>();
  if (d < 1) throw std::invalid_argument("json: dim must be positive");
  return Superoperator(d, matrix_from_json(j, static_cast<Eigen::Index>(d) * d));
}

Superoperator load_superoperator(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  in >> j;
  return superoperator_from_json(j);
}

void save_superoperator(const Superoperator& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << superoperator_to_json(s).dump(2) << '\n';
}

}  // namespace qmts
