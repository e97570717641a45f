#include "qse/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace qse {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

TargetState parse_target_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("target file is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("target file must be a JSON object");
  }
  if (!doc.contains("M") || !doc["M"].is_number_integer()) {
    throw std::invalid_argument("target field \"M\" missing or not an integer");
  }
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw std::invalid_argument("target field \"coeffs\" missing or not an array");
  }
  TargetState t;
  t.M = doc["M"].get<int>();
  for (const auto& v : doc["coeffs"]) {
    if (!v.is_number()) {
      throw std::invalid_argument("target field \"coeffs\" must contain only real numbers");
    }
    t.coeffs.push_back(v.get<double>());
  }
  validate_target(t);
  return t;
}

TargetState read_target_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open target file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_target_json(buf.str());
}

void write_target_json(const TargetState& t, std::ostream& out) {
  out << "{\"M\": " << t.M << ", \"coeffs\": [";
  for (size_t n = 0; n < t.coeffs.size(); ++n) {
    if (n) out << ", ";
    out << format_real(t.coeffs[n]);
  }
  out << "]}\n";
}

void write_matrix_csv(const ComplexMatrix& m, std::ostream& out) {
  out << "i,j,re,im\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const Complex v = m(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      out << i << ',' << j << ',' << format_real(v.real()) << ','
          << format_real(v.imag()) << '\n';
    }
  }
}

ComplexMatrix read_matrix_csv(std::istream& in, int dim) {
  std::string line;
  if (!std::getline(in, line) || line != "i,j,re,im") {
    throw std::invalid_argument("matrix CSV must start with header i,j,re,im");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &i, &j, &re, &im) != 4) {
      throw std::invalid_argument("malformed matrix CSV row: " + line);
    }
    if (i < 0 || i >= dim || j < 0 || j >= dim) {
      throw std::invalid_argument("matrix CSV index outside dimension " +
                                  std::to_string(dim));
    }
    m(i, j) = Complex(re, im);
  }
  return m;
}

void write_state_csv(const StateVector& s, std::ostream& out) {
  out << "n,re,im\n";
  for (int n = 0; n < s.dim(); ++n) {
    out << n << ',' << format_real(s.amplitudes(n).real()) << ','
        << format_real(s.amplitudes(n).imag()) << '\n';
  }
}

StateVector read_state_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,re,im") {
    throw std::invalid_argument("state CSV must start with header n,re,im");
  }
  std::vector<Complex> amps;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int n = 0;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf", &n, &re, &im) != 3) {
      throw std::invalid_argument("malformed state CSV row: " + line);
    }
    if (n != static_cast<int>(amps.size())) {
      throw std::invalid_argument("state CSV rows must enumerate levels in order");
    }
    amps.emplace_back(re, im);
  }
  if (amps.empty()) throw std::invalid_argument("state CSV contains no levels");
  StateVector s{ComplexVector(amps.size())};
  for (size_t n = 0; n < amps.size(); ++n) s.amplitudes(n) = amps[n];
  return s;
}

void write_normal_form_csv(const NormalForm& nf, std::ostream& out) {
  out << "p,q,coefficient\n";
  for (const auto& [pq, c] : nf.terms) {
    out << pq.first << ',' << pq.second << ',' << format_real(c) << '\n';
  }
}

void write_fidelity_csv(const FidelityTrace& trace, std::ostream& out) {
  out << "t,fidelity\n";
  for (size_t i = 0; i < trace.times.size(); ++i) {
    out << format_real(trace.times[i]) << ',' << format_real(trace.fidelities[i])
        << '\n';
  }
}

void write_coeffs_csv(const InterpolationPolynomial& p, std::ostream& out) {
  out << "l,numerator,denominator\n";
  for (size_t l = 0; l < p.coeffs.size(); ++l) {
    out << l << ',' << boost::multiprecision::numerator(p.coeffs[l]).str() << ','
        << boost::multiprecision::denominator(p.coeffs[l]).str() << '\n';
  }
}

}  // namespace qse
