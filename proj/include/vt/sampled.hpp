#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "vt/chirp.hpp"
#include "vt/types.hpp"

namespace vt {

/// Complex samples on a uniform grid x0 + k*dx.
struct SampledSignal {
  double x0 = 0.0;
  double dx = 1.0;
  VectorXc values;

  SampledSignal() = default;
  SampledSignal(double x0_, double dx_, VectorXc v) : x0(x0_), dx(dx_), values(std::move(v)) {
    validate();
  }

  void validate() const {
    if (!(dx > 0.0)) throw std::invalid_argument("SampledSignal: dx must be positive");
    if (values.size() == 0) throw std::invalid_argument("SampledSignal: empty");
    for (Eigen::Index i = 0; i < values.size(); ++i)
      if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
        throw std::invalid_argument("SampledSignal: non-finite sample");
  }

  int size() const { return int(values.size()); }
  double x_at(int i) const { return x0 + i * dx; }
};

template <typename Scalar>
SampledSignal sample(const GaussianChirp<Scalar>& f, double x0, double dx, int n) {
  if (!(dx > 0.0) || n < 1) throw std::invalid_argument("sample: need dx > 0 and n >= 1");
  VectorXc v(n);
  for (int i = 0; i < n; ++i) v[i] = eval_chirp(f, Complex(x0 + i * dx, 0.0));
  return SampledSignal(x0, dx, std::move(v));
}

template <typename Scalar>
SampledSignal sample(const PolyChirp<Scalar>& f, double x0, double dx, int n) {
  if (!(dx > 0.0) || n < 1) throw std::invalid_argument("sample: need dx > 0 and n >= 1");
  VectorXc v(n);
  for (int i = 0; i < n; ++i) v[i] = eval_chirp(f, Complex(x0 + i * dx, 0.0));
  return SampledSignal(x0, dx, std::move(v));
}

// -------- CSV: header "x,re,im" (or "u,re,im"), one row per sample --------

inline std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const SampledSignal& s, const std::string& axis = "u") {
  os << axis << ",re,im\n";
  for (int i = 0; i < s.size(); ++i)
    os << format_float(s.x_at(i)) << ',' << format_float(s.values[i].real()) << ','
       << format_float(s.values[i].imag()) << '\n';
}

inline SampledSignal read_csv(std::istream& is) {
  std::string line;
  std::vector<double> xs;
  std::vector<Complex> vs;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string fx, fre, fim;
    if (!std::getline(row, fx, ',') || !std::getline(row, fre, ',') || !std::getline(row, fim, ','))
      throw std::invalid_argument("CSV: expected three comma-separated columns");
    if (first) {
      first = false;
      char* end = nullptr;
      std::strtod(fx.c_str(), &end);
      if (end == fx.c_str()) continue;  // header row
    }
    xs.push_back(std::stod(fx));
    vs.push_back(Complex(std::stod(fre), std::stod(fim)));
  }
  if (xs.size() < 1) throw std::invalid_argument("CSV: no samples");
  double dx = 1.0;
  if (xs.size() >= 2) {
    dx = (xs.back() - xs.front()) / double(xs.size() - 1);
    if (!(dx > 0.0)) throw std::invalid_argument("CSV: grid must be increasing");
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (std::abs(xs[i] - (xs.front() + double(i) * dx)) > 1e-9 * std::max(1.0, std::abs(dx) * double(xs.size())))
        throw std::invalid_argument("CSV: grid is not uniform");
  }
  VectorXc v(Eigen::Index(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) v[Eigen::Index(i)] = vs[i];
  return SampledSignal(xs.front(), dx, std::move(v));
}

inline void write_csv_file(const std::string& path, const SampledSignal& s, const std::string& axis = "u") {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(os, s, axis);
}

inline SampledSignal read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_csv(is);
}

}  // namespace vt
