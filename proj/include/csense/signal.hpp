#pragma once

#include <algorithm>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "csense/constructions.hpp"
#include "csense/errors.hpp"
#include "csense/omega.hpp"
#include "csense/scalar.hpp"

namespace csense {

/// Length-N vector stored as support T plus the nonzero values on T.
struct SparseSignal {
  int length = 0;
  std::vector<int> support;                    // sorted, distinct
  std::vector<std::complex<double>> values;    // aligned with support, nonzero

  int l0_norm() const { return static_cast<int>(support.size()); }

  double l1_norm() const {
    double s = 0;
    for (const auto& v : values) s += std::abs(v);
    return s;
  }

  ComplexVector<double> to_dense() const {
    ComplexVector<double> x = ComplexVector<double>::Zero(length);
    for (std::size_t i = 0; i < support.size(); ++i) x(support[i]) = values[i];
    return x;
  }

  static SparseSignal from_dense(const ComplexVector<double>& x, double drop_tol = 0.0) {
    SparseSignal s;
    s.length = static_cast<int>(x.size());
    for (int i = 0; i < s.length; ++i) {
      if (std::abs(x(i)) > drop_tol) {
        s.support.push_back(i);
        s.values.push_back(x(i));
      }
    }
    return s;
  }

  void validate() const {
    if (support.size() != values.size()) {
      throw usage_error("SparseSignal: support/value size mismatch");
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i] < 0 || support[i] >= length) {
        throw usage_error("SparseSignal: index out of range");
      }
      if (i > 0 && support[i] <= support[i - 1]) {
        throw usage_error("SparseSignal: support must be strictly sorted");
      }
      if (values[i] == std::complex<double>(0, 0)) {
        throw usage_error("SparseSignal: zero value on support");
      }
    }
  }
};

/// y = f restricted to Omega in the frequency domain, computed through the
/// partial Fourier matrix.
inline ComplexVector<double> dft_measure(const SparseSignal& f, const FrequencySet& omega) {
  if (f.length != omega.modulus) {
    throw usage_error("dft_measure: signal length must equal omega modulus");
  }
  const ComplexMatrix<double> psi = partial_fourier<double>(omega.modulus, omega);
  return psi * f.to_dense();
}

/// CSV layout: one "index,real,imag" line per nonzero.
inline void write_signal_csv(std::ostream& os, const SparseSignal& f) {
  os << "# length=" << f.length << "\n";
  os.precision(17);
  for (std::size_t i = 0; i < f.support.size(); ++i) {
    os << f.support[i] << "," << f.values[i].real() << "," << f.values[i].imag() << "\n";
  }
}

inline SparseSignal read_signal_csv(std::istream& is) {
  SparseSignal f;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("length=");
      if (pos != std::string::npos) f.length = std::stoi(line.substr(pos + 7));
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    try {
      std::getline(ls, tok, ',');
      const int idx = std::stoi(tok);
      std::getline(ls, tok, ',');
      const double re = std::stod(tok);
      double im = 0;
      if (std::getline(ls, tok, ',')) im = std::stod(tok);
      f.support.push_back(idx);
      f.values.emplace_back(re, im);
    } catch (const std::exception&) {
      throw usage_error("read_signal_csv: malformed line '" + line + "'");
    }
  }
  if (f.length == 0 && !f.support.empty()) {
    f.length = *std::max_element(f.support.begin(), f.support.end()) + 1;
  }
  f.validate();
  return f;
}

}  // namespace csense
