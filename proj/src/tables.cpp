#include "vt/tables.hpp"

#include <array>
#include <sstream>

namespace vt {

namespace {

std::string pad(const std::string& s, std::size_t w) {
  std::string out = s;
  while (out.size() < w) out += ' ';
  return out;
}

/// Exact classification of a snapped rotation matrix as a Fourier power.
std::string classify_frft_power(const NamedTransform& t) {
  const Sl2cMatrixd& m = t.matrix();
  const auto equals = [&](const Sl2cMatrixd& b) { return (m - b).cwiseAbs().maxCoeff() == 0.0; };
  if (equals(basis_matrix(BasisOp::One))) return "1";
  if (equals(basis_matrix(BasisOp::P))) return "P";
  if (equals(basis_matrix(BasisOp::J))) return "F";
  if (equals(-basis_matrix(BasisOp::J).eval())) return "F^-1";
  return "?";
}

/// The hybrid kernel is e^{-2 pi i e^{-i theta} x u}; classify by the exact
/// phase factor e^{-i theta}.
std::string classify_hybrid(const NamedTransform& t) {
  const LctCoeffs co = t.coeffs();
  const Complex ph = co.invb;  // = e^{-i theta} csc(pi/2)
  if (ph == Complex{1.0, 0.0}) return "J";
  if (ph == Complex{0.0, -1.0}) return "K";
  if (ph == Complex{-1.0, 0.0}) return "J^-1";
  if (ph == Complex{0.0, 1.0}) return "K^-1";
  return "?";
}

}  // namespace

TableResult composition_table_text() {
  static const std::array<std::array<const char*, 4>, 4> pinned = {{
      {"1", "I", "J", "K"},
      {"I", "P", "K", "PJ"},
      {"J", "PK", "P", "I"},
      {"K", "J", "PI", "P"},
  }};
  const auto table = composition_table();
  static const char* heads[4] = {"1", "I", "J", "K"};

  bool ok = true;
  std::ostringstream os;
  os << pad("o", 4) << "|";
  for (const char* h : heads) os << ' ' << pad(h, 3);
  os << '\n' << std::string(4 + 1 + 4 * 4, '-') << '\n';
  for (int r = 0; r < 4; ++r) {
    os << pad(heads[r], 4) << "|";
    for (int c = 0; c < 4; ++c) {
      const std::string label = table[r][c].label();
      ok = ok && (label == pinned[r][c]);
      os << ' ' << pad(label, 3);
    }
    os << '\n';
  }
  return {os.str(), ok};
}

TableResult frft_cycle_table_text() {
  static const char* pinned[5] = {"1", "F", "P", "F^-1", "1"};
  static const char* i_pow[5] = {"1", "i", "-1", "-i", "1"};
  bool ok = true;
  std::ostringstream os;
  os << pad("n", 5) << "|";
  for (int n = 0; n <= 4; ++n) os << ' ' << pad(std::to_string(n), 5);
  os << '\n' << pad("i^n", 5) << "|";
  for (int n = 0; n <= 4; ++n) os << ' ' << pad(i_pow[n], 5);
  os << '\n' << pad("F^n", 5) << "|";
  for (int n = 0; n <= 4; ++n) {
    const std::string label = classify_frft_power(make_frft(n * kPi / 2.0));
    ok = ok && (label == pinned[n]);
    os << ' ' << pad(label, 5);
  }
  os << '\n';
  return {os.str(), ok};
}

TableResult hybrid_table_text() {
  static const char* pinned[5] = {"J", "K", "J^-1", "K^-1", "J"};
  static const char* thetas[5] = {"0", "pi/2", "pi", "3pi/2", "2pi"};
  bool ok = true;
  std::ostringstream os;
  os << pad("theta", 7) << "|";
  for (const char* s : thetas) os << ' ' << pad(s, 5);
  os << '\n' << pad("H", 7) << "|";
  for (int n = 0; n <= 4; ++n) {
    const std::string label = classify_hybrid(make_hybrid(n * kPi / 2.0));
    ok = ok && (label == pinned[n]);
    os << ' ' << pad(label, 5);
  }
  os << '\n';
  return {os.str(), ok};
}

}  // namespace vt
