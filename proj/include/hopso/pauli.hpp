#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hopso {

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Tensor product of single-qubit Pauli operators, one character per qubit.
///
/// The character at string position i acts on qubit i, and qubit 0 is the
/// least significant bit of a statevector amplitude index. Ground-state
/// spectra are invariant under any consistent relabeling, so this convention
/// only matters when cross-referencing individual amplitudes.
class PauliString {
 public:
  explicit PauliString(std::string label) : label_(std::move(label)) {
    if (label_.empty())
      throw std::invalid_argument("empty Pauli label");
    for (char c : label_)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw std::invalid_argument(std::string("invalid Pauli character '") +
                                    c + "' in label " + label_);
  }

  const std::string& label() const { return label_; }
  int n_qubits() const { return static_cast<int>(label_.size()); }
  char op(int qubit) const { return label_[static_cast<std::size_t>(qubit)]; }
  bool is_identity() const {
    return label_.find_first_not_of('I') == std::string::npos;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.label_ == b.label_;
  }

 private:
  std::string label_;
};

struct PauliTerm {
  double coefficient;
  PauliString pauli;
};

/// Real-weighted sum of Pauli strings over a fixed qubit count (a qubit
/// Hamiltonian, coefficients in Hartree). Immutable once built apart from
/// add_term; safe for concurrent reads.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
  }

  void add_term(double coefficient, PauliString pauli) {
    if (pauli.n_qubits() != n_qubits_)
      throw std::invalid_argument("Pauli label " + pauli.label() +
                                  " does not match qubit count " +
                                  std::to_string(n_qubits_));
    if (!std::isfinite(coefficient))
      throw std::invalid_argument("non-finite coefficient for label " +
                                  pauli.label());
    terms_.push_back(PauliTerm{coefficient, std::move(pauli)});
  }

  void add_term(double coefficient, const std::string& label) {
    add_term(coefficient, PauliString(label));
  }

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Merge duplicate labels by summing coefficients. First-seen order of the
  /// surviving labels is preserved.
  PauliSum normalized() const {
    PauliSum out(n_qubits_);
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& t : terms_) {
      auto it = index.find(t.pauli.label());
      if (it == index.end()) {
        index.emplace(t.pauli.label(), out.terms_.size());
        out.terms_.push_back(t);
      } else {
        out.terms_[it->second].coefficient += t.coefficient;
      }
    }
    return out;
  }

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

namespace detail {

/// Replace the UTF-8 minus sign U+2212 with ASCII '-'.
inline std::string normalize_minus(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
        static_cast<unsigned char>(in[i + 1]) == 0x88 &&
        static_cast<unsigned char>(in[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

}  // namespace detail

/// Parse the Hamiltonian text format: one `<coefficient> <label>` pair per
/// line, `#` starts a comment, blank lines are ignored. LF and CRLF both
/// accepted; coefficients in decimal or scientific notation; the Unicode
/// minus sign is normalized to ASCII. The qubit count is inferred from the
/// first label.
inline PauliSum parse_pauli_sum(const std::string& text) {
  std::vector<std::pair<double, std::string>> parsed;
  int n_qubits = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw(text.data() + pos, (eol == std::string::npos)
                                                ? text.size() - pos
                                                : eol - pos);
    pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string line = detail::normalize_minus(raw);
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || std::isspace(
                                 static_cast<unsigned char>(line.back()))))
      line.pop_back();

    std::size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    if (start == line.size()) continue;  // blank or comment-only line

    std::size_t sep = start;
    while (sep < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[sep])))
      ++sep;
    std::string coeff_tok = line.substr(start, sep - start);
    while (sep < line.size() &&
           std::isspace(static_cast<unsigned char>(line[sep])))
      ++sep;
    if (sep == line.size())
      throw ParseError(line_no, "expected `<coefficient> <label>`");
    std::string label_tok = line.substr(sep);
    if (label_tok.find_first_of(" \t") != std::string::npos)
      throw ParseError(line_no, "trailing content after label");

    char* end = nullptr;
    double coeff = std::strtod(coeff_tok.c_str(), &end);
    if (end != coeff_tok.c_str() + coeff_tok.size() || !std::isfinite(coeff))
      throw ParseError(line_no, "invalid coefficient `" + coeff_tok + "`");

    for (char c : label_tok)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw ParseError(line_no, std::string("invalid Pauli character '") +
                                      c + "' in label " + label_tok);

    if (n_qubits == 0) {
      n_qubits = static_cast<int>(label_tok.size());
    } else if (static_cast<int>(label_tok.size()) != n_qubits) {
      throw ParseError(line_no,
                       "label length " + std::to_string(label_tok.size()) +
                           " does not match first label length " +
                           std::to_string(n_qubits));
    }
    parsed.emplace_back(coeff, std::move(label_tok));
  }

  if (n_qubits == 0) throw ParseError(line_no, "no terms found");
  PauliSum sum(n_qubits);
  for (auto& [c, label] : parsed) sum.add_term(c, PauliString(std::move(label)));
  return sum;
}

/// Serialize in the same text format parse_pauli_sum reads. Coefficients are
/// printed with enough digits to round-trip exactly.
inline std::string serialize_pauli_sum(const PauliSum& sum) {
  std::string out;
  char buf[64];
  for (const auto& t : sum.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.coefficient);
    out += buf;
    out += ' ';
    out += t.pauli.label();
    out += '\n';
  }
  return out;
}

/// The built-in 4-qubit hydrogen Hamiltonian (Jordan-Wigner form), 14 terms
/// with 5-decimal coefficients.
inline PauliSum h2_hamiltonian() {
  PauliSum h(4);
  h.add_term(-0.80718, "IIII");
  h.add_term(0.17374, "ZIII");
  h.add_term(-0.23047, "ZZII");
  h.add_term(0.17374, "IIZI");
  h.add_term(-0.23047, "IZZZ");
  h.add_term(0.12149, "IZII");
  h.add_term(0.16940, "IZZI");
  h.add_term(-0.04509, "ZXXI");
  h.add_term(0.04509, "XIXZ");
  h.add_term(0.04509, "XIXI");
  h.add_term(-0.04509, "XZXZ");
  h.add_term(0.16658, "ZZZZ");
  h.add_term(0.16658, "ZZZI");
  h.add_term(0.12149, "IZIZ");
  return h;
}

}  // namespace hopso
