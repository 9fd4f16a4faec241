#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trajsearch/quantum_search.hpp"

namespace trajsearch {

Statevector::Statevector(unsigned n_qubits) : n_(n_qubits) {
  if (n_qubits > kMaxQubits) throw std::length_error("Statevector: too many qubits");
  amp_.assign(std::size_t{1} << n_qubits, 0.0);
  amp_[0] = 1.0;
}

void Statevector::hadamard(unsigned qubit) {
  if (qubit >= n_) throw std::out_of_range("Statevector::hadamard: no such qubit");
  const std::size_t bit = std::size_t{1} << qubit;
  const double s = 1.0 / std::numbers::sqrt2;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (i & bit) continue;
    const double a = amp_[i];
    const double b = amp_[i | bit];
    amp_[i] = s * (a + b);
    amp_[i | bit] = s * (a - b);
  }
}

void Statevector::hadamard_all() {
  for (unsigned q = 0; q < n_; ++q) hadamard(q);
}

void Statevector::phase_flip(std::span<const Index> marked) {
  for (Index k : marked) {
    if (k >= amp_.size()) throw std::out_of_range("Statevector::phase_flip: state out of range");
    amp_[k] = -amp_[k];
  }
}

void Statevector::reflect_zero() {
  for (std::size_t i = 1; i < amp_.size(); ++i) amp_[i] = -amp_[i];
}

void Statevector::diffusion() {
  hadamard_all();
  reflect_zero();
  hadamard_all();
}

void Statevector::invert_about_mean() {
  double mean = 0.0;
  for (double a : amp_) mean += a;
  mean /= static_cast<double>(amp_.size());
  for (double& a : amp_) a = 2.0 * mean - a;
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (double a : amp_) s += a * a;
  return s;
}

double Statevector::probability(std::span<const Index> states) const {
  double p = 0.0;
  for (Index k : states) p += amp_.at(k) * amp_.at(k);
  return p;
}

std::vector<double> statevector_grover(unsigned n_qubits, std::span<const Index> marked,
                                       std::uint64_t r) {
  if (marked.empty()) throw std::invalid_argument("statevector_grover: no marked state");
  Statevector sv(n_qubits);
  std::vector<Index> sorted(marked.begin(), marked.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("statevector_grover: duplicate marked state");
  sv.hadamard_all();
  for (std::uint64_t i = 0; i < r; ++i) {
    sv.phase_flip(sorted);
    sv.diffusion();
  }
  auto a = sv.amplitudes();
  return {a.begin(), a.end()};
}

}  // namespace trajsearch
