#include "swapnet/schmidt.hpp"

#include <cmath>
#include <stdexcept>

#include "swapnet/numeric.hpp"

namespace swapnet {

namespace {

double entropy_term(double p) {
  return p <= 0.0 ? 0.0 : -p * std::log2(p);  // 0 log 0 = 0
}

// (min(a,b) / max(a,b))^m. Quotients of the raw powers a^m, b^m would
// underflow near m = 700; the ratio power stays in [0, 1] for any m and
// keeps every derived quantity conditioned.
double ratio_power(int m, const SchmidtParameter& sp) {
  if (m == 0) return 1.0;
  const double ratio = sp.a() >= sp.b() ? sp.b() / sp.a() : sp.a() / sp.b();
  return std::pow(ratio, m);
}

}  // namespace

SchmidtParameter::SchmidtParameter(double a, double b)
    : a_(a), b_(b), log_a_(std::log(a)), log_b_(b == 0.0 ? kNegInf : std::log(b)) {}

SchmidtParameter::SchmidtParameter(double a)
    : SchmidtParameter(a, std::sqrt(std::fmax(0.0, 1.0 - a * a))) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("Schmidt coefficient a must lie in (0, 1]");
}

SchmidtParameter SchmidtParameter::from_a_squared(double a_squared) {
  if (!(a_squared > 0.0 && a_squared <= 1.0))
    throw std::invalid_argument("a_squared must lie in (0, 1]");
  // Deriving b from the given a^2 keeps a == b exact at a_squared = 1/2.
  return SchmidtParameter(std::sqrt(a_squared), std::sqrt(1.0 - a_squared));
}

EtaIndex::EtaIndex(int m_in) : m(m_in) {
  if (m < 0) throw std::invalid_argument("Schmidt index must be nonnegative");
}

XiIndex::XiIndex(int m_in, int parties_in) : m(m_in), parties(parties_in) {
  if (m < 0) throw std::invalid_argument("Schmidt index must be nonnegative");
  if (parties < 2) throw std::invalid_argument("xi state needs at least 2 parties");
}

double log_norm_squared(int m, const SchmidtParameter& sp) {
  if (m < 0) throw std::invalid_argument("Schmidt index must be nonnegative");
  return log_sum_exp(scaled_log(m, 2.0 * sp.log_a()), scaled_log(m, 2.0 * sp.log_b()));
}

double normalization(EtaIndex idx, const SchmidtParameter& sp) {
  return std::exp(0.5 * log_norm_squared(idx.m, sp));
}

double normalization(XiIndex idx, const SchmidtParameter& sp) {
  return normalization(EtaIndex(idx.m), sp);
}

StateAmplitudes amplitudes(EtaIndex idx, const SchmidtParameter& sp) {
  const double t = ratio_power(idx.m, sp);
  const double scale = 1.0 / std::sqrt(1.0 + t * t);
  if (sp.a() >= sp.b()) return {scale, t * scale};
  return {t * scale, scale};
}

StateAmplitudes amplitudes(XiIndex idx, const SchmidtParameter& sp) {
  return amplitudes(EtaIndex(idx.m), sp);
}

double concurrence(EtaIndex idx, const SchmidtParameter& sp) {
  const double t = ratio_power(idx.m, sp);
  return 2.0 * t / (1.0 + t * t);
}

double concurrence(XiIndex idx, const SchmidtParameter& sp) {
  return concurrence(EtaIndex(idx.m), sp);
}

double entanglement_entropy(EtaIndex idx, const SchmidtParameter& sp) {
  const double t = ratio_power(idx.m, sp);
  const double t2 = t * t;
  return entropy_term(1.0 / (1.0 + t2)) + entropy_term(t2 / (1.0 + t2));
}

double entanglement_entropy(XiIndex idx, const SchmidtParameter& sp) {
  return entanglement_entropy(EtaIndex(idx.m), sp);
}

}  // namespace swapnet
