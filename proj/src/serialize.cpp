#include "carleman/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace carleman {
namespace {

Json json_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

Json json_array(const std::vector<double>& values) {
  Json array = Json::array();
  for (double v : values) array.push_back(json_or_null(v));
  return array;
}

std::string csv_bool(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

Json report_json(const VerifyReport& report) {
  Json j;
  j["lhs"] = report.lhs;
  j["rhs_factor"] = report.rhs_factor;
  j["constant"] = report.constant;
  j["ratio"] = json_or_null(report.ratio);
  j["holds"] = report.holds;
  return j;
}

Json report_json(const ConstantReport& report) {
  Json j;
  j["horizon"] = report.horizon;
  j["terms"] = json_array(report.terms);
  j["sup_value"] = report.sup_value;
  j["arg_max"] = report.arg_max;
  j["tail_monotone_increasing"] = report.tail_monotone_increasing;
  j["closed_form_limit"] =
      report.closed_form_limit ? Json(*report.closed_form_limit) : Json(nullptr);
  return j;
}

Json report_json(const ConstantComparison& comparison) {
  Json j;
  j["M"] = report_json(comparison.m);
  j["L"] = report_json(comparison.l);
  j["m_le_l"] = comparison.m_le_l;
  j["e_M"] = carleman_constant(comparison.m);
  return j;
}

Json report_json(const ExtremalSolution& solution) {
  Json j;
  j["N"] = solution.n;
  j["mu_N"] = solution.mu_n;
  j["a"] = json_array(solution.a.values);
  j["omegas"] = json_array(solution.omegas);
  j["kkt_residual"] = solution.kkt_residual;
  j["bisection_iterations"] = solution.bisection_iterations;
  return j;
}

Json report_json(const NormEstimate& estimate) {
  Json j;
  j["p"] = estimate.p;
  j["N"] = estimate.n;
  j["lower_bound"] = estimate.lower_bound;
  j["cartlidge_upper"] =
      estimate.cartlidge_upper ? Json(*estimate.cartlidge_upper) : Json(nullptr);
  j["iterations"] = estimate.iterations;
  j["converged"] = estimate.converged;
  j["ratio_warnings"] = estimate.ratio_warnings;
  return j;
}

Json report_json(const Lemma0Bounds& bounds, std::size_t n, double r) {
  Json j;
  j["n"] = n;
  j["r"] = r;
  j["lower"] = bounds.lower;
  j["exact"] = bounds.exact;
  j["upper"] = bounds.upper;
  return j;
}

Json report_json(const std::vector<BennettRow>& rows) {
  Json array = Json::array();
  for (const BennettRow& row : rows) {
    Json j;
    j["alpha"] = row.alpha;
    j["n_max"] = row.n_max;
    j["max_term"] = row.max_term;
    j["bound"] = row.bound;
    j["margin"] = row.margin;
    j["f_min"] = row.f_min;
    array.push_back(std::move(j));
  }
  return array;
}

std::string report_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << "lhs,rhs_factor,constant,ratio,holds\n"
      << format_double(report.lhs) << ',' << format_double(report.rhs_factor) << ','
      << format_double(report.constant) << ',' << format_double(report.ratio) << ','
      << csv_bool(report.holds) << '\n';
  return out.str();
}

std::string report_csv(const ConstantComparison& comparison) {
  std::ostringstream out;
  out << "n,m_term,l_term\n";
  for (std::size_t i = 0; i < comparison.m.terms.size(); ++i) {
    out << (i + 1) << ',' << format_double(comparison.m.terms[i]) << ','
        << format_double(comparison.l.terms[i]) << '\n';
  }
  return out.str();
}

std::string report_csv(const ExtremalSolution& solution) {
  std::ostringstream out;
  out << "k,a,omega\n";
  for (std::size_t k = 1; k <= solution.a.size(); ++k) {
    out << k << ',' << format_double(solution.a.values[k - 1]) << ',';
    if (k <= solution.omegas.size()) out << format_double(solution.omegas[k - 1]);
    out << '\n';
  }
  return out.str();
}

std::string report_csv(const NormEstimate& estimate) {
  std::ostringstream out;
  out << "p,N,lower_bound,cartlidge_upper,iterations,converged,ratio_warnings\n"
      << format_double(estimate.p) << ',' << estimate.n << ','
      << format_double(estimate.lower_bound) << ',';
  if (estimate.cartlidge_upper) out << format_double(*estimate.cartlidge_upper);
  out << ',' << estimate.iterations << ',' << csv_bool(estimate.converged) << ','
      << estimate.ratio_warnings << '\n';
  return out.str();
}

std::string report_csv(const Lemma0Bounds& bounds, std::size_t n, double r) {
  std::ostringstream out;
  out << "n,r,lower,exact,upper\n"
      << n << ',' << format_double(r) << ',' << format_double(bounds.lower) << ','
      << format_double(bounds.exact) << ',' << format_double(bounds.upper) << '\n';
  return out.str();
}

std::string report_csv(const std::vector<BennettRow>& rows) {
  std::ostringstream out;
  out << "alpha,n_max,max_term,bound,margin,f_min\n";
  for (const BennettRow& row : rows) {
    out << format_double(row.alpha) << ',' << row.n_max << ','
        << format_double(row.max_term) << ',' << format_double(row.bound) << ','
        << format_double(row.margin) << ',' << format_double(row.f_min) << '\n';
  }
  return out.str();
}

}  // namespace carleman
