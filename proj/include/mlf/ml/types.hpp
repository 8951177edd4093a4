#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace mlf {

using cplx = std::complex<double>;

/// Parameters of E^gamma_{alpha,beta}; gamma = 1 is the two-parameter function.
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

enum class Method { series, asymptotic, mellin_barnes, hankel, order_reduction, closed_form };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::asymptotic: return "asymptotic";
    case Method::mellin_barnes: return "mellin_barnes";
    case Method::hankel: return "hankel";
    case Method::order_reduction: return "order_reduction";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

/// A value with its estimated absolute error and the method that produced it.
struct EvalReport {
  cplx value{};
  double abs_err = 0.0;
  Method method = Method::series;
  int terms = 0;
};

/// E_{(1/rho_j), (mu_j)}(z): one parameter pair per index.
struct MultiIndexParams {
  std::vector<double> rho;
  std::vector<double> mu;
};

/// pPsi_q with upper pairs (a_j, A_j) and lower pairs (b_j, B_j).
struct WrightParams {
  std::vector<std::pair<double, double>> upper;
  std::vector<std::pair<double, double>> lower;
};

}  // namespace mlf
