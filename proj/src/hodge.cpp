#include "jacring/hodge.hpp"

#include <numeric>

namespace jacring {

int socle_degree(int n, int d) {
  if (n < 1 || d < 1) throw InputError("socle_degree needs n >= 1 and d >= 1");
  return (n + 2) * (d - 2);
}

int hodge_degree(int n, int d, int p) {
  if (p < 0 || p > n) {
    throw InputError("Hodge index p = " + std::to_string(p) + " outside 0.." +
                     std::to_string(n));
  }
  return (p + 1) * d - (n + 2);
}

HypersurfaceContext HypersurfaceContext::make(int n, int d) {
  HypersurfaceContext ctx{n, d, socle_degree(n, d), {}, d};
  for (int p = 0; p <= n; ++p) ctx.hodge_degrees.push_back(hodge_degree(n, d, p));
  return ctx;
}

std::string to_string(CIClass c) {
  switch (c) {
    case CIClass::GeneralType: return "GeneralType";
    case CIClass::CalabiYau: return "CalabiYau";
    case CIClass::FanoOrQuadric: return "FanoOrQuadric";
  }
  return "?";
}

CIContext classify_ci(int n, int c, const std::vector<int>& degrees) {
  if (c < 1) throw InputError("codimension must be at least 1");
  if (degrees.size() != static_cast<std::size_t>(c)) {
    throw InputError("expected " + std::to_string(c) + " degrees, got " +
                     std::to_string(degrees.size()));
  }
  for (int d : degrees) {
    if (d < 2) throw InputError("complete intersection degrees must be >= 2");
  }
  const int kappa = std::accumulate(degrees.begin(), degrees.end(), 0) - (n + c + 1);
  CIClass cls = kappa > 0    ? CIClass::GeneralType
                : kappa == 0 ? CIClass::CalabiYau
                             : CIClass::FanoOrQuadric;
  return CIContext{n, c, degrees, kappa, cls, c == 1 && degrees[0] == 2};
}

int weighted_socle(const std::vector<int>& weights, const std::vector<int>& degrees) {
  if (weights.empty() || degrees.empty()) {
    throw InputError("weighted_socle needs nonempty weights and degrees");
  }
  for (int v : weights) {
    if (v < 1) throw InputError("weights must be positive");
  }
  for (int v : degrees) {
    if (v < 1) throw InputError("degrees must be positive");
  }
  return std::accumulate(degrees.begin(), degrees.end(), 0) -
         std::accumulate(weights.begin(), weights.end(), 0);
}

}  // namespace jacring
