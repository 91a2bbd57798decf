#include "jacring/lefschetz.hpp"

namespace jacring {

std::string to_string(LefschetzMode m) {
  return m == LefschetzMode::Weak ? "WLP" : "SLP";
}

std::string to_string(HFObstruction::Kind k) {
  switch (k) {
    case HFObstruction::Kind::NoObstruction: return "NoObstruction";
    case HFObstruction::Kind::NotSymmetric: return "NotSymmetric";
    case HFObstruction::Kind::NotUnimodal: return "NotUnimodal";
  }
  return "?";
}

std::string to_string(WitnessOutcome o) {
  switch (o) {
    case WitnessOutcome::Witness: return "Witness";
    case WitnessOutcome::NoneFound: return "NoneFound";
    case WitnessOutcome::Obstructed: return "Obstructed";
  }
  return "?";
}

HFObstruction hf_obstruction(std::vector<std::size_t> h) {
  while (!h.empty() && h.back() == 0) h.pop_back();
  HFObstruction out;
  out.hilbert_function = h;
  if (h.empty()) return out;
  const std::size_t top = h.size() - 1;
  for (std::size_t k = 0; 2 * k <= top; ++k) {
    if (h[k] != h[top - k]) {
      out.kind = HFObstruction::Kind::NotSymmetric;
      out.degree = static_cast<int>(k);
      return out;
    }
  }
  bool decreased = false;
  for (std::size_t k = 0; k + 1 < h.size(); ++k) {
    if (h[k + 1] < h[k]) decreased = true;
    if (decreased && h[k + 1] > h[k]) {
      out.kind = HFObstruction::Kind::NotUnimodal;
      out.degree = static_cast<int>(k);
      return out;
    }
  }
  return out;
}

}  // namespace jacring
