#include <bit>

#include "metrec/errors.hpp"
#include "metrec/recognizers.hpp"

namespace metrec {

static Verdict order_rejection(Family family, std::string method, std::size_t m, const char* expected) {
  Verdict v;
  v.family = family;
  v.method = std::move(method);
  v.rejection = Rejection{"order", {}, {std::to_string(m)}, std::string("requires ") + expected};
  v.trail.push_back({"order", false});
  return v;
}

std::vector<Verdict> recognize_family(const DistanceMatrix& d, std::string_view family,
                                      std::string_view method) {
  std::vector<Verdict> out;
  const auto m = d.order();
  const bool auto_mode = family == "auto";
  if (family == "hypercube" || auto_mode) {
    bool count = method != "layers" || auto_mode;
    bool layers = method != "count" || auto_mode;
    if (auto_mode && !std::has_single_bit(m)) {
      if (count) out.push_back(order_rejection(Family::hypercube_all_useful, "count", m, "a power of two"));
      if (layers) out.push_back(order_rejection(Family::hypercube_all_useful, "layers", m, "a power of two"));
    } else {
      if (count) out.push_back(recognize_hypercube_by_count(d));
      if (layers) out.push_back(recognize_hypercube_by_layers(d));
    }
  }
  if (family == "q3" || auto_mode) {
    if (auto_mode && m != 8)
      out.push_back(order_rejection(Family::q3_general, "", m, "order 8"));
    else
      out.push_back(recognize_q3_general(d));
  }
  if (family == "petersen" || auto_mode) {
    if (auto_mode && m != 10)
      out.push_back(order_rejection(Family::petersen, "", m, "order 10"));
    else
      out.push_back(recognize_petersen(d));
  }
  if (family == "tree" || auto_mode) out.push_back(recognize_tree(d));
  return out;
}

}  // namespace metrec
