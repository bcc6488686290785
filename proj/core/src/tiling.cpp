#include "cohesion/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <tuple>

#include <json.hpp>

#include "cohesion/error.hpp"

namespace cohesion {

std::string_view to_string(BoundaryClass c) noexcept {
  switch (c) {
    case BoundaryClass::Confirmed: return "confirmed";
    case BoundaryClass::WeakDistortion: return "weak_distortion";
    case BoundaryClass::Unconfirmed: return "unconfirmed";
  }
  return "unknown";
}

BoundarySet detect_boundaries(const std::vector<double>& v, double min_depth, std::string doc_id) {
  BoundarySet set;
  set.doc_id = std::move(doc_id);
  set.min_depth = min_depth;
  set.signal_length = v.size();

  const std::size_t n = v.size();
  std::size_t l = 0;
  while (l < n) {
    std::size_t r = l;
    while (r + 1 < n && v[r + 1] == v[l]) ++r;
    if (l > 0 && r + 1 < n && v[l - 1] > v[l] && v[r + 1] > v[l]) {
      std::size_t left = l - 1;
      while (left > 0 && v[left - 1] >= v[left]) --left;
      std::size_t right = r + 1;
      while (right + 1 < n && v[right + 1] >= v[right]) ++right;
      const double depth = (v[left] - v[l]) + (v[right] - v[l]);
      if (depth >= min_depth) {
        set.gaps.push_back(l);
        set.depths.emplace(l, depth);
      }
    }
    l = r + 1;
  }
  return set;
}

BoundarySet detect_boundaries(const CohesionSignal& signal, double min_depth) {
  return detect_boundaries(signal.values, min_depth, signal.doc_id);
}

namespace {

void check_lengths(const BoundarySet& a, const BoundarySet& b) {
  if (a.signal_length != b.signal_length) {
    throw Error(ErrorCode::Comparison,
                "boundary sets '" + a.doc_id + "' and '" + b.doc_id +
                    "' come from signals of different length (" + std::to_string(a.signal_length) +
                    " vs " + std::to_string(b.signal_length) + ")");
  }
}

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

double agreement_score(const BoundarySet& a, const BoundarySet& b, double alpha) {
  check_lengths(a, b);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::Config, "alpha must be in (0, 1]");
  }
  const std::size_t total = a.gaps.size() + b.gaps.size();
  if (total == 0) return 1.0;

  const double mean_tile = 2.0 * static_cast<double>(a.signal_length) / static_cast<double>(total + 2);
  const auto w = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(alpha * mean_tile)));

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < a.gaps.size(); ++i) {
    for (std::size_t j = 0; j < b.gaps.size(); ++j) {
      const auto d = distance(a.gaps[i], b.gaps[j]);
      if (d <= w) candidates.emplace_back(d, i, j);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<bool> used_a(a.gaps.size()), used_b(b.gaps.size());
  std::size_t matches = 0;
  for (auto [d, i, j] : candidates) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    ++matches;
  }
  return 2.0 * static_cast<double>(matches) / static_cast<double>(total);
}

BoundaryComparison compare_boundaries(const std::vector<BoundarySet>& sets, std::size_t tolerance,
                                      double alpha) {
  if (sets.size() < 2) throw Error(ErrorCode::Comparison, "need at least 2 boundary sets");
  for (std::size_t i = 1; i < sets.size(); ++i) check_lengths(sets[0], sets[i]);

  BoundaryComparison cmp;
  cmp.inputs = sets;
  cmp.tolerance_used = tolerance;
  cmp.alpha_used = alpha;

  const std::size_t docs = sets.size();
  std::vector<std::set<std::size_t>> open(docs);
  for (std::size_t d = 0; d < docs; ++d) open[d].insert(sets[d].gaps.begin(), sets[d].gaps.end());

  for (;;) {
    std::map<std::size_t, std::size_t> exact;
    for (const auto& gaps : open)
      for (auto g : gaps) ++exact[g];
    if (exact.empty()) break;
    // max_element keeps the first maximum, i.e. the smallest gap on ties
    const std::size_t seed =
        std::max_element(exact.begin(), exact.end(),
                         [](const auto& x, const auto& y) { return x.second < y.second; })
            ->first;

    BoundaryCluster cluster;
    cluster.consensus_gap = seed;
    cluster.supporters.resize(docs);
    std::size_t exact_count = 0;
    bool rest_off_by_one = true;
    double support = 0.0;
    for (std::size_t d = 0; d < docs; ++d) {
      std::optional<std::size_t> pick;
      for (std::size_t delta = 0; delta <= tolerance && !pick; ++delta) {
        if (delta <= seed && open[d].contains(seed - delta)) {
          pick = seed - delta;
        } else if (open[d].contains(seed + delta)) {
          pick = seed + delta;
        }
      }
      if (!pick) {
        rest_off_by_one = false;
        continue;
      }
      open[d].erase(*pick);
      const long offset = static_cast<long>(*pick) - static_cast<long>(seed);
      cluster.supporters[d] = offset;
      if (offset == 0) {
        ++exact_count;
        support += 1.0;
      } else if (offset == 1 || offset == -1) {
        support += 0.5;
      } else {
        rest_off_by_one = false;
      }
    }
    if (exact_count == docs) {
      cluster.cls = BoundaryClass::Confirmed;
    } else if (2 * exact_count > docs && rest_off_by_one) {
      cluster.cls = BoundaryClass::WeakDistortion;
    } else {
      cluster.cls = BoundaryClass::Unconfirmed;
    }
    cluster.strength = support / static_cast<double>(docs);
    cmp.clusters.push_back(std::move(cluster));
  }
  std::stable_sort(cmp.clusters.begin(), cmp.clusters.end(),
                   [](const auto& x, const auto& y) { return x.consensus_gap < y.consensus_gap; });

  cmp.agreement.assign(docs, std::vector<double>(docs, 1.0));
  for (std::size_t i = 0; i < docs; ++i) {
    for (std::size_t j = i + 1; j < docs; ++j) {
      cmp.agreement[i][j] = cmp.agreement[j][i] = agreement_score(sets[i], sets[j], alpha);
    }
  }
  return cmp;
}

std::vector<BoundarySet> repair_boundaries(const BoundaryComparison& comparison) {
  std::vector<BoundarySet> out;
  for (std::size_t d = 0; d < comparison.inputs.size(); ++d) {
    const BoundarySet& in = comparison.inputs[d];
    BoundarySet fixed = in;
    fixed.gaps.clear();
    fixed.depths.clear();
    for (const auto& c : comparison.clusters) {
      const auto& offset = c.supporters[d];
      if (!offset) continue;
      const auto original = static_cast<std::size_t>(static_cast<long>(c.consensus_gap) + *offset);
      const std::size_t gap =
          c.cls == BoundaryClass::WeakDistortion ? c.consensus_gap : original;
      fixed.gaps.push_back(gap);
      auto depth = in.depths.find(original);
      fixed.depths[gap] = depth == in.depths.end() ? 0.0 : depth->second;
    }
    std::sort(fixed.gaps.begin(), fixed.gaps.end());
    out.push_back(std::move(fixed));
  }
  return out;
}

namespace {

nlohmann::ordered_json to_json(const BoundarySet& set) {
  nlohmann::ordered_json j;
  j["doc_id"] = set.doc_id;
  j["signal_length"] = set.signal_length;
  j["min_depth"] = set.min_depth;
  j["gaps"] = set.gaps;
  auto depths = nlohmann::ordered_json::array();
  for (auto g : set.gaps) {
    auto it = set.depths.find(g);
    depths.push_back(it == set.depths.end() ? 0.0 : it->second);
  }
  j["depths"] = depths;
  return j;
}

}  // namespace

std::string write_boundaries_json(const BoundarySet& set) { return to_json(set).dump(2) + "\n"; }

std::string write_comparison_json(const BoundaryComparison& cmp) {
  nlohmann::ordered_json j;
  j["tolerance"] = cmp.tolerance_used;
  j["alpha"] = cmp.alpha_used;
  auto docs = nlohmann::ordered_json::array();
  for (const auto& s : cmp.inputs) docs.push_back(to_json(s));
  j["documents"] = docs;
  auto clusters = nlohmann::ordered_json::array();
  for (const auto& c : cmp.clusters) {
    nlohmann::ordered_json jc;
    jc["consensus_gap"] = c.consensus_gap;
    jc["class"] = to_string(c.cls);
    jc["strength"] = c.strength;
    auto sup = nlohmann::ordered_json::array();
    for (const auto& o : c.supporters) {
      if (o) {
        sup.push_back(*o);
      } else {
        sup.push_back(nullptr);
      }
    }
    jc["supporters"] = sup;
    clusters.push_back(jc);
  }
  j["clusters"] = clusters;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& s : cmp.inputs) labels.push_back(s.doc_id);
  j["agreement"] = {{"labels", labels}, {"cells", cmp.agreement}};
  return j.dump(2) + "\n";
}

std::string format_boundary_table(const BoundaryComparison& cmp) {
  std::size_t width = 6;
  for (const auto& s : cmp.inputs) width = std::max(width, s.doc_id.size() + 2);
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };

  std::string out = pad("gap", 7);
  for (const auto& s : cmp.inputs) out += pad(s.doc_id, width);
  out += pad("class", 17) + "strength\n";
  char buf[32];
  for (const auto& c : cmp.clusters) {
    out += pad(std::to_string(c.consensus_gap), 7);
    for (const auto& o : c.supporters) {
      std::string mark = ".";
      if (o) mark = *o == 0 ? "x" : (*o < 0 ? "<" : ">");
      out += pad(mark, width);
    }
    std::snprintf(buf, sizeof buf, "%.3f", c.strength);
    out += pad(std::string(to_string(c.cls)), 17) + buf + "\n";
  }
  return out;
}

}  // namespace cohesion
