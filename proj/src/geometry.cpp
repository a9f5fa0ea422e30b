#include "cgx/geometry.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace cgx {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidInput("ground set must contain at least one element");
  if (names_.size() > kMaxElements) {
    throw InvalidInput("ground set has " + std::to_string(names_.size()) + " elements; at most " +
                       std::to_string(kMaxElements) + " are supported");
  }
  for (ElementId i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidInput("element names must be nonempty");
    if (!index_.emplace(names_[i], i).second) {
      throw InvalidInput("duplicate element name '" + names_[i] + "'");
    }
  }
}

GroundSet GroundSet::letters(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  return GroundSet(std::move(names));
}

std::optional<ElementId> GroundSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroundSet::index_of(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InvalidInput("unknown element '" + std::string(name) + "'");
}

Subset GroundSet::subset_of(const std::vector<std::string>& names) const {
  Subset s;
  for (const auto& name : names) s = s.with(index_of(name));
  return s;
}

std::vector<std::string> GroundSet::names_of(Subset s) const {
  std::vector<std::string> out;
  s.for_each([&](ElementId e) { out.push_back(names_.at(e)); });
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElementId e) {
    if (!first) out += ",";
    out += names_.at(e);
    first = false;
  });
  return out + "}";
}

ConvexGeometry::ConvexGeometry(GroundSet ground, std::vector<Subset> convex)
    : ground_(std::move(ground)), members_(std::move(convex)) {
  const Subset full = ground_.full();
  for (Subset s : members_) {
    if (!s.is_subset_of(full)) throw InvalidInput("family member is not a subset of the ground set");
  }
  std::sort(members_.begin(), members_.end(), SubsetOrder{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  index_.insert(members_.begin(), members_.end());
  if (!contains(Subset{})) throw InvalidInput("family must contain the empty set");
  if (!contains(full)) throw InvalidInput("family must contain the ground set");
}

AxiomReport check_axioms(const ConvexGeometry& g) {
  AxiomReport report;
  const Subset full = g.ground().full();
  report.contains_empty_and_ground = g.contains(Subset{}) && g.contains(full);

  const auto& m = g.members();
  for (std::size_t i = 0; i < m.size() && report.intersection_closed; ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!g.contains(m[i] & m[j])) {
        report.intersection_closed = false;
        report.intersection_witness = std::make_pair(m[i], m[j]);
        break;
      }
    }
  }

  for (Subset x : m) {
    if (x == full) continue;
    bool extends = false;
    (full - x).for_each([&](ElementId e) { extends = extends || g.contains(x.with(e)); });
    if (!extends) {
      report.extensible = false;
      report.extension_witness = x;
      break;
    }
  }
  return report;
}

Subset closure(const ConvexGeometry& g, Subset a) {
  Subset result = g.ground().full();
  for (Subset s : g.members()) {
    if (a.is_subset_of(s)) result = result & s;
  }
  return result;
}

std::optional<AntiExchangeViolation> find_anti_exchange_violation(const ConvexGeometry& g) {
  const Subset full = g.ground().full();
  for (Subset x : g.members()) {
    const auto outside = (full - x).elements();
    for (std::size_t i = 0; i < outside.size(); ++i) {
      const Subset hull_y = closure(g, x.with(outside[i]));
      for (std::size_t j = i + 1; j < outside.size(); ++j) {
        if (!hull_y.contains(outside[j])) continue;
        if (closure(g, x.with(outside[j])).contains(outside[i])) {
          return AntiExchangeViolation{x, outside[i], outside[j]};
        }
      }
    }
  }
  return std::nullopt;
}

AntiExchangeReport check_anti_exchange(const ConvexGeometry& g) {
  if (!check_axioms(g).pass()) {
    throw InvalidInput("anti-exchange check requires a family satisfying the convex geometry axioms");
  }
  AntiExchangeReport report;
  report.violation = find_anti_exchange_violation(g);
  report.pass = !report.violation.has_value();
  return report;
}

bool equals(const ConvexGeometry& a, const ConvexGeometry& b) { return a == b; }

std::optional<Subset> first_difference(const ConvexGeometry& a, const ConvexGeometry& b) {
  std::vector<Subset> diff;
  std::set_symmetric_difference(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                                std::back_inserter(diff), SubsetOrder{});
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

ConvexGeometry relabel(const ConvexGeometry& g, const GroundSet& target) {
  if (g.n() != target.size()) throw InvalidInput("cannot relabel between ground sets of different sizes");
  Bijection psi(g.n());
  for (ElementId e = 0; e < g.n(); ++e) {
    auto image = target.find(g.ground().name(e));
    if (!image) throw InvalidInput("element '" + g.ground().name(e) + "' is missing from the target ground set");
    psi[e] = *image;
  }
  std::vector<Subset> members;
  members.reserve(g.size());
  for (Subset s : g.members()) members.push_back(apply_bijection(psi, s));
  return ConvexGeometry(target, std::move(members));
}

Subset apply_bijection(const Bijection& psi, Subset s) {
  Subset out;
  s.for_each([&](ElementId e) { out = out.with(psi[e]); });
  return out;
}

namespace {

// Number of members containing each element.
std::vector<std::size_t> element_frequencies(const ConvexGeometry& g) {
  std::vector<std::size_t> freq(g.n(), 0);
  for (Subset s : g.members()) s.for_each([&](ElementId e) { ++freq[e]; });
  return freq;
}

}  // namespace

std::optional<Bijection> is_isomorphic(const ConvexGeometry& a, const ConvexGeometry& b,
                                       std::size_t limit) {
  require_within_limit(std::max(a.n(), b.n()), limit, "isomorphism search");
  if (a.n() != b.n() || a.size() != b.size()) return std::nullopt;

  const auto fa = element_frequencies(a);
  const auto fb = element_frequencies(b);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  Bijection psi(a.n());
  std::iota(psi.begin(), psi.end(), ElementId{0});
  do {
    bool frequencies_match = true;
    for (ElementId e = 0; e < a.n() && frequencies_match; ++e) frequencies_match = fa[e] == fb[psi[e]];
    if (!frequencies_match) continue;
    // Equal family sizes plus an injective image make one direction sufficient.
    bool maps = std::all_of(a.members().begin(), a.members().end(),
                            [&](Subset s) { return b.contains(apply_bijection(psi, s)); });
    if (maps) return psi;
  } while (std::next_permutation(psi.begin(), psi.end()));
  return std::nullopt;
}

}  // namespace cgx
