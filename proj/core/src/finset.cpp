#include "openmarkov/finset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  // The smaller representative wins, so each class is rooted at its first
  // element in X ⊔ Y order.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string fresh_label(const std::string& base, const std::set<std::string, std::less<>>& taken) {
  if (!taken.contains(base)) return base;
  for (std::size_t n = 2;; ++n) {
    std::string candidate = base + "#" + std::to_string(n);
    if (!taken.contains(candidate)) return candidate;
  }
}

}  // namespace

FinSet::FinSet() : data_(std::make_shared<const Data>()) {}

FinSet::FinSet(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->index.emplace(labels[i], i).second) {
      fail(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

FinSet::FinSet(std::initializer_list<std::string> labels)
    : FinSet(std::vector<std::string>(labels)) {}

FinSet FinSet::numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return FinSet(std::move(labels));
}

std::optional<std::size_t> FinSet::find(std::string_view label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorCode::UnknownLabel, "no element '" + std::string(label) + "' in " + to_string(*this));
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

std::string to_string(const FinSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += set[i];
  }
  return out + "}";
}

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    fail(ErrorCode::ShapeMismatch, "map table has " + std::to_string(table_.size()) +
                                       " entries for a domain of size " +
                                       std::to_string(dom_.size()));
  }
  for (std::size_t image : table_) {
    if (image >= cod_.size()) fail(ErrorCode::ShapeMismatch, "map image outside codomain");
  }
}

FinMap FinMap::from_pairs(FinSet dom, FinSet cod,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::optional<std::size_t>> slots(dom.size());
  for (const auto& [from, to] : pairs) {
    const std::size_t a = dom.index_of(from);
    if (slots[a]) fail(ErrorCode::SemanticError, "element '" + from + "' mapped twice");
    slots[a] = cod.index_of(to);
  }
  std::vector<std::size_t> table(dom.size());
  for (std::size_t a = 0; a < dom.size(); ++a) {
    if (!slots[a]) fail(ErrorCode::SemanticError, "element '" + dom[a] + "' is not mapped");
    table[a] = *slots[a];
  }
  return FinMap(std::move(dom), std::move(cod), std::move(table));
}

FinMap FinMap::identity(const FinSet& set) {
  std::vector<std::size_t> table(set.size());
  std::iota(table.begin(), table.end(), std::size_t{0});
  return FinMap(set, set, std::move(table));
}

FinMap FinMap::empty_into(const FinSet& cod) { return FinMap(FinSet{}, cod, {}); }

const std::string& FinMap::operator()(std::string_view label) const {
  return cod_[table_[dom_.index_of(label)]];
}

std::string to_string(const FinMap& map) {
  std::string out = "{";
  for (std::size_t a = 0; a < map.dom().size(); ++a) {
    if (a) out += ", ";
    out += map.dom()[a] + "->" + map.cod()[map(a)];
  }
  return out + "}";
}

FinMap compose_maps(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom())) {
    fail(ErrorCode::CodMismatch,
         "cannot compose: " + to_string(f.cod()) + " vs " + to_string(g.dom()));
  }
  std::vector<std::size_t> table(f.dom().size());
  for (std::size_t a = 0; a < table.size(); ++a) table[a] = g(f(a));
  return FinMap(f.dom(), g.cod(), std::move(table));
}

bool is_injective(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t image : f.table()) {
    if (hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

bool is_surjective(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t image : f.table()) hit[image] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FinMap inverse(const FinMap& f) {
  if (!is_bijective(f)) fail(ErrorCode::ShapeMismatch, "map is not a bijection");
  std::vector<std::size_t> table(f.cod().size());
  for (std::size_t a = 0; a < f.dom().size(); ++a) table[f(a)] = a;
  return FinMap(f.cod(), f.dom(), std::move(table));
}

Coproduct coproduct(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels(a.begin(), a.end());
  std::set<std::string, std::less<>> taken(a.begin(), a.end());
  for (const auto& label : b) {
    std::string fresh = fresh_label(label, taken);
    taken.insert(fresh);
    labels.push_back(std::move(fresh));
  }
  FinSet apex(std::move(labels));

  std::vector<std::size_t> left(a.size()), right(b.size());
  std::iota(left.begin(), left.end(), std::size_t{0});
  std::iota(right.begin(), right.end(), a.size());
  return Coproduct{apex, FinMap(a, apex, std::move(left)), FinMap(b, apex, std::move(right))};
}

FinMap copair(const Coproduct& sum, const FinMap& f, const FinMap& g) {
  if (!(f.dom() == sum.left.dom()) || !(g.dom() == sum.right.dom()) || !(f.cod() == g.cod())) {
    fail(ErrorCode::ShapeMismatch, "copairing needs maps out of the summands into one set");
  }
  std::vector<std::size_t> table(sum.apex.size());
  for (std::size_t a = 0; a < f.dom().size(); ++a) table[sum.left(a)] = f(a);
  for (std::size_t b = 0; b < g.dom().size(); ++b) table[sum.right(b)] = g(b);
  return FinMap(sum.apex, f.cod(), std::move(table));
}

FinMap sum_map(const FinMap& f, const FinMap& g, const Coproduct& dom_sum,
               const Coproduct& cod_sum) {
  if (!(f.cod() == cod_sum.left.dom()) || !(g.cod() == cod_sum.right.dom())) {
    fail(ErrorCode::ShapeMismatch, "sum of maps: codomains do not match the chosen coproduct");
  }
  return copair(dom_sum, compose_maps(cod_sum.left, f), compose_maps(cod_sum.right, g));
}

PushoutResult pushout(const FinMap& o, const FinMap& i_prime) {
  if (!(o.dom() == i_prime.dom())) {
    fail(ErrorCode::FootMismatch,
         "cospan feet differ: " + to_string(o.dom()) + " vs " + to_string(i_prime.dom()));
  }
  if (!is_injective(o) || !is_injective(i_prime)) {
    fail(ErrorCode::NonInjectiveLeg, "pushout requires injective cospan legs");
  }
  const FinSet& x = o.cod();
  const FinSet& y = i_prime.cod();
  const std::size_t nx = x.size();

  DisjointSets classes(nx + y.size());
  for (std::size_t t = 0; t < o.dom().size(); ++t) classes.unite(o(t), nx + i_prime(t));

  // Roots are the least member of each class, so walking X ⊔ Y in order and
  // numbering roots on first sight yields the documented apex order.
  std::vector<std::size_t> apex_of_root(nx + y.size(), SIZE_MAX);
  std::vector<std::string> labels;
  std::set<std::string, std::less<>> taken;
  std::vector<std::size_t> apex_index(nx + y.size());
  for (std::size_t z = 0; z < nx + y.size(); ++z) {
    const std::size_t root = classes.find(z);
    if (apex_of_root[root] == SIZE_MAX) {
      apex_of_root[root] = labels.size();
      std::string label = fresh_label(z < nx ? x[z] : y[z - nx], taken);
      taken.insert(label);
      labels.push_back(std::move(label));
    }
    apex_index[z] = apex_of_root[root];
  }

  FinSet apex(std::move(labels));
  std::vector<std::size_t> left(apex_index.begin(), apex_index.begin() + nx);
  std::vector<std::size_t> right(apex_index.begin() + nx, apex_index.end());
  PushoutResult result{apex, FinMap(x, apex, std::move(left)), FinMap(y, apex, std::move(right))};

  if (!is_injective(result.left_leg) || !is_injective(result.right_leg)) {
    fail(ErrorCode::Internal, "pushout of monic legs produced a non-injective leg");
  }
  return result;
}

bool check_pullback_square(const FinMap& f, const FinMap& i, const FinMap& p,
                           const FinMap& i_prime) {
  if (!(f.dom() == i.dom()) || !(i.cod() == p.dom()) || !(f.cod() == i_prime.dom()) ||
      !(p.cod() == i_prime.cod())) {
    fail(ErrorCode::ShapeMismatch, "maps do not form a square");
  }
  for (std::size_t s = 0; s < f.dom().size(); ++s) {
    if (p(i(s)) != i_prime(f(s))) return false;
  }
  // Commutativity puts every (f(s), i(s)) in the fiber product, so the square
  // is a pullback iff each fiber-product pair is hit exactly once.
  const std::size_t nx = p.dom().size();
  std::vector<std::size_t> hits(f.cod().size() * nx, 0);
  for (std::size_t s = 0; s < f.dom().size(); ++s) ++hits[f(s) * nx + i(s)];
  for (std::size_t s2 = 0; s2 < f.cod().size(); ++s2) {
    for (std::size_t x = 0; x < nx; ++x) {
      if (i_prime(s2) == p(x) && hits[s2 * nx + x] != 1) return false;
    }
  }
  return true;
}

Pullback pullback(const FinMap& h, const FinMap& k) {
  if (!(h.cod() == k.cod())) fail(ErrorCode::ShapeMismatch, "pullback needs a common codomain");
  std::vector<std::string> labels;
  std::vector<std::size_t> left, right;
  for (std::size_t b = 0; b < h.dom().size(); ++b) {
    for (std::size_t c = 0; c < k.dom().size(); ++c) {
      if (h(b) != k(c)) continue;
      labels.push_back("(" + h.dom()[b] + "," + k.dom()[c] + ")");
      left.push_back(b);
      right.push_back(c);
    }
  }
  FinSet apex(std::move(labels));
  return Pullback{apex, FinMap(apex, h.dom(), std::move(left)),
                  FinMap(apex, k.dom(), std::move(right))};
}

FinMap induced_map(const std::vector<FinMap>& legs, const std::vector<FinMap>& images) {
  if (legs.empty() || legs.size() != images.size()) {
    fail(ErrorCode::ShapeMismatch, "induced map needs one image per leg");
  }
  const FinSet& apex = legs.front().cod();
  const FinSet& target = images.front().cod();
  std::vector<std::optional<std::size_t>> slots(apex.size());
  for (std::size_t n = 0; n < legs.size(); ++n) {
    if (!(legs[n].cod() == apex) || !(images[n].cod() == target) ||
        !(legs[n].dom() == images[n].dom())) {
      fail(ErrorCode::ShapeMismatch, "cocone legs do not share an apex");
    }
    for (std::size_t a = 0; a < legs[n].dom().size(); ++a) {
      auto& slot = slots[legs[n](a)];
      if (slot && *slot != images[n](a)) {
        fail(ErrorCode::ShapeMismatch, "cocone does not factor: '" + apex[legs[n](a)] +
                                           "' has two images");
      }
      slot = images[n](a);
    }
  }
  std::vector<std::size_t> table(apex.size());
  for (std::size_t z = 0; z < apex.size(); ++z) {
    if (!slots[z]) fail(ErrorCode::ShapeMismatch, "legs are not jointly surjective");
    table[z] = *slots[z];
  }
  return FinMap(apex, target, std::move(table));
}

FinMap match_cocones(const std::vector<FinMap>& legs, const std::vector<FinMap>& other_legs) {
  FinMap u = induced_map(legs, other_legs);
  if (!is_bijective(u)) fail(ErrorCode::ShapeMismatch, "colimit apexes are not in bijection");
  return u;
}

}  // namespace openmarkov
