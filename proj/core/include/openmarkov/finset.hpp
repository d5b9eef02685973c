#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace openmarkov {

/// A finite set of distinct labels. The label order is the basis order of
/// R^X everywhere downstream, so equality is order-sensitive.
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<std::string> labels);
  FinSet(std::initializer_list<std::string> labels);

  /// {prefix0, prefix1, ..., prefix(n-1)}
  static FinSet numbered(std::string_view prefix, std::size_t n);

  std::size_t size() const noexcept { return data_->labels.size(); }
  bool empty() const noexcept { return data_->labels.empty(); }

  const std::string& operator[](std::size_t i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  auto begin() const noexcept { return data_->labels.begin(); }
  auto end() const noexcept { return data_->labels.end(); }

  std::optional<std::size_t> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  /// Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> index;
  };
  std::shared_ptr<const Data> data_;
};

std::string to_string(const FinSet& set);

/// A total function between finite sets, stored as an index table.
class FinMap {
 public:
  FinMap() = default;
  /// Throws ShapeMismatch if the table length differs from |dom| or an entry
  /// falls outside cod.
  FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> table);

  /// Builds a map from (source label, target label) pairs. Every dom element
  /// must appear exactly once.
  static FinMap from_pairs(FinSet dom, FinSet cod,
                           const std::vector<std::pair<std::string, std::string>>& pairs);
  static FinMap identity(const FinSet& set);
  /// The unique map from the empty set.
  static FinMap empty_into(const FinSet& cod);

  const FinSet& dom() const noexcept { return dom_; }
  const FinSet& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  std::size_t operator()(std::size_t i) const { return table_[i]; }
  const std::string& operator()(std::string_view label) const;

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

std::string to_string(const FinMap& map);

/// g ∘ f. Throws CodMismatch unless f.cod() == g.dom().
FinMap compose_maps(const FinMap& g, const FinMap& f);

bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);
inline bool is_bijective(const FinMap& f) { return is_injective(f) && is_surjective(f); }

/// Inverse of a bijection. Throws ShapeMismatch otherwise.
FinMap inverse(const FinMap& f);

struct Coproduct {
  FinSet apex;
  FinMap left;
  FinMap right;
};

/// A + B with A's labels first. Colliding labels from B get "#2", "#3", ...
Coproduct coproduct(const FinSet& a, const FinSet& b);

/// The copairing [f, g] : A + B -> Z.
FinMap copair(const Coproduct& sum, const FinMap& f, const FinMap& g);

/// f + g : A1 + A2 -> B1 + B2 between two chosen coproducts.
FinMap sum_map(const FinMap& f, const FinMap& g, const Coproduct& dom_sum,
               const Coproduct& cod_sum);

struct PushoutResult {
  FinSet apex;
  FinMap left_leg;   // X -> apex
  FinMap right_leg;  // Y -> apex
};

/// Pushout of the injective cospan X <-o- T -i'-> Y.
///
/// The apex lists the classes that contain an X element first (in X order,
/// labelled by their least X element), then the Y-only classes (in Y order,
/// labelled by their least Y element). A Y-only label that collides with an
/// earlier apex label gets a "#2", "#3", ... suffix.
PushoutResult pushout(const FinMap& o, const FinMap& i_prime);

/// Decides whether the square
///
///     S --i--> X
///     |f       |p
///     S' -i'-> X'
///
/// commutes and is a pullback. Throws ShapeMismatch if the maps do not form a
/// square.
bool check_pullback_square(const FinMap& f, const FinMap& i, const FinMap& p,
                           const FinMap& i_prime);

struct Pullback {
  FinSet apex;
  FinMap to_left;   // apex -> B
  FinMap to_right;  // apex -> C
};

/// The canonical fiber product B ×_D C of h : B -> D and k : C -> D, with
/// elements listed in (b, c) lexicographic order and labelled "(b,c)".
Pullback pullback(const FinMap& h, const FinMap& k);

/// Given a jointly surjective family of legs A_k -> K and maps A_k -> Z, returns
/// the unique u : K -> Z with u ∘ leg_k = image_k. Throws ShapeMismatch if the
/// legs are not jointly surjective or the images disagree on some element.
FinMap induced_map(const std::vector<FinMap>& legs, const std::vector<FinMap>& images);

/// The bijection between two colimit apexes of the same diagram, read off by
/// matching classes. Throws ShapeMismatch if the matching is not bijective.
FinMap match_cocones(const std::vector<FinMap>& legs, const std::vector<FinMap>& other_legs);

}  // namespace openmarkov
