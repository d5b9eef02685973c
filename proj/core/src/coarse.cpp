#include "openmarkov/coarse.hpp"

#include <algorithm>
#include <random>

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

void require_surjective(const FinMap& p) {
  if (!is_surjective(p)) fail(ErrorCode::NotSurjective, "map is not surjective: " + to_string(p));
}

void require_acts_on(const RatMatrix& h, const FinMap& p) {
  if (h.rows() != p.dom().size() || h.cols() != p.dom().size()) {
    fail(ErrorCode::DimensionMismatch, "generator does not act on " + to_string(p.dom()));
  }
}

std::vector<std::vector<std::size_t>> fibers(const FinMap& p) {
  std::vector<std::vector<std::size_t>> out(p.cod().size());
  for (std::size_t x = 0; x < p.dom().size(); ++x) out[p(x)].push_back(x);
  return out;
}

}  // namespace

StochasticSection::StochasticSection(FinMap p, RatMatrix s) : p_(std::move(p)), s_(std::move(s)) {
  if (s_.rows() != p_.dom().size() || s_.cols() != p_.cod().size()) {
    fail(ErrorCode::DimensionMismatch, "section must be |X|x|X'|");
  }
  for (std::size_t c = 0; c < s_.cols(); ++c) {
    Rational total = 0;
    for (std::size_t x = 0; x < s_.rows(); ++x) {
      const int sign = sgn(s_(x, c));
      if (sign < 0) fail(ErrorCode::InvalidSection, "negative entry in column " + p_.cod()[c]);
      if (sign > 0 && p_(x) != c) {
        fail(ErrorCode::InvalidSection,
             "column " + p_.cod()[c] + " puts mass on " + p_.dom()[x] + " outside its fiber");
      }
      total += s_(x, c);
    }
    if (total != 1) fail(ErrorCode::InvalidSection, "column " + p_.cod()[c] + " does not sum to 1");
  }
}

StochasticSection uniform_section(const FinMap& p) {
  require_surjective(p);
  RatMatrix s(p.dom().size(), p.cod().size());
  const auto blocks = fibers(p);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    const Rational mass(1, static_cast<unsigned long>(blocks[c].size()));
    for (std::size_t x : blocks[c]) s(x, c) = mass;
  }
  return StochasticSection(p, std::move(s));
}

StochasticSection random_section(const FinMap& p, std::uint64_t seed) {
  require_surjective(p);
  // Raw engine output with modulo reduction keeps the stream identical
  // across standard libraries.
  std::mt19937_64 engine(seed);
  RatMatrix s(p.dom().size(), p.cod().size());
  const auto blocks = fibers(p);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    const std::size_t cap = std::max<std::size_t>(1, 64 / blocks[c].size());
    std::vector<unsigned long> weights(blocks[c].size());
    unsigned long total = 0;
    for (auto& w : weights) {
      w = static_cast<unsigned long>(engine() % (cap + 1));
      total += w;
    }
    if (total == 0) {
      weights.front() = 1;
      total = 1;
    }
    for (std::size_t k = 0; k < blocks[c].size(); ++k) {
      s(blocks[c][k], c) = Rational(weights[k], total);
      s(blocks[c][k], c).canonicalize();
    }
  }
  return StochasticSection(p, std::move(s));
}

RatMatrix coarse_grain(const RatMatrix& h, const StochasticSection& section) {
  require_acts_on(h, section.map());
  RatMatrix coarse = pushforward_matrix(section.map()) * h * section.matrix();
  if (validate_infinitesimal_stochastic(h) && !validate_infinitesimal_stochastic(coarse)) {
    fail(ErrorCode::Internal, "coarse-grained generator is not infinitesimal stochastic");
  }
  return coarse;
}

bool is_lumpable(const RatMatrix& h, const FinMap& p) {
  require_surjective(p);
  require_acts_on(h, p);
  const RatMatrix collected = pushforward_matrix(p) * h;
  const auto blocks = fibers(p);
  for (const auto& block : blocks) {
    for (std::size_t k = 1; k < block.size(); ++k) {
      for (std::size_t r = 0; r < collected.rows(); ++r) {
        if (collected(r, block[k]) != collected(r, block.front())) return false;
      }
    }
  }
  return true;
}

RatMatrix lumped_generator(const RatMatrix& h, const FinMap& p) {
  if (!is_lumpable(h, p)) fail(ErrorCode::NotLumpable, "p_* H has unequal columns within a fiber");
  const RatMatrix collected = pushforward_matrix(p) * h;
  const auto blocks = fibers(p);
  RatMatrix coarse(p.cod().size(), p.cod().size());
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    for (std::size_t r = 0; r < coarse.rows(); ++r) coarse(r, c) = collected(r, blocks[c].front());
  }
  return coarse;
}

bool validate_morphism(const OpenMarkovMorphism& m) {
  if (!(m.f.dom() == m.source.inputs()) || !(m.f.cod() == m.target.inputs()) ||
      !(m.p.dom() == m.source.states()) || !(m.p.cod() == m.target.states()) ||
      !(m.g.dom() == m.source.outputs()) || !(m.g.cod() == m.target.outputs())) {
    fail(ErrorCode::ShapeMismatch, "(f, p, g) do not fit the source and target processes");
  }
  if (!check_pullback_square(m.f, m.source.input_leg(), m.p, m.target.input_leg())) return false;
  if (!check_pullback_square(m.g, m.source.output_leg(), m.p, m.target.output_leg())) return false;
  const RatMatrix p_push = pushforward_matrix(m.p);
  return p_push * m.source.generator() == m.target.generator() * p_push;
}

OpenMarkovMorphism identity_morphism(const OpenMarkov& m) {
  return OpenMarkovMorphism{m, m, FinMap::identity(m.inputs()), FinMap::identity(m.states()),
                            FinMap::identity(m.outputs())};
}

OpenMarkovMorphism vcompose(const OpenMarkovMorphism& m2, const OpenMarkovMorphism& m1) {
  if (!(m1.target == m2.source)) {
    fail(ErrorCode::ShapeMismatch, "vertical composite needs m1.target == m2.source");
  }
  return OpenMarkovMorphism{m1.source, m2.target, compose_maps(m2.f, m1.f),
                            compose_maps(m2.p, m1.p), compose_maps(m2.g, m1.g)};
}

OpenMarkovMorphism hcompose(const OpenMarkovMorphism& left, const OpenMarkovMorphism& right) {
  if (!(left.source.outputs() == right.source.inputs()) ||
      !(left.target.outputs() == right.target.inputs())) {
    fail(ErrorCode::ShapeMismatch, "2-morphisms are not horizontally composable");
  }
  if (!(left.g == right.f)) {
    fail(ErrorCode::SharedBoundaryMismatch, "left g and right f differ on the shared boundary");
  }
  const PushoutResult top = pushout(left.source.output_leg(), right.source.input_leg());
  const PushoutResult bottom = pushout(left.target.output_leg(), right.target.input_leg());
  // p +_g q is the map out of the top pushout induced by j'p and k'q.
  const FinMap middle =
      induced_map({top.left_leg, top.right_leg},
                  {compose_maps(bottom.left_leg, left.p), compose_maps(bottom.right_leg, right.p)});

  OpenMarkovMorphism result{compose_open(left.source, right.source),
                            compose_open(left.target, right.target), left.f, middle, right.g};
  if (!validate_morphism(result)) {
    fail(ErrorCode::InvalidMorphism, "horizontal composite fails the pullback or intertwining check");
  }
  return result;
}

}  // namespace openmarkov
