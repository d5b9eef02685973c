#include "openmarkov/generators.hpp"

#include <numeric>

#include "openmarkov/error.hpp"

namespace openmarkov {

std::size_t InstanceGenerator::uniform(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

Rational InstanceGenerator::rate() {
  Rational r(static_cast<unsigned long>(uniform(1, 16)), static_cast<unsigned long>(uniform(1, 8)));
  r.canonicalize();
  return r;
}

RatMatrix InstanceGenerator::generator(std::size_t n) {
  RatMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !coin()) continue;
      const Rational r = rate();
      h(i, j) += r;
      h(j, j) -= r;
    }
  }
  return h;
}

FinMap InstanceGenerator::injection(const FinSet& dom, const FinSet& cod) {
  if (dom.size() > cod.size()) fail(ErrorCode::InvalidArgument, "no injection exists");
  std::vector<std::size_t> pool(cod.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> table;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    const std::size_t pick = uniform(k, pool.size() - 1);
    std::swap(pool[k], pool[pick]);
    table.push_back(pool[k]);
  }
  return FinMap(dom, cod, std::move(table));
}

FinMap InstanceGenerator::function(const FinSet& dom, const FinSet& cod) {
  if (!dom.empty() && cod.empty()) fail(ErrorCode::InvalidArgument, "no function exists");
  std::vector<std::size_t> table;
  for (std::size_t k = 0; k < dom.size(); ++k) table.push_back(uniform(0, cod.size() - 1));
  return FinMap(dom, cod, std::move(table));
}

OpenMarkov InstanceGenerator::open_process(const std::string& prefix, std::size_t states,
                                           const FinSet& inputs, const FinSet& outputs) {
  const FinSet x = FinSet::numbered(prefix, states);
  MarkovProcess process(x, generator(states));
  return OpenMarkov(injection(inputs, x), injection(outputs, x), std::move(process));
}

std::pair<OpenMarkov, OpenMarkov> InstanceGenerator::composable_pair(std::size_t max_states,
                                                                     std::size_t max_boundary,
                                                                     const std::string& tag) {
  const std::size_t nx = uniform(1, max_states);
  const std::size_t ny = uniform(1, max_states);
  const std::size_t ns = uniform(0, std::min(max_boundary, nx));
  const std::size_t nt = uniform(0, std::min({max_boundary, nx, ny}));
  const std::size_t nu = uniform(0, std::min(max_boundary, ny));
  const FinSet s = FinSet::numbered(tag + "s", ns);
  const FinSet t = FinSet::numbered(tag + "t", nt);
  const FinSet u = FinSet::numbered(tag + "u", nu);
  OpenMarkov m = open_process(tag + "x", nx, s, t);
  OpenMarkov n = open_process(tag + "y", ny, t, u);
  return {std::move(m), std::move(n)};
}

OpenMarkovMorphism InstanceGenerator::lift(const OpenMarkov& target, std::size_t max_fiber,
                                           const std::map<std::string, std::size_t>& input_fibers,
                                           const std::map<std::string, std::size_t>& output_fibers) {
  const std::size_t n = target.states().size();
  std::vector<std::size_t> sizes(n, 0);
  auto claim = [&](const FinMap& leg, const std::map<std::string, std::size_t>& wanted) {
    for (std::size_t b = 0; b < leg.dom().size(); ++b) {
      const std::size_t x = leg(b);
      if (sizes[x] != 0) continue;
      const auto it = wanted.find(leg.dom()[b]);
      sizes[x] = it != wanted.end() ? it->second : uniform(1, max_fiber);
    }
  };
  claim(target.input_leg(), input_fibers);
  claim(target.output_leg(), output_fibers);
  for (auto& size : sizes) {
    if (size == 0) size = uniform(1, max_fiber);
  }

  std::vector<std::string> labels;
  std::vector<std::size_t> owner;
  std::vector<std::size_t> first(n);
  for (std::size_t x = 0; x < n; ++x) {
    first[x] = labels.size();
    for (std::size_t k = 0; k < sizes[x]; ++k) {
      labels.push_back(target.states()[x] + "." + std::to_string(k));
      owner.push_back(x);
    }
  }
  const FinSet states(labels);
  const FinMap p(states, target.states(), owner);

  // Split each coarse rate nonnegatively over the destination fiber, and give
  // each column arbitrary rates inside its own fiber, compensated on the
  // diagonal, so that p_* H = H' p_*.
  const RatMatrix& coarse = target.generator();
  auto split = [&](const Rational& total, std::size_t parts) {
    std::vector<unsigned long> w(parts);
    unsigned long sum = 0;
    for (auto& x : w) sum += (x = static_cast<unsigned long>(uniform(0, 4)));
    if (sum == 0) sum = w.front() = 1;
    std::vector<Rational> out;
    for (auto x : w) {
      Rational share(x, sum);
      share.canonicalize();
      out.push_back(total * share);
    }
    return out;
  };
  RatMatrix h(states.size(), states.size());
  for (std::size_t j = 0; j < states.size(); ++j) {
    const std::size_t a = owner[j];
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      const auto parts = split(coarse(b, a), sizes[b]);
      for (std::size_t k = 0; k < sizes[b]; ++k) h(first[b] + k, j) = parts[k];
    }
    Rational inner = 0;
    for (std::size_t k = 0; k < sizes[a]; ++k) {
      const std::size_t i = first[a] + k;
      if (i == j || !coin()) continue;
      h(i, j) = rate();
      inner += h(i, j);
    }
    h(j, j) = coarse(a, a) - inner;
  }

  auto boundary = [&](const FinMap& leg) {
    std::vector<std::string> names;
    std::vector<std::size_t> to_state;
    std::vector<std::size_t> to_coarse;
    for (std::size_t b = 0; b < leg.dom().size(); ++b) {
      for (std::size_t k = 0; k < sizes[leg(b)]; ++k) {
        names.push_back(leg.dom()[b] + "." + std::to_string(k));
        to_state.push_back(first[leg(b)] + k);
        to_coarse.push_back(b);
      }
    }
    const FinSet dom(names);
    return std::pair{FinMap(dom, states, to_state), FinMap(dom, leg.dom(), to_coarse)};
  };
  auto [in_leg, f] = boundary(target.input_leg());
  auto [out_leg, g] = boundary(target.output_leg());
  OpenMarkov source(std::move(in_leg), std::move(out_leg), MarkovProcess(states, std::move(h)));
  return OpenMarkovMorphism{std::move(source), target, std::move(f), p, std::move(g)};
}

std::map<std::string, std::size_t> boundary_fibers(const FinMap& boundary_map) {
  std::map<std::string, std::size_t> out;
  for (std::size_t b = 0; b < boundary_map.dom().size(); ++b) ++out[boundary_map.cod()[boundary_map(b)]];
  return out;
}

Square random_pullback_square(InstanceGenerator& gen, std::size_t max_size) {
  const FinSet b = FinSet::numbered("b", gen.uniform(0, max_size));
  const FinSet c = FinSet::numbered("c", gen.uniform(0, max_size));
  const FinSet d = FinSet::numbered("d", gen.uniform(1, max_size));
  const FinMap h = gen.function(b, d);
  const FinMap k = gen.function(c, d);
  const Pullback pb = pullback(h, k);
  return Square{pb.to_left, pb.to_right, h, k};
}

Square random_non_pullback_square(InstanceGenerator& gen, std::size_t max_size) {
  for (;;) {
    const Square sq = random_pullback_square(gen, max_size);
    const std::size_t n = sq.f.dom().size();
    if (n == 0) continue;
    const std::size_t victim = gen.uniform(0, n - 1);
    std::vector<std::string> labels = sq.f.dom().labels();
    std::vector<std::size_t> f_table = sq.f.table();
    std::vector<std::size_t> g_table = sq.g.table();
    if (gen.coin()) {
      labels.push_back(labels[victim] + "'");
      f_table.push_back(f_table[victim]);
      g_table.push_back(g_table[victim]);
    } else {
      labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(victim));
      f_table.erase(f_table.begin() + static_cast<std::ptrdiff_t>(victim));
      g_table.erase(g_table.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    const FinSet a(labels);
    return Square{FinMap(a, sq.f.cod(), f_table), FinMap(a, sq.g.cod(), g_table), sq.h, sq.k};
  }
}

}  // namespace openmarkov
